#include "conckit/lattice.hpp"

#include "conckit/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace conckit {

namespace {

Integer mod2(const Integer& z) {
  Integer r = z % 2;
  return r < 0 ? Integer(r + 2) : r;
}

IntVector row_times(std::span<const Integer> v, const IntMatrix& q) {
  IntVector out(q.cols(), Integer(0));
  for (std::size_t i = 0; i < q.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < q.cols(); ++j) out[j] += v[i] * q(i, j);
  }
  return out;
}

IntForm negated(const IntForm& f) { return IntForm(Integer(-1) * f.matrix()); }

// A solution of x Q = diag(Q) over GF(2). One always exists because
// x -> x Q x^T is linear mod 2 and vanishes on ker(Q mod 2).
IntVector parity_solution(const IntMatrix& q) {
  const std::size_t n = q.rows();
  std::vector<std::vector<int>> m(n, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<int>(mod2(q(i, j)));
    m[i][n] = static_cast<int>(mod2(q(i, i)));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != row && m[r][col])
        for (std::size_t c = col; c <= n; ++c) m[r][c] ^= m[row][c];
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (m[r][n]) throw Error("InternalError", "parity system for characteristic vectors is inconsistent");
  IntVector x(n, Integer(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][n];
  return x;
}

bool matches_chain(const IntMatrix& q, int sign) {
  const std::size_t n = q.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long expected = 0;
      if (i == j)
        expected = sign * (i == 0 ? 1 : 2);
      else if (i + 1 == j || j + 1 == i)
        expected = sign;
      if (q(i, j) != expected) return false;
    }
  return true;
}

// Unimodular U with first row x, for primitive x.
IntMatrix complete_to_unimodular(const IntVector& x) {
  const std::size_t r = x.size();
  IntVector cur = x;
  IntMatrix inv = IntMatrix::identity(r);  // inverse of the accumulated column operations
  while (true) {
    std::size_t best = r;
    for (std::size_t i = 0; i < r; ++i)
      if (cur[i] != 0 && (best == r || abs(cur[i]) < abs(cur[best]))) best = i;
    if (best == r) throw Error("InternalError", "cannot complete the zero vector");
    bool reduced = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == best || cur[j] == 0) continue;
      const Integer q = cur[j] / cur[best];
      cur[j] -= q * cur[best];  // column j -= q * column best
      for (std::size_t c = 0; c < r; ++c) inv(best, c) += q * inv(j, c);
      if (cur[j] != 0) reduced = false;
    }
    if (reduced) {
      if (best != 0) {
        std::swap(cur[0], cur[best]);
        for (std::size_t c = 0; c < r; ++c) std::swap(inv(0, c), inv(best, c));
      }
      if (cur[0] == -1) {
        cur[0] = 1;
        for (std::size_t c = 0; c < r; ++c) inv(0, c) = -inv(0, c);
      }
      if (cur[0] != 1) throw Error("InternalError", "vector is not primitive");
      return inv;
    }
  }
}

std::optional<IntVector> find_unit_vector(const IntMatrix& positive) {
  std::optional<IntVector> found;
  enumerate_short_vectors(positive, Integer(1), [&](const IntVector& x, const Integer& value) -> std::optional<Integer> {
    if (!found && value == 1) {
      found = x;
      return Integer(0);  // shrink the search; nothing else is needed
    }
    return std::nullopt;
  });
  return found;
}

std::optional<StandardBasis> peel(const IntMatrix& q, int sign) {
  const std::size_t n = q.rows();
  IntMatrix basis = IntMatrix::identity(n);  // rows in original coordinates
  std::vector<IntVector> peeled;
  while (basis.rows() > 0) {
    const IntMatrix gram = basis * q * basis.transposed();
    const auto x = find_unit_vector(Integer(sign) * gram);
    if (!x) return std::nullopt;
    const std::size_t r = basis.rows();
    IntMatrix u = complete_to_unimodular(*x);
    // Make rows 2..r orthogonal to x: u_i -= (u_i . x)/(x . x) x, x . x = sign.
    const IntVector gx = row_times(*x, gram);
    IntMatrix rest(r - 1, r);
    for (std::size_t i = 1; i < r; ++i) {
      Integer dot = 0;
      for (std::size_t c = 0; c < r; ++c) dot += u(i, c) * gx[c];
      for (std::size_t c = 0; c < r; ++c) rest(i - 1, c) = u(i, c) - Integer(sign) * dot * (*x)[c];
    }
    IntMatrix xrow(1, r);
    for (std::size_t c = 0; c < r; ++c) xrow(0, c) = (*x)[c];
    const IntMatrix v = xrow * basis;
    peeled.emplace_back(v.cols());
    for (std::size_t c = 0; c < v.cols(); ++c) peeled.back()[c] = v(0, c);
    basis = rest * basis;
  }
  StandardBasis out{IntMatrix(n, n), sign};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.basis(i, j) = peeled[i][j];
  return out;
}

CharSearch extremal_char(const IntForm& f, int sign) {
  const std::size_t n = f.rank();
  if (auto std_basis = diagonalize_to_standard(f)) {
    IntVector witness(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) witness[j] += std_basis->basis(i, j);
    return CharSearch{Integer(sign) * Integer(n), witness, "standard-basis", Integer(0), 0};
  }
  // Minimise x A x^T over characteristic x, A = sign * Q positive definite,
  // starting from the radius of a 0/1 parity solution.
  const IntMatrix a = Integer(sign) * f.matrix();
  IntVector best = parity_solution(f.matrix());
  Integer best_value = form_eval(IntForm(a), best);
  const Integer radius = best_value;
  const std::size_t visited = enumerate_short_vectors(
      a, radius, [&](const IntVector& x, const Integer& value) -> std::optional<Integer> {
        if (!is_characteristic(f, x)) return std::nullopt;
        if (value < best_value || (value == best_value && x < best)) {
          best_value = value;
          best = x;
          return value;
        }
        return std::nullopt;
      });
  return CharSearch{Integer(sign) * best_value, best, "enumeration", radius, visited};
}

bool sylvester_definite(const IntMatrix& q, int sign) {
  // Leading minors of sign * Q must all be positive.
  const IntMatrix a = Integer(sign) * q;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = a(i, j);
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

}  // namespace

IntForm::IntForm(IntMatrix q) : q_(std::move(q)) {
  if (!q_.is_symmetric()) throw Error("NotSymmetric", "form matrix must be square and symmetric");
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::NegativeDefinite:
      return "negative-definite";
    case Definiteness::PositiveDefinite:
      return "positive-definite";
    case Definiteness::Indefinite:
      return "indefinite";
    case Definiteness::Degenerate:
      return "degenerate";
  }
  return {};
}

IntForm build_qk(std::size_t k) {
  if (k == 0) throw Error("InvalidArgument", "k must be positive");
  IntMatrix q(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    q(i, i) = i == 0 ? -1 : -2;
    if (i + 1 < k) q(i, i + 1) = q(i + 1, i) = -1;
  }
  return IntForm(std::move(q));
}

IntForm build_positive_chain(std::size_t k) { return negated(build_qk(k)); }

Integer form_eval(const IntForm& f, std::span<const Integer> v) {
  if (v.size() != f.rank())
    throw Error("DimensionMismatch", "vector of length " + std::to_string(v.size()) + " for a rank " +
                                         std::to_string(f.rank()) + " form");
  const IntMatrix& q = f.matrix();
  Integer total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (q(i, j) != 0 && v[j] != 0) row += q(i, j) * v[j];
    total += v[i] * row;
  }
  return total;
}

Definiteness definiteness(const IntForm& f) {
  const Inertia in = inertia(f.matrix());
  if (in.zero > 0) return Definiteness::Degenerate;
  if (in.positive == 0) return Definiteness::NegativeDefinite;
  if (in.negative == 0) return Definiteness::PositiveDefinite;
  return Definiteness::Indefinite;
}

bool is_characteristic(const IntForm& f, std::span<const Integer> v) {
  if (v.size() != f.rank()) throw Error("DimensionMismatch", "characteristic test dimension mismatch");
  const IntVector vq = row_times(v, f.matrix());
  for (std::size_t i = 0; i < f.rank(); ++i)
    if (mod2(vq[i] - f.matrix()(i, i)) != 0) return false;
  return true;
}

std::optional<StandardBasis> diagonalize_to_standard(const IntForm& f) {
  const Definiteness d = definiteness(f);
  int sign = 0;
  if (d == Definiteness::NegativeDefinite)
    sign = -1;
  else if (d == Definiteness::PositiveDefinite)
    sign = 1;
  else
    return std::nullopt;
  const std::size_t n = f.rank();
  if (f.matrix() == Integer(sign) * IntMatrix::identity(n)) return StandardBasis{IntMatrix::identity(n), sign};
  if (n > 0 && matches_chain(f.matrix(), sign)) {
    // Q = sign * T^T T with T the upper bidiagonal all-ones matrix, so the
    // rows of (T^-1)^T, p_i = sum_{j <= i} (-1)^(i-j) e_j, are orthonormal
    // up to sign.
    StandardBasis out{IntMatrix(n, n), sign};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) out.basis(i, j) = ((i - j) % 2 == 0) ? 1 : -1;
    return out;
  }
  return peel(f.matrix(), sign);
}

CharSearch max_char_square(const IntForm& f) {
  if (definiteness(f) != Definiteness::NegativeDefinite)
    throw Error("KindMismatch", "max_char_square needs a negative-definite form");
  return extremal_char(f, -1);
}

CharSearch min_char_square(const IntForm& f) {
  if (f.rank() == 0 || definiteness(f) != Definiteness::PositiveDefinite)
    throw Error("KindMismatch", "min_char_square needs a positive-definite form");
  return extremal_char(f, 1);
}

std::size_t enumerate_short_vectors(
    const IntMatrix& a, const Integer& radius,
    const std::function<std::optional<Integer>(const IntVector&, const Integer&)>& visit) {
  const std::size_t n = a.rows();
  if (n == 0) {
    visit({}, Integer(0));
    return 1;
  }
  // Q(x) = sum_i q(i,i) * (x_i + sum_{j>i} q(i,j) x_j)^2
  RatMatrix q = to_rational(a);
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw Error("KindMismatch", "enumeration needs a positive-definite form");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }

  Rational bound(radius);
  IntVector x(n, Integer(0));
  std::size_t visited = 0;
  const std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t i, const Rational& used) {
    Rational centre = 0;
    for (std::size_t j = i + 1; j < n; ++j) centre -= q(i, j) * Rational(x[j]);
    const Rational room = bound - used;
    if (room < 0) return;
    const double width = std::sqrt(static_cast<double>(room / q(i, i)));
    const double c = static_cast<double>(centre);
    const Integer lo(static_cast<long long>(std::ceil(c - width)) - 1);
    const Integer hi(static_cast<long long>(std::floor(c + width)) + 1);
    for (Integer xi = lo; xi <= hi; ++xi) {
      const Rational diff = Rational(xi) - centre;
      const Rational term = q(i, i) * diff * diff;
      if (used + term > bound) continue;
      x[i] = xi;
      if (i == 0) {
        ++visited;
        const Rational total = used + term;
        if (auto lowered = visit(x, boost::multiprecision::numerator(total))) bound = Rational(*lowered);
      } else {
        descend(i - 1, used + term);
      }
    }
    x[i] = 0;
  };
  descend(n - 1, Rational(0));
  return visited;
}

std::string to_string(CobordismKind k) {
  switch (k) {
    case CobordismKind::NegativeDefinite:
      return "negdef";
    case CobordismKind::PositiveDefinite:
      return "posdef";
    case CobordismKind::RationalHomologyCobordism:
      return "rational-homology-cobordism";
  }
  return {};
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::AtLeast:
      return ">=";
    case Relation::AtMost:
      return "<=";
    case Relation::Equal:
      return "=";
  }
  return {};
}

BoundCertificate d_bound(const Rational& d_y0, const IntForm& f, CobordismKind kind) {
  BoundCertificate cert;
  cert.kind = kind;
  cert.d_y0 = d_y0;
  cert.rank = f.rank();
  cert.form = f.matrix();
  const Rational rank(static_cast<long long>(f.rank()));
  switch (kind) {
    case CobordismKind::NegativeDefinite: {
      if (f.rank() == 0 || definiteness(f) != Definiteness::NegativeDefinite)
        throw Error("KindMismatch", "form is " + to_string(definiteness(f)) + ", expected negative-definite");
      CharSearch s = max_char_square(f);
      cert.char_square = s.square;
      cert.witness = std::move(s.witness);
      cert.method = s.method;
      cert.relation = Relation::AtLeast;
      cert.bound = d_y0 + (Rational(cert.char_square) + rank) / 4;
      break;
    }
    case CobordismKind::PositiveDefinite: {
      if (f.rank() == 0 || definiteness(f) != Definiteness::PositiveDefinite)
        throw Error("KindMismatch", "form is " + to_string(definiteness(f)) + ", expected positive-definite");
      CharSearch s = min_char_square(f);
      cert.char_square = s.square;
      cert.witness = std::move(s.witness);
      cert.method = s.method;
      cert.relation = Relation::AtMost;
      cert.bound = d_y0 + (Rational(cert.char_square) - rank) / 4;
      break;
    }
    case CobordismKind::RationalHomologyCobordism:
      if (f.rank() != 0)
        throw Error("KindMismatch", "a rational homology cobordism has no intersection form to record");
      cert.char_square = 0;
      cert.method = "equality";
      cert.relation = Relation::Equal;
      cert.bound = d_y0;
      break;
  }
  return cert;
}

std::optional<std::string> certificate_problem(const BoundCertificate& cert) {
  if (!cert.form.is_symmetric()) return "form is not symmetric";
  if (cert.form.rows() != cert.rank) return "rank does not match the form";
  const Rational rank(static_cast<long long>(cert.rank));
  if (cert.kind == CobordismKind::RationalHomologyCobordism) {
    if (cert.rank != 0) return "rational homology cobordism carries a nonempty form";
    if (cert.relation != Relation::Equal) return "rational homology cobordism must give equality";
    if (cert.bound != cert.d_y0) return "equality bound differs from d(Y0)";
    return std::nullopt;
  }
  const bool negative = cert.kind == CobordismKind::NegativeDefinite;
  if (cert.rank == 0) return "definite cobordism with empty form";
  if (!sylvester_definite(cert.form, negative ? -1 : 1))
    return std::string("leading minors do not certify ") + (negative ? "negative" : "positive") + " definiteness";
  const IntForm f(cert.form);
  if (cert.witness.size() != cert.rank) return "witness has the wrong length";
  if (!is_characteristic(f, cert.witness)) return "witness is not characteristic";
  if (form_eval(f, cert.witness) != cert.char_square) return "witness square differs from the recorded value";
  if (negative) {
    if (cert.relation != Relation::AtLeast) return "negative-definite cobordism must give a lower bound";
    if (cert.bound != cert.d_y0 + (Rational(cert.char_square) + rank) / 4) return "bound arithmetic is wrong";
  } else {
    if (cert.relation != Relation::AtMost) return "positive-definite cobordism must give an upper bound";
    if (cert.bound != cert.d_y0 + (Rational(cert.char_square) - rank) / 4) return "bound arithmetic is wrong";
  }
  return std::nullopt;
}

}  // namespace conckit
