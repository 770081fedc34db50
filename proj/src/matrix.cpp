#include "conckit/matrix.hpp"

#include "conckit/error.hpp"

#include <utility>

namespace conckit {

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw Error("DimensionMismatch", "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Inertia inertia(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw Error("NotSymmetric", "inertia requires a symmetric matrix");
  RatMatrix a = to_rational(symmetric);
  const std::size_t n = a.rows();
  Inertia result;
  auto swap_index = [&](std::size_t p, std::size_t q) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        swap_index(k, p);
      } else {
        // All remaining diagonal entries vanish. Adding basis vector q to k
        // (a congruence) gives diagonal 2*a(k,q) when that entry is nonzero.
        std::size_t q = k + 1;
        while (q < n && a(k, q) == 0) ++q;
        if (q == n) {
          ++result.zero;  // row k is identically zero in the remaining block
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) a(k, j) += a(q, j);
        for (std::size_t i = 0; i < n; ++i) a(i, k) += a(i, q);
      }
    }
    const Rational pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
    if (pivot > 0)
      ++result.positive;
    else
      ++result.negative;
  }
  return result;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace conckit
