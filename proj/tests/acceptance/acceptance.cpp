// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is non-zero if any criterion fails.

#include "conckit/braid.hpp"
#include "conckit/cli.hpp"
#include "conckit/error.hpp"
#include "conckit/lattice.hpp"
#include "conckit/obstruction.hpp"
#include "conckit/pattern.hpp"
#include "conckit/serialize.hpp"
#include "conckit/surgery.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

using namespace conckit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

Integer quad(const IntMatrix& q, const IntVector& v) {
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * q(i, j) * v[j];
  return s;
}

bool parity_ok(const IntMatrix& q, const IntVector& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * q(i, j);
    if ((s - q(j, j)) % 2 != 0) return false;
  }
  return true;
}

Integer isqrt_floor(const Integer& n) {
  Integer r = boost::multiprecision::sqrt(n);
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Family closed form for n >= -2 evaluated at an integer point.
Rational family_closed_form_at(long long n, long long t) {
  const Rational x(t);
  auto pw = [&](long long e) {
    Rational r = 1;
    for (long long i = 0; i < e; ++i) r *= x;
    return r;
  };
  return (x - 1) * (x - 1) * (pw(2 * n + 4) + 1) + (2 * x * x - 3 * x + 2) * pw(n + 2);
}

// ----------------------------------------------------------------- criteria

Outcome family_determinant_criterion() {
  Outcome o;
  for (long long n = -20; n <= 20; ++n) {
    int code = -1;
    const std::string got = cli_out({"det", "--family-n", std::to_string(n)}, &code);
    const std::string want = n % 2 == 0 ? "15\n" : "1\n";
    const long long m = n >= -2 ? n : -4 - n;
    const Rational oracle_det = abs(family_closed_form_at(m, -1));
    o.expect(code == 0 && got == want, "det --family-n " + std::to_string(n) + " printed '" + got + "'");
    o.expect(oracle_det == (n % 2 == 0 ? 15 : 1), "closed form disagrees at n = " + std::to_string(n));
  }
  return o;
}

Outcome duality_criterion() {
  Outcome o;
  for (long long n = -12; n <= 12; ++n)
    o.expect(equal_up_to_units(family_alexander(n), family_alexander(-4 - n)),
             "duality fails at n = " + std::to_string(n));
  int sampled = 0;
  while (sampled < 100) {
    const long long n = oracle::uniform(-12, 12);
    const long long m = oracle::uniform(-40, 40);
    if (m == n || m == -4 - n) continue;
    ++sampled;
    // distinct polynomials differ at some sample point after normalization
    const LaurentPoly a = family_alexander(n), b = family_alexander(m);
    o.expect(!(a == b), "family polynomials coincide for " + std::to_string(n) + ", " + std::to_string(m));
    bool differs = false;
    for (long long t : {2, 3, 5})
      differs = differs || a.eval(Integer(t)) != b.eval(Integer(t));
    o.expect(differs, "sample values coincide for " + std::to_string(n) + ", " + std::to_string(m));
  }
  return o;
}

Outcome d_y0_criterion() {
  Outcome o;
  const auto fixtures = load_default_fixtures();
  const KnotFixture five2 = find_fixture(fixtures, "5_2");
  const SeifertMatrix v = seifert_matrix(five2.braid);
  const long long sigma = signature(v);
  o.expect(sigma == -2, "sigma(5_2) = " + std::to_string(sigma));
  // 2 min{0, -ceil(-sigma/4)}
  const long long ceil_term = (-sigma + 3) / 4;
  const long long oracle_d = 2 * std::min(0LL, -ceil_term);
  o.expect(oracle_d == -2, "formula oracle");
  o.expect(d_alternating_one_surgery(sigma) == oracle_d, "d_alternating_one_surgery");
  const AlternatingSurgeryCertificate c = d_y0(fixtures);
  o.expect(c.d == -2 && c.signature == -2, "d_y0 = " + to_string(c.d));
  return o;
}

Outcome qk_criterion() {
  Outcome o;
  for (std::size_t k = 1; k <= 64; ++k) {
    const std::string tag = " (k = " + std::to_string(k) + ")";
    const IntForm f = build_qk(k);
    const IntMatrix& q = f.matrix();
    bool shape = q.rows() == k && q.cols() == k;
    for (std::size_t i = 0; shape && i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        long long want = 0;
        if (i == j) want = i == 0 ? -1 : -2;
        else if (i + 1 == j || j + 1 == i) want = -1;
        shape = shape && q(i, j) == want;
      }
    o.expect(shape, "Q_k entries" + tag);
    o.expect(definiteness(f) == Definiteness::NegativeDefinite, "definiteness" + tag);
    for (int trial = 0; trial < 1000; ++trial) {
      IntVector v(k);
      for (auto& x : v) x = oracle::uniform(-1000, 1000);
      Integer squares = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) squares -= (v[i] + v[i + 1]) * (v[i] + v[i + 1]);
      squares -= v[k - 1] * v[k - 1];
      if (form_eval(f, v) != squares) {
        o.expect(false, "sum-of-squares identity" + tag);
        break;
      }
    }
    const CharSearch s = max_char_square(f);
    o.expect(s.square == -static_cast<long long>(k), "max char square" + tag);
    o.expect(parity_ok(q, s.witness) && quad(q, s.witness) == s.square, "witness" + tag);
  }
  return o;
}

Outcome char_oracle_criterion() {
  Outcome o;
  int done = 0;
  while (done < 200) {
    IntMatrix q(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) q(i, j) = q(j, i) = oracle::uniform(-6, 0);
    const Integer m2 = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
    if (!(q(0, 0) < 0 && m2 > 0 && oracle::det(q) < 0)) continue;
    ++done;
    const IntMatrix a = Integer(-1) * q;
    // any characteristic vector in {0,1}^3 bounds the search
    Integer m = -1;
    for (int bits = 0; bits < 8 && m < 0; ++bits) {
      IntVector v{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1};
      if (parity_ok(q, v)) m = quad(a, v);
    }
    const RatMatrix inv = oracle::inverse(to_rational(a));
    Integer bound[3];
    for (int i = 0; i < 3; ++i) {
      const Rational cap = Rational(m) * inv(i, i);
      bound[i] = isqrt_floor(boost::multiprecision::numerator(cap) / boost::multiprecision::denominator(cap)) + 1;
    }
    Integer best = -m;
    for (Integer x = -bound[0]; x <= bound[0]; ++x)
      for (Integer y = -bound[1]; y <= bound[1]; ++y)
        for (Integer z = -bound[2]; z <= bound[2]; ++z) {
          const IntVector v{x, y, z};
          if (parity_ok(q, v)) best = std::max(best, quad(q, v));
        }
    const CharSearch s = max_char_square(IntForm(q));
    o.expect(s.square == best, "disagreement on " + to_string(q));
    o.expect(parity_ok(q, s.witness) && quad(q, s.witness) == s.square, "bad witness on " + to_string(q));
  }
  return o;
}

Outcome cf_criterion() {
  Outcome o;
  for (long long p = -100; p <= 100; ++p)
    for (long long q = 1; q <= 100; ++q) {
      if (std::gcd(p, q) != 1) continue;
      o.expect(cf_evaluate(cf_expand(p, q)) == Rational(p, q),
               "round trip " + std::to_string(p) + "/" + std::to_string(q));
    }
  for (long long k = 1; k <= 100; ++k) {
    std::vector<Integer> neg{Integer(-1)}, pos{Integer(1)};
    for (long long i = 1; i < k; ++i) {
      neg.emplace_back(-2);
      pos.emplace_back(2);
    }
    o.expect(cf_expand(-1, k) == neg, "-1/" + std::to_string(k));
    o.expect(cf_expand(1, k) == pos, "1/" + std::to_string(k));
  }
  return o;
}

Outcome lift_criterion() {
  Outcome o;
  for (long long k = 1; k <= 20; ++k)
    for (long long lk : {1LL, -1LL, 3LL}) {
      const auto f = BlackboardFraming::from_coefficient(Rational(-1, 2 * k), 0);
      const auto lifts = lift_framing(f, lk, 0);
      o.expect(lifts.size() == 1 && lifts[0].coefficient() == Rational(-1, k) && lifts[0].m == f.m,
               "eta lift, k = " + std::to_string(k));
    }
  const auto g = BlackboardFraming::from_coefficient(Rational(1), 2);
  o.expect(g.m == -1 && g.b == 1, "gamma framing curve");
  const auto lifts = lift_framing(g, 0, 2);
  o.expect(lifts.size() == 2, "gamma lifts to two curves");
  for (const auto& l : lifts) o.expect(l.coefficient() == 1 && l.writhe == 2, "gamma lift coefficient");
  return o;
}

PatternExpr random_expr(int depth) {
  using E = PatternExpr;
  if (depth == 0 || oracle::uniform(0, 4) == 0) {
    switch (oracle::uniform(0, 2)) {
      case 0: return E::gen("J");
      case 1: return E::sum("K", oracle::uniform(0, 1) == 1);
      default: return E::bar(E::gen("J"));
    }
  }
  switch (oracle::uniform(0, 4)) {
    case 0: return E::twist(oracle::uniform(-6, 6), random_expr(depth - 1));
    case 1: return E::bar(random_expr(depth - 1));
    case 2: return E::dual(random_expr(depth - 1));
    default: return E::compose(random_expr(depth - 1), random_expr(depth - 1));
  }
}

Outcome pattern_criterion() {
  using E = PatternExpr;
  Outcome o;
  const E J = E::gen("J");
  o.expect(dual(J) == E::twist(-4, J), "dual(J) = twist(-4, J)");
  for (int trial = 0; trial < 1000; ++trial) {
    const E p = random_expr(4), q = random_expr(4);
    const E np = normalize(p);
    const std::string tag = " for " + p.to_string();
    o.expect(normalize(np) == np, "idempotence" + tag);
    o.expect(dual(E::dual(p)) == np, "dual o dual" + tag);
    o.expect(bar(E::bar(p)) == np, "bar o bar" + tag);
    o.expect(dual(E::compose(p, q)) == normalize(E::compose(E::dual(q), E::dual(p))), "dual of compose" + tag);
    const auto n = oracle::uniform(-9, 9);
    o.expect(dual(E::twist(n, p)) == normalize(E::twist(-n, E::dual(p))), "dual of twist" + tag);
    // confluence: a random redex order reaches the same normal form
    E cur = p;
    while (true) {
      const auto rs = redexes(cur);
      if (rs.empty()) break;
      cur = rewrite_at(cur, rs[static_cast<std::size_t>(oracle::uniform(0, static_cast<long long>(rs.size()) - 1))]);
    }
    o.expect(cur == np, "confluence" + tag);
  }
  return o;
}

Outcome obstruct_criterion() {
  Outcome o;
  for (std::int64_t k = 1; k <= 10; ++k) {
    const std::string tag = " (k = " + std::to_string(k) + ")";
    int code = -1;
    const Json j = Json::parse(cli_out({"--json", "obstruct", "--k", std::to_string(k)}, &code));
    o.expect(code == 0, "exit status" + tag);
    o.expect(j["verdict"] == "not smoothly concordant", "verdict" + tag);
    o.expect(j["bounds"]["upperPrime"] == "-2" && j["bounds"]["lower"] == "0", "endpoints" + tag);
    bool saw_strict = false;
    for (const auto& link : j["dChain"]) {
      const auto& cert = link["certificate"];
      if (cert["kind"] == "strict") {
        saw_strict = link["from"] == "-2" && link["to"] == "0" && link["relation"] == "<";
      } else if (cert["kind"] == "negdef" || cert["kind"] == "posdef") {
        const auto problem = certificate_problem(certificate_from_json(cert));
        o.expect(!problem, "certificate" + tag + ": " + problem.value_or(""));
      }
    }
    o.expect(saw_strict, "-2 < 0 link" + tag);
    const auto problem = report_problem(obstruct_pair(k));
    o.expect(!problem, "report" + tag + ": " + problem.value_or(""));
    const std::string text = cli_out({"obstruct", "--k", std::to_string(k)});
    o.expect(text.find("= -2 < 0 =") != std::string::npos, "text chain" + tag);
  }
  return o;
}

Outcome seifert_criterion() {
  Outcome o;
  for (const auto& f : load_default_fixtures()) {
    const SeifertMatrix v = seifert_matrix(f.braid);
    o.expect(oracle::det(v.entries - v.entries.transposed()) == 1, "det(V - V^T) for " + f.name);
    o.expect(determinant(v) % 2 == 1, "odd determinant for " + f.name);
  }
  const LaurentPoly trefoil{{-1, 1}, {0, -1}, {1, 1}};
  const LaurentPoly fig8{{-1, -1}, {0, 3}, {1, -1}};
  for (const auto& [word, want] : {std::pair{"1 1 1", trefoil}, std::pair{"1 -2 1 -2", fig8}}) {
    const SeifertMatrix v = seifert_matrix(BraidWord::parse(word));
    const std::size_t n = v.size();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = LaurentPoly(v.entries(i, j)) - LaurentPoly::monomial(v.entries(j, i), 1);
    const LaurentPoly expanded = normalize_alexander(oracle::laplace(m));
    o.expect(expanded == want, std::string("determinant expansion for ") + word);
    o.expect(alexander_from_seifert(v) == want, std::string("alexander_from_seifert for ") + word);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "family determinant 15/1 over n in [-20, 20]", 1, family_determinant_criterion},
      {2, "Alexander duality n <-> -4-n and distinctness", 1, duality_criterion},
      {3, "d(S^3_1(5_2)) = -2 from the braid fixture", 1, d_y0_criterion},
      {4, "Q_k suite for k = 1..64", 30, qk_criterion},
      {5, "max_char_square vs box enumeration, 200 forms", 60, char_oracle_criterion},
      {6, "continued fractions round-trip and chain expansions", 5, cf_criterion},
      {7, "framing lifts of eta and gamma", 1, lift_criterion},
      {8, "pattern calculus identities, idempotence, confluence", 5, pattern_criterion},
      {9, "obstruct k = 1..10 with re-validated certificates", 10, obstruct_criterion},
      {10, "Seifert invariants and Alexander expansion oracles", 1, seifert_criterion},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_s) {
      o.ok = false;
      o.detail = "exceeded runtime budget";
    }
    if (!o.ok) ++failures;
    std::printf("%s [%2d] %s (%.3f s, budget %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                o.ok ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
