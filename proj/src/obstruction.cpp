#include "conckit/obstruction.hpp"

#include "conckit/error.hpp"

#include <algorithm>

namespace conckit {

// ------------------------------------------------ the family (tau_n J)(U)

LaurentPoly family_alexander(std::int64_t n) {
  // Only evaluated where the closed form is stated; the rest by symmetry.
  if (n < -2) return family_alexander(-4 - n);
  const LaurentPoly one_less = LaurentPoly{{1, 1}, {0, -1}};  // t - 1
  const LaurentPoly outer = one_less * one_less * LaurentPoly{{2 * n + 4, 1}, {0, 1}};
  const LaurentPoly inner = LaurentPoly{{2, 2}, {1, -3}, {0, 2}} * LaurentPoly::monomial(1, n + 2);
  return normalize_alexander(outer + inner);
}

Integer family_determinant(std::int64_t n) {
  const Rational v = family_alexander(n).eval(Integer(-1));
  const Integer z = boost::multiprecision::numerator(v);
  return z < 0 ? Integer(-z) : z;
}

std::string family_knot_label(std::int64_t n) { return "twist(" + std::to_string(n) + ", J)(U)"; }

SharedInvariantReport shared_invariant_check(std::int64_t n, std::int64_t radius) {
  SharedInvariantReport r;
  r.n = n;
  r.partner = -4 - n;
  const LaurentPoly delta = family_alexander(n);
  r.partner_equal = equal_up_to_units(delta, family_alexander(r.partner));
  for (std::int64_t m = n - radius; m <= n + radius; ++m) {
    if (m == n || m == r.partner) continue;
    r.compared.push_back(m);
    if (equal_up_to_units(delta, family_alexander(m))) r.collisions.push_back(m);
  }
  if (n == r.partner)
    r.note = "self-paired member";
  else if (n % 2 != 0)
    r.note = "partner shares the Alexander polynomial; d-invariants of double branched covers separate them";
  else
    r.note = "partner indistinguishable by implemented invariants";
  return r;
}

// ----------------------------------------------------------- d-invariants

long long d_alternating_one_surgery(long long sigma) {
  if (sigma % 2 != 0) throw Error("InvalidSignature", "knot signatures are even, got " + std::to_string(sigma));
  const Integer c = ceil_div(Integer(-sigma), Integer(4));
  return 2 * std::min<long long>(0, static_cast<long long>(-c));
}

AlternatingSurgeryCertificate d_y0(const std::vector<KnotFixture>& fixtures) {
  const KnotFixture five_two = find_fixture(fixtures, "5_2");
  const long long sigma = signature(seifert_matrix(five_two.braid));
  return AlternatingSurgeryCertificate{five_two.name, five_two.braid, sigma,
                                       Rational(d_alternating_one_surgery(sigma))};
}

AlternatingSurgeryCertificate d_y0() { return d_y0(load_default_fixtures()); }

bool HomologyBallCertificate::valid() const {
  if (!presentation.is_square()) return false;
  const Integer d = determinant(presentation);
  return d == 1 || d == -1;
}

HomologyBallCertificate sigma_k1_ball() { return HomologyBallCertificate{IntMatrix{{1}}}; }

Rational d_y1(const HomologyBallCertificate& cert) {
  if (!cert.valid())
    throw Error("CertificateInvalid", "H_1 presentation " + to_string(cert.presentation) +
                                          " does not have determinant +-1");
  return Rational(0);
}

Rational d_y1() { return d_y1(sigma_k1_ball()); }

// ----------------------------------------------------- monotonicity chains

namespace {

const std::string kEta = "eta~";

SurgeryComponent lifted_component(std::string name, const BlackboardFraming& f) {
  return SurgeryComponent{std::move(name), f.coefficient(), f.writhe, {}};
}

MonotonicityStep build_step(std::int64_t n, std::int64_t k, Direction direction, const Rational& base_d,
                            bool with_gamma) {
  if (n < 2) throw Error("InvalidArgument", "cover degree must be at least 2");
  if (k < 1) throw Error("InvalidArgument", "k must be positive");
  const bool up = direction == Direction::Up;
  const long long sign = up ? -1 : 1;

  // eta: coefficient -+1/(nk), writhe 0, linking the branch knot once.
  const auto eta = BlackboardFraming::from_coefficient(Rational(sign, n * k), 0);
  const auto eta_lift = lift_framing_cyclic(eta, n, 1, 0);
  if (eta_lift.size() != 1) throw Error("InternalError", "eta must lift to a single curve");

  std::vector<SurgeryComponent> upstairs;
  std::vector<std::string> assumptions;
  if (with_gamma) {
    // gamma: +1-framed with writhe 2, unlinked from the branch knot; both
    // lifts again have writhe 2.
    const auto gamma = BlackboardFraming::from_coefficient(Rational(1), 2);
    const auto gamma_lifts = lift_framing(gamma, 0, 2);
    for (std::size_t i = 0; i < gamma_lifts.size(); ++i)
      upstairs.push_back(lifted_component("gamma~" + std::to_string(i + 1), gamma_lifts[i]));
    assumptions.push_back("lift writhes read from the diagram: eta~ has writhe 0, each gamma~ has writhe 2");
  } else {
    assumptions.push_back("Sigma_" + std::to_string(n) + " of the base knot is an integer homology sphere");
    assumptions.push_back("eta is an unknot linking the base knot once and the unknotting curves zero times");
    assumptions.push_back("lift writhe of eta~ is 0");
  }
  upstairs.push_back(lifted_component(kEta, eta_lift.front()));
  SurgeryDiagram cover(upstairs);

  if (with_gamma) {
    // With eta~ deleted the diagram presents the base; it must be unimodular.
    std::vector<SurgeryComponent> base = upstairs;
    base.back().coefficient.reset();
    const Integer det = determinant(linking_matrix(SurgeryDiagram(base)));
    if (det != 1 && det != -1) throw Error("InternalError", "base cover is not an integer homology sphere");
  }

  SurgeryDiagram integral = chain_attach(cover, kEta);
  const IntMatrix full = linking_matrix(integral);
  std::vector<std::size_t> chain_idx;
  for (std::size_t i = 0; i < integral.components().size(); ++i)
    if (integral.components()[i].name.rfind(kEta + ".", 0) == 0) chain_idx.push_back(i);
  IntMatrix w(chain_idx.size(), chain_idx.size());
  for (std::size_t i = 0; i < chain_idx.size(); ++i)
    for (std::size_t j = 0; j < chain_idx.size(); ++j) w(i, j) = full(chain_idx[i], chain_idx[j]);
  const IntForm form(w);
  const auto uk = static_cast<std::size_t>(k);
  if (!(form == (up ? build_qk(uk) : build_positive_chain(uk))))
    throw Error("InternalError", "chain form does not match the expected plumbing");

  BoundCertificate cert =
      d_bound(base_d, form, up ? CobordismKind::NegativeDefinite : CobordismKind::PositiveDefinite);
  const std::string far = "Y_" + std::string(up ? "" : "-") + std::to_string(k);
  return MonotonicityStep{up ? "Y_0" : far, up ? far : "Y_0", cover, integral, form, cert, assumptions};
}

}  // namespace

std::vector<MonotonicityStep> monotonicity_certificate(std::int64_t k, Direction direction,
                                                       const Rational& base_d) {
  return {build_step(2, k, direction, base_d, true)};
}

std::vector<MonotonicityStep> general_monotonicity_certificate(std::int64_t n, std::int64_t k,
                                                               Direction direction, const Rational& base_d) {
  return {build_step(n, k, direction, base_d, false)};
}

// ---------------------------------------------------------- obstruction chain

namespace {

std::string sigma_label(std::int64_t twist) { return "d(Sigma2(" + family_knot_label(twist) + "))"; }

}  // namespace

std::string ObstructionReport::chain_text() const {
  if (chain.empty()) return {};
  std::string out = chain.front().from;
  for (const auto& link : chain) out += " " + link.relation + " " + link.to;
  return out;
}

ObstructionReport obstruct_pair(std::int64_t k) { return obstruct_pair(k, load_default_fixtures()); }

ObstructionReport obstruct_pair(std::int64_t k, const std::vector<KnotFixture>& fixtures) {
  if (k < 1) throw Error("InvalidArgument", "k must be positive");
  ObstructionReport r;
  r.k = k;
  const std::int64_t twist = 2 * k - 1;
  const std::int64_t twist_prime = -2 * k - 3;
  r.knot = family_knot_label(twist);
  r.knot_prime = family_knot_label(twist_prime);

  const PatternExpr lhs = PatternExpr::dual(PatternExpr::twist(twist, PatternExpr::gen("J")));
  const PatternExpr got = normalize(lhs);
  const PatternExpr want = PatternExpr::twist(twist_prime, PatternExpr::gen("J"));
  r.dual_identity = lhs.to_string() + " = " + got.to_string();
  r.dual_identity_holds = got == want;

  const AlternatingSurgeryCertificate y0 = d_y0(fixtures);
  const HomologyBallCertificate ball = sigma_k1_ball();
  const Rational d0 = y0.d;
  const Rational d1 = d_y1(ball);

  // K'_k = K_{-(k+1)} in the odd-twist indexing, so one positive-definite
  // cobordism with k + 1 handles reaches it from K_0.
  auto down = monotonicity_certificate(k + 1, Direction::Down, d0).front();
  r.chain.push_back({sigma_label(twist_prime), sigma_label(-1), "<=", down.certificate});
  r.chain.push_back({sigma_label(-1), to_string(d0), "=", y0});
  r.chain.push_back({to_string(d0), to_string(d1), "<", StrictComparison{d0, d1}});
  r.chain.push_back({to_string(d1), sigma_label(1), "=", ball});
  // Two more twists at a time: a 2-fold Rolfsen twist lifts to a -1 surgery.
  Rational running = d1;
  for (std::int64_t j = 1; j < k; ++j) {
    auto step = general_monotonicity_certificate(2, 1, Direction::Up, running).front();
    running = step.certificate.bound;
    r.chain.push_back({sigma_label(2 * j - 1), sigma_label(2 * j + 1), "<=", step.certificate});
  }

  r.upper_bound_prime = down.certificate.bound;
  r.lower_bound = running;
  r.assumptions = {
      "d-invariant inequalities for negative- and positive-definite cobordisms between rational homology "
      "spheres, and invariance under rational homology cobordism",
      "d vanishes on the boundary of an integral homology ball",
      "d(S^3_1(K)) = 2 min{0, -ceil(-sigma(K)/4)} for alternating K",
      "the double branched cover of " + family_knot_label(-1) + " is S^3_1(5_2) (read from surgery diagrams)",
      "the double branched cover of " + family_knot_label(1) + " bounds the 4-manifold of one 1-handle and one "
      "algebraically cancelling 2-handle",
      "surgery descriptions of the double branched covers and their lift writhes are read from diagrams",
      "the positive-definite cobordism for +1/k surgery has the mirror chain form",
      "dual patterns have diffeomorphic 0-traces: " + r.knot + " and " + r.knot_prime + " share a 0-trace",
      "concordant knots have rationally homology cobordant double branched covers",
  };
  const bool separated = r.upper_bound_prime < r.lower_bound;
  r.verdict = separated ? "not smoothly concordant" : "inconclusive";
  return r;
}

std::optional<std::string> report_problem(const ObstructionReport& r) {
  if (r.chain.empty()) return "empty chain";
  for (std::size_t i = 0; i + 1 < r.chain.size(); ++i)
    if (r.chain[i].to != r.chain[i + 1].from) return "chain is broken after link " + std::to_string(i);
  if (r.chain.front().from != sigma_label(-2 * r.k - 3)) return "chain does not start at K'_k";
  if (r.chain.back().to != sigma_label(2 * r.k - 1)) return "chain does not end at K_k";

  bool strict = false;
  std::optional<Rational> first_number;
  std::optional<Rational> last_number;
  for (const auto& link : r.chain) {
    const std::string where = "link '" + link.from + " " + link.relation + " " + link.to + "': ";
    if (link.relation == "<") strict = true;
    if (link.relation != "<=" && link.relation != "=" && link.relation != "<")
      return where + "unknown relation";
    if (const auto* cert = std::get_if<BoundCertificate>(&link.evidence)) {
      if (auto problem = certificate_problem(*cert)) return where + *problem;
      const Rational offset = cert->bound - cert->d_y0;
      if (link.relation != "<=") return where + "cobordism evidence supports only <=";
      if (cert->kind == CobordismKind::NegativeDefinite && offset < 0) return where + "negative offset";
      if (cert->kind == CobordismKind::PositiveDefinite && offset > 0) return where + "positive offset";
      if (cert->kind == CobordismKind::RationalHomologyCobordism) return where + "unexpected equality certificate";
    } else if (const auto* alt = std::get_if<AlternatingSurgeryCertificate>(&link.evidence)) {
      const long long sigma = signature(seifert_matrix(alt->braid));
      if (sigma != alt->signature) return where + "recorded signature does not match the braid";
      const Rational d(d_alternating_one_surgery(sigma));
      if (d != alt->d || link.relation != "=" || link.to != to_string(d)) return where + "d value mismatch";
      last_number = d;
      if (!first_number) first_number = d;
    } else if (const auto* ball = std::get_if<HomologyBallCertificate>(&link.evidence)) {
      if (!ball->valid()) return where + "presentation is not unimodular";
      if (link.relation != "=" || link.from != "0") return where + "homology ball gives d = 0";
      last_number = Rational(0);
      if (!first_number) first_number = Rational(0);
    } else if (const auto* cmp = std::get_if<StrictComparison>(&link.evidence)) {
      if (!(cmp->lower < cmp->upper)) return where + "comparison is false";
      if (link.from != to_string(cmp->lower) || link.to != to_string(cmp->upper)) return where + "labels differ";
    }
  }
  if (!first_number || !last_number) return "chain has no numeric anchors";
  if (*first_number != r.upper_bound_prime) return "recorded upper endpoint differs from the chain";
  if (*last_number != r.lower_bound) return "recorded lower endpoint differs from the chain";
  const bool separated = strict && r.upper_bound_prime < r.lower_bound;
  const std::string expected = separated ? "not smoothly concordant" : "inconclusive";
  if (r.verdict != expected) return "verdict '" + r.verdict + "' does not follow from the chain";
  if (!r.dual_identity_holds) return "dual pattern identity failed";
  return std::nullopt;
}

}  // namespace conckit
