#pragma once

#include "conckit/braid.hpp"
#include "conckit/laurent.hpp"
#include "conckit/lattice.hpp"
#include "conckit/pattern.hpp"
#include "conckit/surgery.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conckit {

// ------------------------------------------------ the family (tau_n J)(U)

/// Alexander polynomial of (tau_n J)(U), normalized. For n >= -2 it is
/// (t-1)^2 (t^(2n+4) + 1) + (2t^2 - 3t + 2) t^(n+2); smaller n use the
/// 0-surgery symmetry n <-> -4-n.
LaurentPoly family_alexander(std::int64_t n);

/// |Delta_n(-1)|: 15 for even n and 1 for odd n.
Integer family_determinant(std::int64_t n);

/// "twist(n, J)(U)"
std::string family_knot_label(std::int64_t n);

struct SharedInvariantReport {
  std::int64_t n = 0;
  std::int64_t partner = 0;  // -4 - n
  bool partner_equal = false;
  std::vector<std::int64_t> compared;
  std::vector<std::int64_t> collisions;  // compared n' with the same polynomial
  std::string note;
};

/// Checks Delta_n = Delta_{-4-n} up to units and that every n' in
/// [n - radius, n + radius] outside {n, -4-n} has a different polynomial.
SharedInvariantReport shared_invariant_check(std::int64_t n, std::int64_t radius = 20);

// ----------------------------------------------------------- d-invariants

/// d(S^3_1(K)) = 2 min{0, -ceil(-sigma/4)} for an alternating knot K.
/// Throws Error("InvalidSignature") on odd input.
long long d_alternating_one_surgery(long long sigma);

struct AlternatingSurgeryCertificate {
  std::string knot;
  BraidWord braid;
  long long signature = 0;
  Rational d;
};

/// d of the double branched cover of (tau_{-1} J)(U), which is +1-surgery on
/// 5_2. The signature is recomputed from the 5_2 braid fixture.
AlternatingSurgeryCertificate d_y0(const std::vector<KnotFixture>& fixtures);
AlternatingSurgeryCertificate d_y0();

/// Presentation matrix of H_1 of a 4-manifold from its handles (rows: 2-handles,
/// columns: 1-handles). The boundary of an integral homology ball has d = 0.
struct HomologyBallCertificate {
  IntMatrix presentation;

  bool valid() const;
};

/// One 0-handle, one 1-handle and one 2-handle running over it algebraically
/// once: the 4-manifold bounded by the double branched cover of (tau_1 J)(U).
HomologyBallCertificate sigma_k1_ball();

/// 0 when the certificate is valid, else throws Error("CertificateInvalid").
Rational d_y1(const HomologyBallCertificate& cert);
Rational d_y1();

// ----------------------------------------------------- monotonicity chains

enum class Direction { Up, Down };

/// Cobordism certificate between double branched covers, with the surgery
/// data it was read from.
struct MonotonicityStep {
  std::string from;
  std::string to;
  SurgeryDiagram cover_diagram;  // before the rational component is expanded
  SurgeryDiagram integral_diagram;
  IntForm form;
  BoundCertificate certificate;
  std::vector<std::string> assumptions;
};

/// Y_k from Y_0 by -1/k surgery (up) or Y_{-k} by +1/k surgery (down) on the
/// lift of eta. The returned bound is d(Y_{+-k}) >= d(Y_0) (up) or
/// d(Y_{-k}) <= d(Y_0) (down), with d(Y_0) = base_d.
std::vector<MonotonicityStep> monotonicity_certificate(std::int64_t k, Direction direction,
                                                       const Rational& base_d);

/// n-fold version: eta carries -1/(nk) (or +1/(nk)) downstairs and links the
/// branch knot once, so it lifts to a single -1/k (+1/k) curve.
std::vector<MonotonicityStep> general_monotonicity_certificate(std::int64_t n, std::int64_t k,
                                                               Direction direction, const Rational& base_d);

// ---------------------------------------------------------- obstruction chain

struct StrictComparison {
  Rational lower;
  Rational upper;
};

using ChainEvidence =
    std::variant<BoundCertificate, AlternatingSurgeryCertificate, HomologyBallCertificate, StrictComparison>;

/// `from` <relation> `to`, where relation is "<=", "=", or "<".
struct ChainLink {
  std::string from;
  std::string to;
  std::string relation;
  ChainEvidence evidence;
};

struct ObstructionReport {
  std::int64_t k = 0;
  std::string knot;        // K_k = (tau_{2k-1} J)(U)
  std::string knot_prime;  // K'_k = (tau_{-2k-3} J)(U)
  std::string dual_identity;
  bool dual_identity_holds = false;
  std::vector<ChainLink> chain;
  Rational upper_bound_prime;  // d(Sigma2(K'_k)) <= this
  Rational lower_bound;        // d(Sigma2(K_k)) >= this
  std::string verdict;
  std::vector<std::string> assumptions;

  /// d(...) <= d(...) = -2 < 0 = d(...) <= d(...)
  std::string chain_text() const;
};

/// Throws Error("InvalidArgument") for k < 1.
ObstructionReport obstruct_pair(std::int64_t k);
ObstructionReport obstruct_pair(std::int64_t k, const std::vector<KnotFixture>& fixtures);

/// Re-validates every link from its evidence alone and recomputes the
/// endpoints. Returns the first problem found.
std::optional<std::string> report_problem(const ObstructionReport& report);

}  // namespace conckit
