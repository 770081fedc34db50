#pragma once

#include "conckit/matrix.hpp"
#include "conckit/numeric.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace conckit {

/// One framed component of a surgery link. An absent coefficient means
/// infinity: the component may be deleted without changing the manifold.
struct SurgeryComponent {
  std::string name;
  std::optional<Rational> coefficient;
  long long writhe = 0;
  std::map<std::string, long long> links;
};

/// Framed link with rational surgery coefficients and a symmetric linking
/// table with zero diagonal.
class SurgeryDiagram {
 public:
  SurgeryDiagram() = default;
  /// Links may be given on either side; missing entries mirror the other
  /// side. Throws Error("InvalidDiagram") on duplicate names, unknown link
  /// targets, self-links or asymmetric linking numbers.
  explicit SurgeryDiagram(std::vector<SurgeryComponent> components);

  const std::vector<SurgeryComponent>& components() const noexcept { return components_; }
  const SurgeryComponent& component(const std::string& name) const;
  long long linking(const std::string& a, const std::string& b) const;

  /// Drops every infinity-framed component.
  SurgeryDiagram without_infinite() const;

 private:
  std::vector<SurgeryComponent> components_;
};

/// Linking matrix of the finite components, in diagram order. Throws
/// Error("NonIntegralCoefficient") naming the first offending component.
IntMatrix linking_matrix(const SurgeryDiagram& d);

/// Expansion p/q = a1 - 1/(a2 - 1/(... - 1/am)) with every a_i <= -1 when
/// p/q < 0 and every a_i >= 1 when p/q > 0. Requires q > 0 and gcd(p, q) = 1;
/// throws Error("InvalidFraction") otherwise.
std::vector<Integer> cf_expand(const Integer& p, const Integer& q);

/// a1 - 1/(a2 - 1/(...)). Throws Error("DivisionByZero") if a tail is zero
/// and Error("InvalidFraction") on an empty list.
Rational cf_evaluate(std::span<const Integer> coeffs);

/// Replaces a rationally framed component with zero linking to the rest by
/// the chain of integrally framed unknots from cf_expand. Consecutive chain
/// members link -1 for a negative coefficient and +1 for a positive one.
/// New components are named "<name>.1", "<name>.2", ...
SurgeryDiagram chain_attach(const SurgeryDiagram& d, const std::string& component);

/// Framing curve m*mu + b*lambda_bb of a component with the given writhe.
/// The surgery coefficient is (m + b*writhe)/b.
struct BlackboardFraming {
  Integer m;
  Integer b;
  long long writhe = 0;

  Rational coefficient() const;
  /// Inverse of coefficient(): for p/q in lowest terms, b = q, m = p - q*writhe.
  static BlackboardFraming from_coefficient(const Rational& r, long long writhe);
  friend bool operator==(const BlackboardFraming&, const BlackboardFraming&) = default;
};

/// Lift of a framed curve to the double branched cover. Odd linking with the
/// branch knot gives one curve (m, b/2, liftWrithe); even linking gives two
/// curves (m, b, liftWrithe). The lift writhe is read off a diagram by the
/// caller. Throws Error("OddHalving") when the linking is odd and b is odd.
std::vector<BlackboardFraming> lift_framing(const BlackboardFraming& f, long long branch_linking,
                                            long long lift_writhe);

/// Same for the n-fold cyclic branched cover: gcd(n, lk) lifted curves, each
/// covering its image n/gcd times, with b divided by n/gcd. Throws
/// Error("OddHalving") if that division is not exact.
std::vector<BlackboardFraming> lift_framing_cyclic(const BlackboardFraming& f, long long degree,
                                                   long long branch_linking, long long lift_writhe);

}  // namespace conckit
