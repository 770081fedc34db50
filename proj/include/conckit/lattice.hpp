#pragma once

#include "conckit/matrix.hpp"
#include "conckit/numeric.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace conckit {

using IntVector = std::vector<Integer>;

/// Symmetric integer bilinear form on Z^rank.
class IntForm {
 public:
  IntForm() = default;
  /// Throws Error("NotSymmetric") unless q = q^T.
  explicit IntForm(IntMatrix q);

  std::size_t rank() const noexcept { return q_.rows(); }
  const IntMatrix& matrix() const noexcept { return q_; }

  friend bool operator==(const IntForm&, const IntForm&) = default;

 private:
  IntMatrix q_;
};

enum class Definiteness { NegativeDefinite, PositiveDefinite, Indefinite, Degenerate };

std::string to_string(Definiteness d);

/// The chain form with diagonal (-1, -2, ..., -2) and -1 off the diagonal:
/// the intersection form of the cobordism built from a -1/k surgery.
IntForm build_qk(std::size_t k);

/// Mirror chain: diagonal (1, 2, ..., 2), +1 off the diagonal.
IntForm build_positive_chain(std::size_t k);

/// v Q v^T. Throws Error("DimensionMismatch").
Integer form_eval(const IntForm& f, std::span<const Integer> v);

/// Exact classification by inertia. The empty form counts as negative
/// definite (vacuously definite of both signs; negative is reported).
Definiteness definiteness(const IntForm& f);

/// v . w = w . w (mod 2) for every basis vector w.
bool is_characteristic(const IntForm& f, std::span<const Integer> v);

/// Unimodular P whose rows form a basis in which the form is sign * I.
struct StandardBasis {
  IntMatrix basis;
  int sign = -1;
};

/// Tries the explicit basis for chain forms, then peels off vectors of square
/// -1 (or +1) one at a time. std::nullopt stands for "not standard": the form
/// is indefinite, degenerate, or peeling got stuck.
std::optional<StandardBasis> diagonalize_to_standard(const IntForm& f);

/// Extremal square of a characteristic vector together with its provenance.
struct CharSearch {
  Integer square;
  IntVector witness;
  std::string method;       // "standard-basis" or "enumeration"
  Integer search_radius;    // enumeration only: |square| bound searched
  std::size_t visited = 0;  // enumeration only: lattice points examined
};

/// Maximum of xi.xi over characteristic xi for a negative-definite form.
/// Throws Error("KindMismatch") otherwise.
CharSearch max_char_square(const IntForm& f);

/// Minimum of xi.xi over characteristic xi for a positive-definite form.
CharSearch min_char_square(const IntForm& f);

/// Calls `visit` on every x with x A x^T <= radius, where A is positive
/// definite. Coordinates are enumerated from the last to the first through an
/// exact LDL^T decomposition, so no point inside the ellipsoid is missed.
/// Returns the number of points visited. `visit` may lower the radius by
/// returning a new one.
std::size_t enumerate_short_vectors(const IntMatrix& positive_definite, const Integer& radius,
                                    const std::function<std::optional<Integer>(const IntVector&, const Integer&)>& visit);

enum class CobordismKind { NegativeDefinite, PositiveDefinite, RationalHomologyCobordism };
enum class Relation { AtLeast, AtMost, Equal };

std::string to_string(CobordismKind k);
std::string to_string(Relation r);

/// d(Y1) <relation> bound, derived from d(Y0) and the intersection form of a
/// cobordism from Y0 to Y1.
struct BoundCertificate {
  CobordismKind kind = CobordismKind::RationalHomologyCobordism;
  Rational d_y0;
  std::size_t rank = 0;
  IntMatrix form;
  Integer char_square;
  IntVector witness;
  Relation relation = Relation::Equal;
  Rational bound;
  std::string method;
};

/// negative definite:  d(Y1) >= d(Y0) + (max char square + rank)/4
/// positive definite:  d(Y1) <= d(Y0) + (min char square - rank)/4
/// rational homology cobordism (empty form): d(Y1) = d(Y0)
/// Throws Error("KindMismatch") if the form does not match the kind.
BoundCertificate d_bound(const Rational& d_y0, const IntForm& f, CobordismKind kind);

/// Re-checks a certificate without trusting how it was produced: Sylvester
/// minors for definiteness, the parity condition and square of the witness,
/// and the bound arithmetic. Returns a description of the first problem.
std::optional<std::string> certificate_problem(const BoundCertificate& cert);

}  // namespace conckit
