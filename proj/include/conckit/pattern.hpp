#pragma once

#include "conckit/numeric.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conckit {

enum class PatternKind { Gen, ConnSum, Twist, Bar, Dual, Compose };

/// Immutable expression in the satellite-pattern calculus. Every expression
/// denotes a winding number one pattern in the solid torus.
///
///   Gen(name)        a named pattern, dual looked up in a PatternRegistry
///   ConnSum(K)       the geometric winding number one pattern K_#
///   Twist(n, P)      n-fold meridional Dehn twist of P
///   Bar(P)           mirror with reversed orientation
///   Dual(P)          the dual pattern P*
///   Compose(P, Q)    P o Q, i.e. (P o Q)(K) = P(Q(K))
class PatternExpr {
 public:
  static PatternExpr gen(std::string name);
  static PatternExpr sum(std::string knot, bool mirrored = false);
  static PatternExpr twist(std::int64_t n, PatternExpr child);
  static PatternExpr bar(PatternExpr child);
  static PatternExpr dual(PatternExpr child);
  static PatternExpr compose(PatternExpr left, PatternExpr right);

  PatternKind kind() const;
  /// Generator name or connected-sum knot name.
  const std::string& name() const;
  bool mirrored() const;
  std::int64_t twists() const;
  /// Twist/Bar/Dual child.
  const PatternExpr& child() const;
  const PatternExpr& left() const;
  const PatternExpr& right() const;

  std::size_t size() const;
  std::string to_string() const;

  friend bool operator==(const PatternExpr& a, const PatternExpr& b);

 private:
  struct Node;
  explicit PatternExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Declared duals of named generators. The standard registry knows J with
/// J* = twist(-4, J).
class PatternRegistry {
 public:
  static const PatternRegistry& standard();

  /// Registers `dual` as the dual of generator `name`. When `dual` is a bare
  /// generator the reverse declaration is added too. Throws
  /// Error("InconsistentDual") if the declaration is not an involution.
  void declare(const std::string& name, const PatternExpr& dual);

  std::optional<PatternExpr> declared_dual(const std::string& name) const;

 private:
  std::map<std::string, PatternExpr> duals_;
};

/// expr := name | sum(name) | sum(name, mirror) | twist(int, expr)
///       | bar(expr) | dual(expr) | compose(expr, expr)
/// Throws Error("ParseError") with the byte offset of the problem.
PatternExpr parse_pattern(std::string_view text);

/// Canonical form: twists merged (no zero or directly nested twists), Dual
/// eliminated, Bar only directly above generators, Compose right-nested.
/// Throws Error("NoDeclaredDual") if a Dual reaches a generator without a
/// declared dual.
PatternExpr normalize(const PatternExpr& e, const PatternRegistry& reg = PatternRegistry::standard());

PatternExpr dual(const PatternExpr& e, const PatternRegistry& reg = PatternRegistry::standard());
PatternExpr bar(const PatternExpr& e, const PatternRegistry& reg = PatternRegistry::standard());
/// The concordance inverse bar(P*).
PatternExpr concordance_inverse(const PatternExpr& e,
                                const PatternRegistry& reg = PatternRegistry::standard());

std::int64_t winding_number(const PatternExpr& e);

// Single-step rewriting, used to check that normalize does not depend on the
// order in which rules fire.

/// Child indices from the root (0 = child/left, 1 = right).
using RewritePath = std::vector<int>;

std::vector<RewritePath> redexes(const PatternExpr& e, const PatternRegistry& reg = PatternRegistry::standard());
PatternExpr rewrite_at(const PatternExpr& e, const RewritePath& path,
                       const PatternRegistry& reg = PatternRegistry::standard());

/// Well-founded measure (weight, left-nesting) that every rule decreases
/// lexicographically when generator duals are no heavier than J's.
std::pair<Integer, Integer> rewrite_measure(const PatternExpr& e);

}  // namespace conckit
