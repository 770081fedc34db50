#include "conckit/error.hpp"
#include "conckit/pattern.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace conckit;

namespace {

using E = PatternExpr;

E J() { return E::gen("J"); }

// J is pre-registered; P and Q are declared duals of each other.
const PatternRegistry& registry() {
  static const PatternRegistry reg = [] {
    PatternRegistry r = PatternRegistry::standard();
    r.declare("P", E::gen("Q"));
    return r;
  }();
  return reg;
}

E random_expr(int depth) {
  if (depth == 0 || oracle::uniform(0, 4) == 0) {
    switch (oracle::uniform(0, 3)) {
      case 0: return J();
      case 1: return E::gen(oracle::uniform(0, 1) ? "P" : "Q");
      case 2: return E::sum("K", oracle::uniform(0, 1) == 1);
      default: return E::sum("L");
    }
  }
  switch (oracle::uniform(0, 4)) {
    case 0: return E::twist(oracle::uniform(-5, 5), random_expr(depth - 1));
    case 1: return E::bar(random_expr(depth - 1));
    case 2: return E::dual(random_expr(depth - 1));
    default: return E::compose(random_expr(depth - 1), random_expr(depth - 1));
  }
}

bool is_normal(const E& e) {
  switch (e.kind()) {
    case PatternKind::Gen:
    case PatternKind::ConnSum:
      return true;
    case PatternKind::Dual:
      return false;
    case PatternKind::Bar:
      return e.child().kind() == PatternKind::Gen;
    case PatternKind::Twist:
      return e.twists() != 0 && e.child().kind() != PatternKind::Twist && is_normal(e.child());
    case PatternKind::Compose:
      return e.left().kind() != PatternKind::Compose && is_normal(e.left()) && is_normal(e.right());
  }
  return false;
}

// Rewrites with a random redex at each step until none is left.
E random_strategy(E e) {
  while (true) {
    const auto rs = redexes(e, registry());
    if (rs.empty()) return e;
    const auto pick = static_cast<std::size_t>(oracle::uniform(0, static_cast<long long>(rs.size()) - 1));
    const E next = rewrite_at(e, rs[pick], registry());
    CHECK(rewrite_measure(next) < rewrite_measure(e));
    e = next;
  }
}

}  // namespace

TEST_CASE("parse_pattern examples") {
  CHECK(parse_pattern("twist(3, J)") == E::twist(3, J()));
  CHECK(parse_pattern("dual(compose(P, sum(K)))") == E::dual(E::compose(E::gen("P"), E::sum("K"))));
  const E nested = parse_pattern("twist(2, twist(-2, J))");
  CHECK(nested == E::twist(2, E::twist(-2, J())));
  CHECK(normalize(nested) == J());
  CHECK(parse_pattern("  bar( J' )") == E::bar(E::gen("J'")));
  CHECK(parse_pattern("twist").kind() == PatternKind::Gen);
}

TEST_CASE("parse_pattern errors") {
  for (const char* bad : {"", "twist(3 J)", "twist(x, J)", "dual(J", "compose(J)", "J)", "sum(twist(1, J))", "(J)", "sum(K, flip)"}) {
    CAPTURE(bad);
    CHECK_THROWS_WITH_AS(parse_pattern(bad), doctest::Contains("ParseError"), Error);
  }
}

TEST_CASE("rendering round-trips through the parser") {
  for (int trial = 0; trial < 300; ++trial) {
    const E e = random_expr(4);
    CHECK(parse_pattern(e.to_string()) == e);
  }
  CHECK(E::twist(-4, J()).to_string() == "twist(-4, J)");
}

TEST_CASE("dual examples") {
  CHECK(dual(J()) == E::twist(-4, J()));
  CHECK(dual(E::twist(3, E::gen("P")), registry()) == E::twist(-3, E::gen("Q")));
  CHECK(normalize(E::dual(E::twist(7, E::gen("P"))), registry()) ==
        normalize(E::twist(-7, E::dual(E::gen("P"))), registry()));
  CHECK(dual(dual(E::twist(5, J()))) == E::twist(5, J()));
  CHECK(dual(E::sum("K")) == E::sum("K"));
}

TEST_CASE("bar examples") {
  CHECK(bar(bar(J())) == J());
  const E p = E::gen("P"), q = E::gen("Q");
  CHECK(bar(E::compose(p, q), registry()) == E::compose(E::bar(p), E::bar(q)));
  CHECK(bar(E::twist(3, J())) == E::twist(-3, E::bar(J())));
  CHECK(bar(E::sum("K")) == E::sum("K", true));
  CHECK(E::sum("K", true).to_string() == "sum(K, mirror)");
  CHECK(parse_pattern("sum(K, mirror)") == E::sum("K", true));
  CHECK(normalize(parse_pattern("bar(sum(K))")) == E::sum("K", true));
}

TEST_CASE("concordance_inverse examples") {
  CHECK(concordance_inverse(J()) == E::twist(4, E::bar(J())));
  CHECK(concordance_inverse(E::sum("K")) == E::sum("K", true));
  CHECK(concordance_inverse(concordance_inverse(J())) == J());
}

TEST_CASE("winding_number") {
  CHECK(winding_number(J()) == 1);
  CHECK(winding_number(E::compose(J(), E::sum("K"))) == 1);
  CHECK(winding_number(E::twist(9, J())) == 1);
}

TEST_CASE("normalize examples") {
  CHECK(normalize(E::twist(2, E::twist(3, J()))) == E::twist(5, J()));
  const E e = parse_pattern("dual(compose(twist(1, J), sum(K)))");
  CHECK(normalize(e) == E::compose(E::sum("K"), E::twist(-5, J())));
  CHECK(normalize(E::compose(E::compose(J(), J()), J())) == E::compose(J(), E::compose(J(), J())));
  CHECK(normalize(E::twist(0, J())) == J());
}

TEST_CASE("dual of an undeclared generator is blocked") {
  CHECK_THROWS_WITH_AS(dual(E::gen("X")), doctest::Contains("NoDeclaredDual"), Error);
  CHECK_THROWS_WITH_AS(dual(E::bar(E::gen("X"))), doctest::Contains("NoDeclaredDual"), Error);
  CHECK_THROWS_WITH_AS(redexes(E::dual(E::gen("X"))), doctest::Contains("NoDeclaredDual"), Error);
  CHECK(normalize(E::bar(E::gen("X"))) == E::bar(E::gen("X")));
}

TEST_CASE("registry declarations") {
  PatternRegistry r;
  r.declare("A", E::gen("B"));
  CHECK(r.declared_dual("B") == E::gen("A"));
  CHECK_FALSE(r.declared_dual("C").has_value());
  CHECK_THROWS_WITH_AS(r.declare("A", E::gen("C")), doctest::Contains("InconsistentDual"), Error);
  CHECK(PatternRegistry::standard().declared_dual("J") == E::twist(-4, J()));
}

TEST_CASE("rewrite_at rejects bad paths") {
  const E e = E::dual(J());
  CHECK_THROWS_WITH_AS(rewrite_at(e, {0}), doctest::Contains("InvalidPath"), Error);
  CHECK_THROWS_WITH_AS(rewrite_at(e, {1, 1}), doctest::Contains("InvalidPath"), Error);
  CHECK(rewrite_at(e, {}) == E::twist(-4, J()));
}

TEST_CASE("property: dual family identity for twists of J") {
  for (int m = -10; m <= 10; ++m) {
    CAPTURE(m);
    CHECK(normalize(E::dual(E::twist(m, J()))) == normalize(E::twist(-4 - m, J())));
  }
}

TEST_CASE("property: algebraic identities on random expressions") {
  for (int trial = 0; trial < 1000; ++trial) {
    const E e = random_expr(5);
    CAPTURE(e.to_string());
    const auto& reg = registry();
    const E n = normalize(e, reg);
    CHECK(is_normal(n));
    CHECK(normalize(n, reg) == n);
    CHECK(normalize(E::dual(E::dual(e)), reg) == n);
    CHECK(normalize(E::bar(E::bar(e)), reg) == n);
    CHECK(normalize(E::dual(E::bar(e)), reg) == normalize(E::bar(E::dual(e)), reg));
    CHECK(concordance_inverse(concordance_inverse(e, reg), reg) == n);
    CHECK(winding_number(e) == 1);
  }
}

TEST_CASE("property: confluence and termination under random strategies") {
  for (int trial = 0; trial < 1000; ++trial) {
    const E e = random_expr(5);
    CAPTURE(e.to_string());
    const E n = normalize(e, registry());
    CHECK(random_strategy(e) == n);
    CHECK(random_strategy(e) == n);
  }
}

TEST_CASE("compose reverses under dual") {
  const auto& reg = registry();
  for (int trial = 0; trial < 200; ++trial) {
    const E p = random_expr(3), q = random_expr(3);
    CHECK(dual(E::compose(p, q), reg) == normalize(E::compose(E::dual(q), E::dual(p)), reg));
    const auto n = oracle::uniform(-9, 9);
    CHECK(dual(E::twist(n, p), reg) == normalize(E::twist(-n, E::dual(p)), reg));
  }
}
