#include "conckit/braid.hpp"
#include "conckit/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace conckit;

namespace {

const std::vector<Rational> kPoints{2, 3, 5, 7, Rational(1, 2)};

bool matches_burau(const BraidWord& b, const LaurentPoly& alexander) {
  std::vector<Rational> values;
  for (const auto& t : kPoints) values.push_back(oracle::burau_alexander(b, t));
  return oracle::equal_up_to_unit_at(alexander, values, kPoints);
}

BraidWord random_knot_braid() {
  while (true) {
    const int strands = static_cast<int>(oracle::uniform(2, 5));
    const auto len = oracle::uniform(1, 12);
    std::vector<int> letters;
    for (long long i = 0; i < len; ++i) {
      int g = static_cast<int>(oracle::uniform(1, strands - 1));
      letters.push_back(oracle::uniform(0, 1) ? g : -g);
    }
    BraidWord b(strands, letters);
    if (b.closes_to_knot()) return b;
  }
}

LaurentPoly laplace_alexander(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPoly(v.entries(i, j)) - LaurentPoly::monomial(v.entries(j, i), 1);
  return oracle::laplace(m);
}

}  // namespace

TEST_CASE("braid parsing") {
  const BraidWord b = BraidWord::parse("1 1 1");
  CHECK(b.strands() == 2);
  CHECK(b.letters() == std::vector<int>{1, 1, 1});
  CHECK(BraidWord::parse(" 1  -2 1 -2 ").strands() == 3);
  CHECK(BraidWord::parse("1", 4).strands() == 4);
  CHECK(b.to_string() == "1 1 1");
  CHECK(b.mirrored().to_string() == "-1 -1 -1");
  CHECK_THROWS_WITH_AS(BraidWord::parse("1 0 1"), doctest::Contains("InvalidBraid"), Error);
  CHECK_THROWS_WITH_AS(BraidWord::parse("1 x"), doctest::Contains("InvalidBraid"), Error);
  CHECK_THROWS_WITH_AS(BraidWord::parse("3", 3), doctest::Contains("InvalidBraid"), Error);
  CHECK_THROWS_WITH_AS(BraidWord(1, {}), doctest::Contains("InvalidBraid"), Error);
}

TEST_CASE("closure components") {
  CHECK(BraidWord::parse("1 1").closure_components() == 2);
  CHECK(BraidWord::parse("1 1 1").closure_components() == 1);
  CHECK(BraidWord::parse("1", 3).closure_components() == 2);
  CHECK(BraidWord(3, {}).closure_components() == 3);
  CHECK_THROWS_WITH_AS(seifert_matrix(BraidWord::parse("1 1")), doctest::Contains("NotAKnot"), Error);
}

TEST_CASE("seifert_matrix examples") {
  const SeifertMatrix tref = seifert_matrix(BraidWord::parse("1 1 1"));
  CHECK(tref.size() == 2);
  CHECK(alexander_from_seifert(tref) == LaurentPoly{{1, 1}, {0, -1}, {-1, 1}});
  CHECK(signature(tref) == -2);
  CHECK(determinant(tref) == 3);

  const SeifertMatrix unknot = seifert_matrix(BraidWord::parse("1"));
  CHECK(unknot.size() == 0);
  CHECK(alexander_from_seifert(unknot) == LaurentPoly(Integer(1)));
  CHECK(signature(unknot) == 0);
  CHECK(determinant(unknot) == 1);

  const SeifertMatrix fig8 = seifert_matrix(BraidWord::parse("1 -2 1 -2"));
  CHECK(alexander_from_seifert(fig8) == LaurentPoly{{1, -1}, {0, 3}, {-1, -1}});
  CHECK(signature(fig8) == 0);

  const SeifertMatrix five2 = seifert_matrix(BraidWord::parse("1 1 1 2 -1 2", 3));
  CHECK(signature(five2) == -2);
  CHECK(determinant(five2) == 7);
}

TEST_CASE("trefoil and figure-8 against determinant expansion") {
  for (const char* word : {"1 1 1", "1 -2 1 -2", "-1 -1 -1"}) {
    const SeifertMatrix v = seifert_matrix(BraidWord::parse(word));
    CHECK(normalize_alexander(laplace_alexander(v)) == alexander_from_seifert(v));
  }
}

TEST_CASE("signature rejects degenerate forms") {
  SeifertMatrix v{IntMatrix{{0, 0}, {0, 0}}};
  CHECK_THROWS_WITH_AS(signature(v), doctest::Contains("Degenerate"), Error);
}

TEST_CASE("fixtures reproduce their recorded invariants") {
  const auto fixtures = load_default_fixtures();
  REQUIRE(fixtures.size() >= 9);
  for (const auto& f : fixtures) {
    CAPTURE(f.name);
    const SeifertMatrix v = seifert_matrix(f.braid);
    const LaurentPoly a = alexander_from_seifert(v);
    if (f.signature) CHECK(signature(v) == *f.signature);
    if (f.determinant) CHECK(determinant(v) == *f.determinant);
    if (f.alexander) CHECK(a == *f.alexander);
    CHECK(oracle::det(v.entries - v.entries.transposed()) == 1);
    CHECK(determinant(v) % 2 == 1);
    CHECK(matches_burau(f.braid, a));
  }
  CHECK(find_fixture(fixtures, "5_2").braid.to_string() == "1 1 1 2 -1 2");
  CHECK_THROWS_WITH_AS(find_fixture(fixtures, "10_1"), doctest::Contains("FixtureError"), Error);
}

TEST_CASE("fixture loading errors") {
  const auto dir = std::filesystem::temp_directory_path() / "conckit_braid_test";
  std::filesystem::create_directories(dir);
  CHECK_THROWS_WITH_AS(load_fixtures(dir / "missing.json"), doctest::Contains("FixtureError"), Error);
  {
    std::ofstream(dir / "bad.json") << "{\"knots\": [{\"name\": \"x\"}]}";
  }
  CHECK_THROWS_WITH_AS(load_fixtures(dir / "bad.json"), doctest::Contains("FixtureError"), Error);
  {
    std::ofstream(dir / "garbage.json") << "{not json";
  }
  CHECK_THROWS_WITH_AS(load_fixtures(dir / "garbage.json"), doctest::Contains("FixtureError"), Error);
}

TEST_CASE("fixture directory honours the environment override") {
  const auto dir = std::filesystem::temp_directory_path() / "conckit_env_fixtures";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "knots.json")
      << R"({"knots": [{"name": "3_1", "strands": 2, "word": "1 1 1", "expected": {"signature": -2}}]})";
  ::setenv("CONCKIT_FIXTURES", dir.c_str(), 1);
  const auto fixtures = load_default_fixtures();
  ::unsetenv("CONCKIT_FIXTURES");
  REQUIRE(fixtures.size() == 1);
  CHECK(fixtures[0].name == "3_1");
  CHECK_FALSE(fixtures[0].determinant.has_value());
}

TEST_CASE("property: random knot braids") {
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const BraidWord b = random_knot_braid();
    CAPTURE(b.to_string());
    const SeifertMatrix v = seifert_matrix(b);
    const IntMatrix& m = v.entries;
    CHECK(oracle::det(m - m.transposed()) == 1);
    const LaurentPoly a = alexander_from_seifert(v);
    CHECK(normalize_alexander(a) == a);
    CHECK(a.eval(Integer(1)) == 1);
    CHECK(matches_burau(b, a));
    const Integer d = determinant(v);
    CHECK(d % 2 == 1);
    CHECK(Rational(d) == abs(a.eval(Integer(-1))));

    const long long s = signature(v);
    CHECK(s % 2 == 0);
    CHECK(signature(seifert_matrix(b.mirrored())) == -s);
    const auto [p, pinv] = oracle::random_unimodular(v.size(), 10);
    CHECK(signature(SeifertMatrix{p * m * p.transposed()}) == s);
    ++checked;
  }
  CHECK(checked == 150);
}
