#include "conckit/braid.hpp"

#include "conckit/error.hpp"
#include "conckit/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#ifndef CONCKIT_FIXTURE_DIR
#define CONCKIT_FIXTURE_DIR "fixtures"
#endif

namespace conckit {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw Error("InvalidBraid", "a braid needs at least 2 strands");
  for (int letter : letters_) {
    const int g = std::abs(letter);
    if (g < 1 || g > strands_ - 1)
      throw Error("InvalidBraid", "letter " + std::to_string(letter) + " out of range for " +
                                      std::to_string(strands_) + " strands");
  }
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  int widest = 1;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value == 0)
      throw Error("InvalidBraid", "bad braid letter '" + token + "'");
    letters.push_back(value);
    widest = std::max(widest, std::abs(value));
  }
  return BraidWord(strands.value_or(widest + 1), std::move(letters));
}

int BraidWord::closure_components() const {
  std::vector<int> perm(strands_);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : letters_) {
    const int i = std::abs(letter) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(strands_, false);
  int cycles = 0;
  for (int s = 0; s < strands_; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int j = s; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord BraidWord::mirrored() const {
  std::vector<int> flipped(letters_.size());
  std::transform(letters_.begin(), letters_.end(), flipped.begin(), [](int x) { return -x; });
  return BraidWord(strands_, std::move(flipped));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

// Seifert's algorithm on a closed braid yields one disk per strand stacked
// along the braid axis and one half-twisted band per crossing. For a knot
// every generator occurs, so the surface is connected and H_1 has a basis of
// loops, one for each pair of consecutive bands between the same two disks.
// Loop j runs up band j and down the next band of the same generator.
SeifertMatrix seifert_matrix(const BraidWord& braid) {
  if (!braid.closes_to_knot())
    throw Error("NotAKnot", "closure of '" + braid.to_string() + "' has " +
                                std::to_string(braid.closure_components()) + " components");
  const auto& x = braid.letters();
  const std::size_t c = x.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(c, none);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t l = j + 1; l < c; ++l)
      if (std::abs(x[l]) == std::abs(x[j])) {
        next[j] = l;
        break;
      }
  std::vector<std::size_t> loops;
  for (std::size_t j = 0; j < c; ++j)
    if (next[j] != none) loops.push_back(j);

  const std::size_t g2 = loops.size();
  IntMatrix v(g2, g2);
  for (std::size_t a = 0; a < g2; ++a) {
    const std::size_t i = loops[a];
    const std::size_t hi = next[i];
    // Self-linking: the push-off of a loop through two like-signed bands
    // picks up a half twist from each.
    if (x[i] > 0 && x[hi] > 0)
      v(a, a) = -1;
    else if (x[i] < 0 && x[hi] < 0)
      v(a, a) = 1;
    for (std::size_t b = a + 1; b < g2; ++b) {
      const std::size_t j = loops[b];
      const std::size_t hj = next[j];
      if (hj < hi || hi < j) continue;  // nested or disjoint spans
      if (hi == j) {
        // Consecutive loops on the same pair of disks share band j.
        if (x[j] > 0)
          v(b, a) = 1;
        else
          v(a, b) = -1;
        continue;
      }
      // Interleaved loops on neighbouring disk pairs.
      const int d = std::abs(x[i]) - std::abs(x[j]);
      if (d == 1)
        v(b, a) = -1;
      else if (d == -1)
        v(a, b) = 1;
    }
  }
  return SeifertMatrix{std::move(v)};
}

LaurentPoly alexander_from_seifert(const SeifertMatrix& sm) {
  const IntMatrix& v = sm.entries;
  const std::size_t n = v.rows();
  if (n == 0) return LaurentPoly(Integer(1));
  const IntMatrix vt = v.transposed();
  // det(V - t V^T) has degree <= n; recover it from n + 1 exact samples by
  // Newton interpolation at t = 0, 1, ..., n.
  std::vector<Rational> samples(n + 1);
  for (std::size_t s = 0; s <= n; ++s) samples[s] = Rational(determinant(v - Integer(s) * vt));
  std::vector<Rational> newton = samples;
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i)
      newton[i] = (newton[i] - newton[i - 1]) / Rational(static_cast<long long>(level));
  // Expand sum newton[i] * prod_{j < i} (t - j) into monomials.
  std::vector<Rational> coeffs(n + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += newton[i] * basis[d];
    std::vector<Rational> grown(basis.size() + 1, Rational(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      grown[d + 1] += basis[d];
      grown[d] -= Rational(static_cast<long long>(i)) * basis[d];
    }
    basis = std::move(grown);
  }
  LaurentPoly::Terms terms;
  for (std::size_t d = 0; d <= n; ++d) {
    if (boost::multiprecision::denominator(coeffs[d]) != 1)
      throw Error("InternalError", "non-integral Alexander coefficient");
    terms[static_cast<LaurentPoly::Exponent>(d)] = boost::multiprecision::numerator(coeffs[d]);
  }
  return normalize_alexander(LaurentPoly(terms));
}

long long signature(const SeifertMatrix& sm) {
  const IntMatrix sym = sm.entries + sm.entries.transposed();
  const Inertia in = inertia(sym);
  if (in.zero != 0) throw Error("Degenerate", "V + V^T is singular");
  return in.signature();
}

Integer determinant(const SeifertMatrix& sm) {
  Integer d = determinant(sm.entries + sm.entries.transposed());
  return d < 0 ? Integer(-d) : d;
}

std::filesystem::path fixture_directory() {
  if (const char* env = std::getenv("CONCKIT_FIXTURES"); env != nullptr && *env != '\0')
    return std::filesystem::path(env);
  return std::filesystem::path(CONCKIT_FIXTURE_DIR);
}

std::vector<KnotFixture> load_fixtures(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("FixtureError", "cannot open " + file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error("FixtureError", file.string() + ": " + e.what());
  }
  std::vector<KnotFixture> out;
  try {
    for (const auto& entry : doc.at("knots")) {
      const int strands = entry.at("strands").get<int>();
      KnotFixture f{entry.at("name").get<std::string>(),
                    BraidWord::parse(entry.at("word").get<std::string>(), strands),
                    std::nullopt,
                    std::nullopt,
                    std::nullopt,
                    entry.value("provenance", std::string())};
      if (entry.contains("expected")) {
        const auto& exp = entry.at("expected");
        if (exp.contains("signature")) f.signature = exp.at("signature").get<long long>();
        if (exp.contains("determinant")) f.determinant = Integer(exp.at("determinant").get<long long>());
        if (exp.contains("alexander")) f.alexander = laurent_from_json(exp.at("alexander"));
      }
      out.push_back(std::move(f));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("FixtureError", file.string() + ": " + e.what());
  }
  return out;
}

std::vector<KnotFixture> load_default_fixtures() { return load_fixtures(fixture_directory() / "knots.json"); }

KnotFixture find_fixture(const std::vector<KnotFixture>& fixtures, std::string_view name) {
  for (const auto& f : fixtures)
    if (f.name == name) return f;
  throw Error("FixtureError", "no fixture named '" + std::string(name) + "'");
}

}  // namespace conckit
