#pragma once

#include "conckit/laurent.hpp"
#include "conckit/matrix.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conckit {

/// A braid on `strands` strands. Letter i stands for the Artin generator
/// sigma_|i|, positive or negative according to the sign of i.
class BraidWord {
 public:
  /// Throws Error("InvalidBraid") if strands < 2 or a letter is out of range.
  BraidWord(int strands, std::vector<int> letters);

  /// Parses whitespace-separated signed integers ("1 1 1"). When `strands` is
  /// not given, the smallest admissible strand count is used.
  static BraidWord parse(std::string_view text, std::optional<int> strands = std::nullopt);

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }

  /// Number of components of the closure.
  int closure_components() const;
  bool closes_to_knot() const { return closure_components() == 1; }

  BraidWord mirrored() const;
  std::string to_string() const;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Seifert matrix of a knot; V - V^T is unimodular.
struct SeifertMatrix {
  IntMatrix entries;

  std::size_t size() const { return entries.rows(); }
};

/// Seifert matrix of the surface that Seifert's algorithm produces on the
/// braid closure: one disk per strand, one band per crossing. Throws
/// Error("NotAKnot") when the closure has more than one component.
SeifertMatrix seifert_matrix(const BraidWord& braid);

/// normalize_alexander(det(V - t V^T)); 1 for the empty matrix.
LaurentPoly alexander_from_seifert(const SeifertMatrix& v);

/// Signature of V + V^T. Throws Error("Degenerate") if det(V + V^T) = 0.
long long signature(const SeifertMatrix& v);

/// |det(V + V^T)|.
Integer determinant(const SeifertMatrix& v);

/// A named braid with the invariants it is expected to reproduce.
struct KnotFixture {
  std::string name;
  BraidWord braid;
  std::optional<long long> signature;
  std::optional<Integer> determinant;
  std::optional<LaurentPoly> alexander;
  std::string provenance;
};

/// Directory holding knots.json: $CONCKIT_FIXTURES if set, else the
/// directory configured at build time.
std::filesystem::path fixture_directory();

/// Reads a fixture file. Throws Error("FixtureError") on I/O or schema errors.
std::vector<KnotFixture> load_fixtures(const std::filesystem::path& file);
std::vector<KnotFixture> load_default_fixtures();
KnotFixture find_fixture(const std::vector<KnotFixture>& fixtures, std::string_view name);

}  // namespace conckit
