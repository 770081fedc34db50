#pragma once

#include "conckit/numeric.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace conckit {

/// Integer Laurent polynomial in t. Stored sparsely as exponent -> coefficient
/// with no zero coefficients; the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  /// Terms given as {exponent, coefficient}; repeated exponents accumulate.
  LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms);
  explicit LaurentPoly(const Terms& terms);

  static LaurentPoly monomial(Integer coeff, Exponent exp);
  /// Dense constructor: coeffs[i] is the coefficient of t^(low + i).
  template <typename Range>
  static LaurentPoly from_dense(const Range& coeffs, Exponent low = 0) {
    LaurentPoly p;
    Exponent e = low;
    for (const auto& c : coeffs) p.add_term(e++, Integer(c));
    return p;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(Exponent e) const;
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  /// Exact value at a nonzero integer; throws Error("ZeroEvaluation") at 0.
  Rational eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  /// p(t) -> p(t^-1).
  LaurentPoly invert_variable() const;
  LaurentPoly shifted(Exponent k) const;
  LaurentPoly negated() const;

  /// "4*t^-1 - 7 + 4*t", exponents ascending; "0" for zero.
  std::string to_string() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(Exponent e, const Integer& c);

  Terms terms_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);
Rational poly_eval_int(const LaurentPoly& p, const Integer& x);

/// Returns the unit multiple +-t^k * p that is symmetric under t -> t^-1 and
/// has non-negative value at t = 1. Throws Error("NotSymmetrizable") when no
/// unit multiple is symmetric (including p = 0).
LaurentPoly normalize_alexander(const LaurentPoly& p);

/// Equality up to multiplication by +-t^k, via normalize_alexander.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace conckit
