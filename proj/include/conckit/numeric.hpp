#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace conckit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p/q", "p" or "-p/q". Throws Error("InvalidFraction") on malformed
/// text or a zero denominator. The result is reduced.
Rational parse_rational(std::string_view text);

/// Narrowing with a range check; throws Error("Overflow").
std::int64_t to_int64(const Integer& z);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);

}  // namespace conckit
