#pragma once

// Exact integer and rational arithmetic used everywhere in the library.
// cpp_rational keeps values canonical (reduced, positive denominator),
// which is exactly the invariant the rest of the code relies on.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cf/errors.hpp"

namespace cf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const BigInt& n) { return n.str(); }

// "a" when the denominator is 1, otherwise "a/b".
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt parse_bigint(std::string_view text);

// Accepts "a" and "a/b" with optional leading sign on a. Rejects b == 0.
Rational parse_rational(std::string_view text);

BigInt pow(BigInt base, std::uint64_t exp);
Rational pow(const Rational& base, std::uint64_t exp);

}  // namespace cf
