#include "cf/rational.hpp"

#include <cctype>

namespace cf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw Error(ErrorCode::BadArgument, "not an integer: '" + std::string(text) + "'");
  }
  BigInt value{std::string(body)};
  return neg ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den;
  try {
    den = parse_bigint(text.substr(slash + 1));
  } catch (const Error&) {
    throw Error(ErrorCode::BadArgument, "not a rational: '" + std::string(text) + "'");
  }
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

BigInt pow(BigInt base, std::uint64_t exp) {
  BigInt result(1);
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

Rational pow(const Rational& base, std::uint64_t exp) {
  return Rational(pow(numerator(base), exp), pow(denominator(base), exp));
}

}  // namespace cf
