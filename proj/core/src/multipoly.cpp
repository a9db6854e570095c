#include "cf/multipoly.hpp"

#include <sstream>

#include "cf/errors.hpp"

namespace cf {

void MultiPoly::add_term(const std::vector<unsigned>& exponents, const Rational& coeff) {
  if (exponents.size() != n_) {
    throw Error(ErrorCode::BadArgument, "exponent vector length does not match variable count");
  }
  if (coeff == 0) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [expo, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(coeff) << ")";
    for (std::size_t i = 0; i < expo.size(); ++i) {
      if (expo[i] == 0) continue;
      os << "*x" << (i + 1);
      if (expo[i] > 1) os << "^" << expo[i];
    }
  }
  return os.str();
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt multinomial(unsigned e, const std::vector<unsigned>& alpha) {
  unsigned total = 0;
  BigInt den = 1;
  for (unsigned a : alpha) {
    total += a;
    den *= factorial(a);
  }
  if (total != e) throw Error(ErrorCode::BadArgument, "multinomial index does not sum to e");
  return factorial(e) / den;
}

namespace {

void compositions_rec(unsigned rem, std::size_t pos, std::vector<unsigned>& cur,
                      std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = rem;
    out.push_back(cur);
    return;
  }
  for (unsigned v = rem;; --v) {  // head descending, so output is lex-descending
    cur[pos] = v;
    compositions_rec(rem - v, pos + 1, cur, out);
    if (v == 0) break;
  }
}

}  // namespace

std::vector<std::vector<unsigned>> compositions(unsigned total, std::size_t n) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  compositions_rec(total, 0, cur, out);
  return out;
}

MultiPoly power_of_linear_form(const std::vector<Rational>& coeffs, unsigned e) {
  std::size_t n = coeffs.size();
  MultiPoly out(n);
  for (const auto& alpha : compositions(e, n)) {
    Rational c(multinomial(e, alpha));
    bool zero = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] == 0) continue;
      if (coeffs[i] == 0) {
        zero = true;
        break;
      }
      c *= pow(coeffs[i], alpha[i]);
    }
    if (!zero) out.add_term(alpha, c);
  }
  return out;
}

MultiPoly sum_of_squares_power(std::size_t n, unsigned d) {
  MultiPoly out(n);
  for (const auto& alpha : compositions(d, n)) {
    std::vector<unsigned> doubled(alpha);
    for (auto& a : doubled) a *= 2;
    out.add_term(doubled, Rational(multinomial(d, alpha)));
  }
  return out;
}

MultiPoly expand_power_sum(const std::vector<std::pair<Rational, std::vector<Rational>>>& terms,
                           std::size_t n, unsigned e) {
  MultiPoly out(n);
  for (const auto& [lambda, form] : terms) {
    if (form.size() != n) {
      throw Error(ErrorCode::BadArgument, "linear form length does not match variable count");
    }
    MultiPoly p = power_of_linear_form(form, e);
    for (const auto& [expo, coeff] : p.terms()) out.add_term(expo, lambda * coeff);
  }
  return out;
}

}  // namespace cf
