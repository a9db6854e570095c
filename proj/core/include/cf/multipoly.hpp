#pragma once

// Exact multivariate polynomials over Q, just enough machinery to expand
// sums of powers of linear forms and compare them coefficient by coefficient.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cf/rational.hpp"

namespace cf {

class MultiPoly {
 public:
  explicit MultiPoly(std::size_t variable_count) : n_(variable_count) {}

  std::size_t variable_count() const { return n_; }

  // merges into an existing monomial, drops terms that cancel to zero
  void add_term(const std::vector<unsigned>& exponents, const Rational& coeff);

  const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }

  bool operator==(const MultiPoly& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

  std::string str() const;  // diagnostics only

 private:
  std::size_t n_;
  std::map<std::vector<unsigned>, Rational> terms_;
};

BigInt factorial(unsigned n);

// e! / (alpha_1! ... alpha_k!), the coefficient of the alpha monomial class
BigInt multinomial(unsigned e, const std::vector<unsigned>& alpha);

// all length-n vectors of non-negative integers summing to total, lex order
std::vector<std::vector<unsigned>> compositions(unsigned total, std::size_t n);

// (c_1 x_1 + ... + c_n x_n)^e expanded exactly
MultiPoly power_of_linear_form(const std::vector<Rational>& coeffs, unsigned e);

// (x_1^2 + ... + x_n^2)^d expanded exactly
MultiPoly sum_of_squares_power(std::size_t n, unsigned d);

// sum_i lambda_i * (ell_i . x)^e for (lambda, ell) pairs
MultiPoly expand_power_sum(const std::vector<std::pair<Rational, std::vector<Rational>>>& terms,
                           std::size_t n, unsigned e);

}  // namespace cf
