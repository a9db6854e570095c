#pragma once

// Hilbert identities (x_1^2+...+x_n^2)^d = sum_i lambda_i * ell_i(x)^{2d}
// with positive rational weights: exact search, verification by expansion,
// and the weight-absorption step that turns lambda * base^e into a plain
// sum of e-th powers.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cf/config.hpp"
#include "cf/field.hpp"
#include "cf/rational.hpp"

namespace cf {

struct HilbertTerm {
  Rational lambda;             // > 0
  std::vector<Rational> form;  // length n; the linear form's coefficients
};

struct HilbertIdentity {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<HilbertTerm> terms;
};

// Searches integer direction vectors grouped into orbits under coordinate
// permutations and sign changes, solving the exact linear system on orbit
// weights for each orbit subset until a strictly positive solution appears;
// the height bound escalates up to limits.hilbert_max_height.
// SearchBudgetExceeded when the search space is exhausted (not a
// nonexistence claim).
HilbertIdentity find_hilbert_identity(std::size_t n, unsigned d, const Limits& limits = {});

// True iff every lambda > 0 and the expansion equals (x_1^2+...+x_n^2)^d.
bool verify_identity(const HilbertIdentity& id);

struct ScaledPowerTerm {
  Element value;
  BigInt count;
};

// lambda = a/b in lowest terms: a*b^{e-1} copies of base/b have e-th powers
// summing to lambda * base^e exactly. Char-0 fields only.
ScaledPowerTerm scale_to_pure_power_term(const Rational& lambda, const Element& base, unsigned e);

// Materialized copy list; EnumerationCapExceeded when the copy count
// exceeds cap.
std::vector<Element> scale_to_pure_powers(const Rational& lambda, const Element& base, unsigned e,
                                          std::uint64_t cap = 1'000'000);

}  // namespace cf
