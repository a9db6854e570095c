#pragma once

// Sums of d-th powers: the Sigma_{d,r} chain over a finite field, verifiable
// power-sum certificates, minimal-rank search, and the characteristic-0
// induction that writes -1 as a sum of d-th powers from a sum-of-squares
// certificate.

#include <cstdint>
#include <vector>

#include "cf/config.hpp"
#include "cf/field.hpp"
#include "cf/rational.hpp"
#include "cf/residue.hpp"

namespace cf {

// Levels use the at-most-r reading: level r holds everything expressible as a
// sum of at most r nonzero d-th powers, plus 0. That keeps the chain monotone
// (the exact-r sets need not be; over F_2 with d = 1, sums of exactly two 1s
// collapse to {0}).
struct SigmaLevel {
  std::vector<std::uint32_t> classes;  // ascending K_d class indices
  bool contains_zero = true;           // 0 belongs to every level by definition
};

class SigmaChain {
 public:
  SigmaChain(FieldHandle field, std::uint64_t d, const Limits& limits = {});

  const ResidueTable& table() const { return table_; }
  std::uint32_t stabilization_index() const { return stabilization_index_; }

  // levels 1 .. level_count(), where level_count() = stabilization_index + 1
  // (the first repeated level is kept so stabilization is visible)
  std::uint32_t level_count() const { return static_cast<std::uint32_t>(levels_.size()); }
  const SigmaLevel& level(std::uint32_t r) const;
  bool level_contains(std::uint32_t r, const Element& a) const;

  // least r whose level holds the class; 0 when it never enters
  std::uint32_t first_level_of_class(std::uint32_t cls) const;

  // stabilized level covers every class (then every element is a sum of
  // d-th powers)
  bool stabilized_full() const;

 private:
  ResidueTable table_;
  std::vector<SigmaLevel> levels_;
  std::vector<std::uint32_t> first_level_;
  std::uint32_t stabilization_index_ = 0;
};

struct PowerTerm {
  Element value;
  BigInt count;  // multiplicity, >= 1; kept exact because tower counts explode
};

class PowerSumCertificate {
 public:
  // merges duplicate values (first-seen order) and verifies exactly
  PowerSumCertificate(Element target, std::uint64_t d, std::vector<PowerTerm> terms);
  static PowerSumCertificate from_witnesses(Element target, std::uint64_t d,
                                            const std::vector<Element>& witnesses);

  const FieldHandle& field() const { return target_.field(); }
  const Element& target() const { return target_; }
  std::uint64_t d() const { return d_; }
  const std::vector<PowerTerm>& terms() const { return terms_; }

  BigInt witness_count() const;  // total multiplicity
  bool all_counts_one() const;
  std::vector<Element> flat_witnesses(std::uint64_t cap = 4096) const;

  // sum_i count_i * value_i^d == target, values nonzero, counts >= 1;
  // InvalidDocument on any violation
  void verify() const;

 private:
  Element target_;
  std::uint64_t d_;
  std::vector<PowerTerm> terms_;
};

struct WaringResult {
  std::uint32_t rank = 0;
  PowerSumCertificate certificate;
};

// Minimal r with c in Sigma_{d,r}; witnesses picked greedily in element
// enumeration order. ZeroElement for c = 0, NotRepresentable when c lies
// outside the stabilized chain.
WaringResult waring_rank(const SigmaChain& chain, const Element& c);
WaringResult waring_rank(const FieldHandle& field, std::uint64_t d, const Element& c,
                         const Limits& limits = {});

// Finite fields: rank search at c = -1 (always representable; (p-1) copies
// of 1 witness the fallback guarantee). Characteristic 0 needs the overload
// with a sum-of-squares certificate.
PowerSumCertificate represent_minus_one(const FieldHandle& field, std::uint64_t d,
                                        const Limits& limits = {});
PowerSumCertificate represent_minus_one(const FieldHandle& field, std::uint64_t d,
                                        const PowerSumCertificate& minus_one_squares,
                                        const Limits& limits = {});

// c = ((c+1)/2)^2 + sum_i (a_i (c-1)/2)^2 given sum_i a_i^2 = -1; zero
// witnesses dropped. CharacteristicTwo when 2 is not invertible.
PowerSumCertificate sum_of_squares_rep(const Element& c,
                                       const PowerSumCertificate& minus_one_squares);

// Writes d = 2^m * u, u odd, and lifts -1 = (-1)^u through m doubling steps;
// each step rewrites witnesses as sums of squares, applies the matching
// Hilbert identity, and absorbs the rational weights into pure powers.
// HilbertIdentityUnavailable when the required identity is out of reach.
PowerSumCertificate minus_one_power_tower(const FieldHandle& field, std::uint64_t d,
                                          const PowerSumCertificate& minus_one_squares,
                                          const Limits& limits = {});

}  // namespace cf
