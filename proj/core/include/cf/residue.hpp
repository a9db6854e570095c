#pragma once

// The finite group K_d = K^x / (K^x)^d over a finite field, materialized as
// an indexed class table. Built by enumeration (d-th powers, then cosets);
// the gcd closed form lives in class_count_formula and is never used by the
// constructor, so the two can cross-check each other.

#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "cf/field.hpp"

namespace cf {

class ResidueTable {
 public:
  ResidueTable(FieldHandle field, std::uint64_t d, const Limits& limits = {});

  const FieldHandle& field() const { return field_; }
  std::uint64_t d() const { return d_; }
  std::uint64_t order() const { return q_; }
  std::uint32_t class_count() const { return static_cast<std::uint32_t>(cosets_.size()); }

  // class of a nonzero element; ZeroElement on 0
  std::uint32_t class_of(const Element& a) const;
  std::uint32_t class_of_index(std::uint64_t idx) const;

  // representative of a class; class 0 is represented by 1
  Element representative(std::uint32_t cls) const;
  std::uint64_t representative_index(std::uint32_t cls) const { return rep_index_.at(cls); }

  // quotient-group law: the class of a*b for a in class x, b in class y
  std::uint32_t class_mul(std::uint32_t x, std::uint32_t y) const;

  // element indices of one coset, ascending; coset(0) is the d-th powers
  const std::vector<std::uint64_t>& coset(std::uint32_t cls) const { return cosets_.at(cls); }

 private:
  FieldHandle field_;
  std::uint64_t d_;
  std::uint64_t q_;
  std::vector<std::uint32_t> class_of_index_;        // size q, slot 0 unused
  std::vector<std::uint64_t> rep_index_;             // per class
  std::vector<std::vector<std::uint64_t>> cosets_;   // per class, ascending indices
  std::vector<std::vector<std::uint32_t>> mul_;      // quotient group table
};

inline std::uint64_t class_count_formula(std::uint64_t q, std::uint64_t d) {
  return std::gcd(d, q - 1);
}

}  // namespace cf
