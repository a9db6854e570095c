#pragma once

// Effective bounds: the subgroup-generator count realized via Schreier
// generators on finite permutation groups, the d^{dg+1} class-count bound,
// and the diagonal variable bound (n, n^2) derived from it.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cf/rational.hpp"

namespace cf {

class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);  // must be a bijection
  static Permutation identity(std::uint32_t degree);
  // cycle notation on points 0..degree-1: "(0 1)(2 3)", "()" for the identity
  static Permutation parse_cycles(std::string_view text, std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t x) const;

  Permutation compose(const Permutation& other) const;  // (a.compose(b))(x) = a(b(x))
  Permutation inverse() const;
  bool is_identity() const;

  std::string cycle_str() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

 private:
  std::vector<std::uint32_t> images_;
};

struct PermGroupSpec {
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;  // nonempty, all of the given degree
};

// splits "(0 1),(0 1 2 3)" on top-level commas; each piece is a cycle product
PermGroupSpec parse_group(std::string_view generators_text, std::uint32_t degree);

struct SchreierResult {
  std::uint32_t base = 0;
  std::vector<std::uint32_t> orbit;  // breadth-first discovery order
  std::uint64_t index = 0;           // orbit size = [G : Stab(base)]
  BigInt generator_count_bound;      // 1 + index*(g-1)
  // Schreier generators t_{s(x)}^{-1} s t_x, identities and repeats removed;
  // the breadth-first tree contributes index-1 identities, which is what
  // keeps this list within the bound
  std::vector<Permutation> subgroup_generators;
};

SchreierResult schreier_generators(const PermGroupSpec& group, std::uint32_t base);

// order of the generated group by closure; enumeration_cap bounds the size
BigInt group_order(const std::vector<Permutation>& generators, std::uint64_t cap = 1'000'000);

BigInt generator_bound(std::uint64_t g, const BigInt& index);  // 1 + index*(g-1)
BigInt kummer_bound(std::uint64_t d, std::uint64_t g);         // d^{dg+1}
std::pair<BigInt, BigInt> diagonal_variable_bound(std::uint64_t d, std::uint64_t g);  // (n, n^2)

}  // namespace cf
