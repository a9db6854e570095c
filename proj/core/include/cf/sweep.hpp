#pragma once

// Grid experiment over prime powers q and exponents d: per cell, the class
// count is checked against the gcd formula, the chain stabilization and the
// constructive Fermat solver against the theorem bound, the oracle-minimal
// Fermat n against the rank of -1, and the class count against the d^{dg+1}
// bound; optional seeded random diagonal forms exercise the pigeonhole
// solver. Cells run in parallel, aggregation is by ascending (q, d).

#include <cstdint>
#include <string>
#include <vector>

#include "cf/config.hpp"
#include "cf/rational.hpp"

namespace cf {

struct SweepOptions {
  std::uint64_t q_max = 31;
  std::uint64_t d_max = 6;
  std::uint64_t trials = 0;  // random all-nonzero diagonal forms per cell
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 picks the hardware concurrency
  Limits limits;
};

struct SweepCell {
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  std::uint64_t class_count = 0;
  std::uint64_t formula_class_count = 0;
  std::uint32_t stabilization_index = 0;
  std::uint32_t minus_one_rank = 0;
  std::uint32_t constructive_n = 0;  // the theorem's n = |K_d|
  std::uint32_t oracle_min_n = 0;    // least n with a Fermat point, by scan
  BigInt kummer_bound;               // d^{d+1}, the g = 1 case
  std::vector<std::string> violations;
};

struct SweepReport {
  SweepOptions options;
  std::vector<SweepCell> cells;
  std::vector<std::string> violations;  // cell-tagged aggregate; empty = pass
};

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t q_max);

SweepReport run_sweep(const SweepOptions& options);

}  // namespace cf
