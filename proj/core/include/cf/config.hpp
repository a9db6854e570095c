#pragma once

#include <cstdint>

namespace cf {

// Resource caps shared across modules. Callers may raise or lower them;
// hitting a cap raises a Resource-category Error instead of silently
// truncating.
struct Limits {
  // Largest finite field order that enumeration-based routines will touch.
  std::uint64_t enumeration_cap = 1'000'000;
  // Largest number of candidate tuples a brute-force point search will scan.
  std::uint64_t brute_force_cap = 100'000'000;
  // Height bound for integer directions in the Hilbert identity search.
  int hilbert_max_height = 6;
};

}  // namespace cf
