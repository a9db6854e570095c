#include "cf/sweep.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "cf/errors.hpp"
#include "cf/bounds.hpp"
#include "cf/field.hpp"
#include "cf/residue.hpp"
#include "cf/solvers.hpp"
#include "cf/waring.hpp"

namespace cf {
namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

void note(SweepCell& cell, const std::string& message) { cell.violations.push_back(message); }

// Scan n = 1, 2, ... for the least n where the Fermat form has a nontrivial
// zero, found by exhaustive projective search. Independent of the chain and
// certificate machinery; this is the oracle the constructive path is checked
// against.
std::uint32_t oracle_min_fermat_n(const FieldHandle& field, std::uint64_t d,
                                  std::uint32_t n_cap, const Limits& limits) {
  for (std::uint32_t n = 1; n <= n_cap; ++n) {
    if (brute_force_point(fermat_form(field, d, n), limits).solution) return n;
  }
  return 0;  // none found up to the cap
}

SweepCell run_cell(const FieldHandle& field, std::uint64_t q, std::uint64_t d,
                   const SweepOptions& options) {
  SweepCell cell;
  cell.q = q;
  cell.d = d;

  ResidueTable table(field, d, options.limits);
  cell.class_count = table.class_count();
  cell.formula_class_count = class_count_formula(q, d);
  if (cell.class_count != cell.formula_class_count) {
    std::ostringstream os;
    os << "class count " << cell.class_count << " differs from gcd formula "
       << cell.formula_class_count;
    note(cell, os.str());
  }

  SigmaChain chain(field, d, options.limits);
  cell.stabilization_index = chain.stabilization_index();
  if (cell.stabilization_index > cell.class_count) {
    std::ostringstream os;
    os << "stabilization index " << cell.stabilization_index << " exceeds class count "
       << cell.class_count;
    note(cell, os.str());
  }

  WaringResult minus_one = waring_rank(chain, field->from_integer(-1));
  cell.minus_one_rank = minus_one.rank;

  cell.constructive_n = static_cast<std::uint32_t>(cell.class_count);
  SolveOutcome fermat = fermat_point(field, d, cell.constructive_n, options.limits);
  if (!fermat.solution) {
    note(cell, "no Fermat point at n = class count");
  } else if (fermat.method != SolveMethod::Certificate) {
    note(cell, "Fermat point at n = class count needed the brute-force fallback");
  }

  cell.oracle_min_n = oracle_min_fermat_n(field, d, cell.constructive_n, options.limits);
  if (cell.oracle_min_n == 0) {
    note(cell, "oracle found no Fermat point up to n = class count");
  } else if (cell.oracle_min_n != cell.minus_one_rank) {
    std::ostringstream os;
    os << "oracle minimal n " << cell.oracle_min_n << " differs from rank of -1 ("
       << cell.minus_one_rank << ")";
    note(cell, os.str());
  }

  cell.kummer_bound = kummer_bound(d, 1);
  if (BigInt(cell.class_count) > cell.kummer_bound) {
    note(cell, "class count exceeds the d^{d+1} bound");
  }

  if (options.trials > 0) {
    // Deterministic per-cell stream regardless of scheduling.
    std::mt19937_64 rng(options.seed * 1000003ULL + q * 1009ULL + d);
    std::uniform_int_distribution<std::uint64_t> unit(1, q - 1);
    std::uint64_t len = cell.class_count * cell.class_count + 1;
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      DiagonalForm form{field, d, {}};
      form.coefficients.reserve(len);
      for (std::uint64_t i = 0; i < len; ++i)
        form.coefficients.push_back(field->element_at(unit(rng)));
      SolveOutcome outcome = diagonal_solve(form, options.limits);
      if (!outcome.solution) {
        std::ostringstream os;
        os << "trial " << t << ": no solution for an all-nonzero form in " << len
           << " variables";
        note(cell, os.str());
      } else if (outcome.method == SolveMethod::BruteForce) {
        std::ostringstream os;
        os << "trial " << t << ": pigeonhole solver fell back to brute force";
        note(cell, os.str());
      }
    }
  }

  return cell;
}

std::vector<SweepCell> run_field(std::uint64_t q, const SweepOptions& options) {
  FieldHandle field = Field::make(FieldSpec::parse("q=" + std::to_string(q)));
  std::vector<SweepCell> cells;
  cells.reserve(options.d_max);
  for (std::uint64_t d = 1; d <= options.d_max; ++d)
    cells.push_back(run_cell(field, q, d, options));
  return cells;
}

}  // namespace

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t q_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= q_max; ++p) {
    if (!is_prime_u64(p)) continue;
    for (std::uint64_t q = p; q <= q_max; q *= p) {
      out.push_back(q);
      if (q > q_max / p) break;  // next power would overflow
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SweepReport run_sweep(const SweepOptions& options) {
  if (options.q_max < 2 || options.d_max < 1)
    throw Error(ErrorCode::BadArgument, "sweep needs q_max >= 2 and d_max >= 1");

  SweepReport report;
  report.options = options;

  std::vector<std::uint64_t> qs = prime_powers_up_to(options.q_max);
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Batches of q-level tasks; results joined in ascending q order, so the
  // report is byte-identical however the batch executes.
  for (std::size_t start = 0; start < qs.size(); start += threads) {
    std::size_t stop = std::min(qs.size(), start + threads);
    std::vector<std::future<std::vector<SweepCell>>> batch;
    batch.reserve(stop - start);
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(std::launch::async, run_field, qs[i], std::cref(options)));
    for (auto& fut : batch) {
      std::vector<SweepCell> cells = fut.get();
      for (SweepCell& cell : cells) report.cells.push_back(std::move(cell));
    }
  }

  for (const SweepCell& cell : report.cells) {
    for (const std::string& v : cell.violations) {
      std::ostringstream os;
      os << "q=" << cell.q << " d=" << cell.d << ": " << v;
      report.violations.push_back(os.str());
    }
  }
  return report;
}

}  // namespace cf
