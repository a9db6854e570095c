#include <benchmark/benchmark.h>

#include <cstdint>

#include "cf/field.hpp"
#include "cf/hilbert.hpp"
#include "cf/residue.hpp"
#include "cf/solvers.hpp"
#include "cf/waring.hpp"

namespace {

using namespace cf;

void BM_ResidueTable(benchmark::State& state) {
  FieldHandle field = Field::make("q=" + std::to_string(state.range(0)));
  for (auto _ : state) {
    ResidueTable table(field, 6);
    benchmark::DoNotOptimize(table.class_count());
  }
}
BENCHMARK(BM_ResidueTable)->Arg(31)->Arg(509)->Arg(4096);

void BM_SigmaChain(benchmark::State& state) {
  FieldHandle field = Field::make("q=" + std::to_string(state.range(0)));
  for (auto _ : state) {
    SigmaChain chain(field, 12);
    benchmark::DoNotOptimize(chain.stabilization_index());
  }
}
BENCHMARK(BM_SigmaChain)->Arg(31)->Arg(509);

void BM_WaringRank(benchmark::State& state) {
  FieldHandle field = Field::make("q=509");
  SigmaChain chain(field, 4);
  Element target = field->from_integer(-1);
  for (auto _ : state) {
    WaringResult result = waring_rank(chain, target);
    benchmark::DoNotOptimize(result.rank);
  }
}
BENCHMARK(BM_WaringRank);

void BM_FermatPoint(benchmark::State& state) {
  FieldHandle field = Field::make("q=" + std::to_string(state.range(0)));
  std::uint64_t d = 6;
  auto n = static_cast<std::uint32_t>(class_count_formula(field->order(), d));
  for (auto _ : state) {
    SolveOutcome outcome = fermat_point(field, d, n);
    benchmark::DoNotOptimize(outcome.solution.has_value());
  }
}
BENCHMARK(BM_FermatPoint)->Arg(31)->Arg(499);

void BM_BruteForceOracle(benchmark::State& state) {
  FieldHandle field = Field::make("q=31");
  DiagonalForm form = fermat_form(field, 6, 3);
  for (auto _ : state) {
    SolveOutcome outcome = brute_force_point(form);
    benchmark::DoNotOptimize(outcome.solution.has_value());
  }
}
BENCHMARK(BM_BruteForceOracle);

void BM_HilbertIdentity(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    HilbertIdentity id = find_hilbert_identity(n, d);
    benchmark::DoNotOptimize(id.terms.size());
  }
}
BENCHMARK(BM_HilbertIdentity)->Args({2, 2})->Args({2, 4})->Args({3, 3});

void BM_ExtensionMul(benchmark::State& state) {
  FieldHandle field = Field::make("q=1024");
  std::uint64_t a = 17, b = 911;
  for (auto _ : state) {
    a = field->mul_index(a, b);
    if (a == 0) a = 17;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ExtensionMul);

void BM_TowerD8(benchmark::State& state) {
  FieldHandle field = Field::make("Q[x]/(x^2+1)");
  PowerSumCertificate squares = PowerSumCertificate::from_witnesses(
      field->from_integer(-1), 2, {field->generator()});
  for (auto _ : state) {
    PowerSumCertificate cert = represent_minus_one(field, 8, squares);
    benchmark::DoNotOptimize(cert.terms().size());
  }
}
BENCHMARK(BM_TowerD8);

}  // namespace

BENCHMARK_MAIN();
