#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cf/bounds.hpp"
#include "cf/errors.hpp"
#include "cf/rational.hpp"

using namespace cf;

namespace {

// Stabilizer order by direct closure over the full group: count group
// elements fixing the base. Independent of the Schreier construction.
BigInt stabilizer_order_by_closure(const PermGroupSpec& group, std::uint32_t base) {
  std::set<Permutation> all;
  std::vector<Permutation> frontier{Permutation::identity(group.degree)};
  all.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      for (const Permutation& g : group.generators) {
        Permutation q = g.compose(p);
        if (all.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  BigInt count = 0;
  for (const Permutation& p : all)
    if (p(base) == base) ++count;
  return count;
}

PermGroupSpec symmetric_group(std::uint32_t m) {
  std::string cycle = "(";
  for (std::uint32_t i = 0; i < m; ++i) cycle += (i ? " " : "") + std::to_string(i);
  cycle += ")";
  return parse_group("(0 1)," + cycle, m);
}

}  // namespace

TEST_CASE("[TRIVIAL] permutation parsing, composition, and inversion") {
  Permutation id = Permutation::identity(4);
  CHECK(id.is_identity());
  CHECK(id.cycle_str() == "()");

  Permutation p = Permutation::parse_cycles("(0 1)(2 3)", 4);
  CHECK(p(0) == 1);
  CHECK(p(1) == 0);
  CHECK(p(2) == 3);
  CHECK(p.compose(p).is_identity());
  CHECK(p.inverse() == p);

  Permutation c = Permutation::parse_cycles("(0 1 2)", 3);
  CHECK(c(0) == 1);
  CHECK(c(2) == 0);
  CHECK(c.inverse()(1) == 0);
  CHECK(Permutation::parse_cycles(c.cycle_str(), 3) == c);

  // left-to-right application: (0 1) then (1 2) sends 0 to 2
  Permutation lr = Permutation::parse_cycles("(0 1)(1 2)", 3);
  CHECK(lr(0) == 2);

  CHECK_THROWS_AS((void)Permutation::parse_cycles("(0 9)", 3), Error);
  CHECK_THROWS_AS((void)Permutation::parse_cycles("(0 0)", 3), Error);
  CHECK_THROWS_AS((void)Permutation::parse_cycles("(0 1", 3), Error);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("[DERIVED] Schreier generators for S_3 stabilizing 0") {
  PermGroupSpec s3 = parse_group("(0 1),(0 1 2)", 3);
  SchreierResult res = schreier_generators(s3, 0);
  CHECK(res.orbit == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(res.index == 3);
  CHECK(to_string(res.generator_count_bound) == "4");
  REQUIRE(res.subgroup_generators.size() == 1);
  CHECK(res.subgroup_generators[0] == Permutation::parse_cycles("(1 2)", 3));
  CHECK(group_order(res.subgroup_generators) == 2);
}

TEST_CASE("[PAPER] subgroup generator count stays within 1 + index(g-1)") {
  // symmetric, dihedral, and cyclic groups through degree 7
  std::vector<std::pair<std::string, std::uint32_t>> corpus;
  for (std::uint32_t m = 3; m <= 7; ++m) {
    std::string cycle = "(";
    for (std::uint32_t i = 0; i < m; ++i) cycle += (i ? " " : "") + std::to_string(i);
    cycle += ")";
    corpus.emplace_back("(0 1)," + cycle, m);  // S_m
    corpus.emplace_back(cycle, m);             // C_m
    // dihedral: rotation plus the reflection i -> m-1-i
    std::string reflection;
    for (std::uint32_t i = 0; i < m / 2; ++i)
      reflection += "(" + std::to_string(i) + " " + std::to_string(m - 1 - i) + ")";
    if (reflection.empty()) reflection = "()";
    corpus.emplace_back(cycle + "," + reflection, m);
  }
  for (const auto& [text, degree] : corpus) {
    CAPTURE(text);
    PermGroupSpec group = parse_group(text, degree);
    for (std::uint32_t base = 0; base < degree; ++base) {
      SchreierResult res = schreier_generators(group, base);
      CHECK(BigInt(res.subgroup_generators.size()) <= res.generator_count_bound);
      CHECK(res.generator_count_bound ==
            generator_bound(group.generators.size(), BigInt(res.index)));
      // every Schreier generator fixes the base
      for (const Permutation& p : res.subgroup_generators) CHECK(p(base) == base);
      // the generated subgroup is exactly the stabilizer
      BigInt full = group_order(group.generators);
      BigInt stab = res.subgroup_generators.empty()
                        ? BigInt(1)
                        : group_order(res.subgroup_generators);
      CHECK(stab == stabilizer_order_by_closure(group, base));
      CHECK(stab * BigInt(res.index) == full);
    }
  }
}

TEST_CASE("[DERIVED] random subgroups of S_7 respect the bound") {
  PermGroupSpec s7 = symmetric_group(7);
  std::vector<Permutation> elements;
  {
    std::set<Permutation> all;
    std::vector<Permutation> frontier{Permutation::identity(7)};
    all.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const Permutation& p : frontier)
        for (const Permutation& g : s7.generators) {
          Permutation q = g.compose(p);
          if (all.insert(q).second) next.push_back(q);
        }
      frontier = std::move(next);
    }
    elements.assign(all.begin(), all.end());
  }
  REQUIRE(elements.size() == 5040);

  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::uniform_int_distribution<int> gen_count(2, 3);
  for (int trial = 0; trial < 25; ++trial) {
    PermGroupSpec group;
    group.degree = 7;
    int g = gen_count(rng);
    for (int i = 0; i < g; ++i) group.generators.push_back(elements[pick(rng)]);
    SchreierResult res = schreier_generators(group, 0);
    CAPTURE(trial);
    CHECK(BigInt(res.subgroup_generators.size()) <= res.generator_count_bound);
    BigInt stab = res.subgroup_generators.empty() ? BigInt(1)
                                                  : group_order(res.subgroup_generators);
    CHECK(stab == stabilizer_order_by_closure(group, 0));
  }
}

TEST_CASE("[TRIVIAL] schreier argument validation") {
  PermGroupSpec s3 = parse_group("(0 1),(0 1 2)", 3);
  CHECK_THROWS_AS((void)schreier_generators(s3, 5), Error);
  PermGroupSpec empty;
  empty.degree = 3;
  CHECK_THROWS_AS((void)schreier_generators(empty, 0), Error);
  CHECK_THROWS_AS((void)parse_group("", 3), Error);
  CHECK_THROWS_AS((void)parse_group("(0 1),(0 4)", 3), Error);
}

TEST_CASE("[PAPER] closed-form bounds") {
  CHECK(to_string(kummer_bound(2, 1)) == "8");
  CHECK(to_string(kummer_bound(3, 1)) == "81");
  CHECK(to_string(kummer_bound(3, 2)) == "2187");
  CHECK(to_string(kummer_bound(12, 1)) == "106993205379072");

  CHECK(generator_bound(1, BigInt(100)) == 1);
  CHECK(generator_bound(3, BigInt(5)) == 11);
  CHECK_THROWS_AS((void)generator_bound(0, BigInt(5)), Error);
  CHECK_THROWS_AS((void)generator_bound(2, BigInt(0)), Error);

  auto [n, n2] = diagonal_variable_bound(3, 1);
  CHECK(n == 81);
  CHECK(n2 == 6561);
}

TEST_CASE("[TRIVIAL] group order closure respects its cap") {
  PermGroupSpec s7 = symmetric_group(7);
  try {
    (void)group_order(s7.generators, 100);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EnumerationCapExceeded);
  }
}
