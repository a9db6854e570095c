#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "cf/errors.hpp"
#include "cf/field.hpp"
#include "cf/residue.hpp"

using namespace cf;

TEST_CASE("[PAPER] class count equals gcd(d, q-1) on a small grid") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 31, 32, 64, 81, 121}) {
    FieldHandle f = Field::make("q=" + std::to_string(q));
    for (std::uint64_t d = 1; d <= 12; ++d) {
      CAPTURE(q);
      CAPTURE(d);
      ResidueTable table(f, d);
      CHECK(table.class_count() == class_count_formula(q, d));
    }
  }
}

TEST_CASE("[DERIVED] cosets partition the nonzero elements") {
  for (std::uint64_t q : {7, 9, 16, 25}) {
    FieldHandle f = Field::make("q=" + std::to_string(q));
    for (std::uint64_t d : {2, 3, 4, 5, 6}) {
      ResidueTable table(f, d);
      std::set<std::uint64_t> seen;
      std::uint64_t total = 0;
      for (std::uint32_t cls = 0; cls < table.class_count(); ++cls) {
        const auto& coset = table.coset(cls);
        // equal sizes, ascending order, no overlap
        CHECK(coset.size() == (q - 1) / table.class_count());
        CHECK(std::is_sorted(coset.begin(), coset.end()));
        for (std::uint64_t idx : coset) {
          CHECK(idx != 0);
          CHECK(seen.insert(idx).second);
        }
        total += coset.size();
      }
      CHECK(total == q - 1);
    }
  }
}

TEST_CASE("[DERIVED] class_of matches coset membership and representatives") {
  FieldHandle f = Field::make("q=27");
  ResidueTable table(f, 13);
  CHECK(table.class_count() == 13);
  for (std::uint32_t cls = 0; cls < table.class_count(); ++cls) {
    for (std::uint64_t idx : table.coset(cls)) {
      CHECK(table.class_of_index(idx) == cls);
      CHECK(table.class_of(f->element_at(idx)) == cls);
    }
    CHECK(table.class_of(table.representative(cls)) == cls);
  }
  // class 0 is the d-th powers and is represented by 1
  CHECK(table.representative(0) == f->one());
  for (std::uint64_t a = 1; a < 27; ++a)
    CHECK(table.class_of_index(f->pow_index(a, 13)) == 0);
}

TEST_CASE("[DERIVED] class multiplication is the quotient group law") {
  for (std::uint64_t q : {7, 13, 16}) {
    FieldHandle f = Field::make("q=" + std::to_string(q));
    for (std::uint64_t d : {2, 3, 4, 6}) {
      ResidueTable table(f, d);
      // check against products of arbitrary coset members, not just reps
      for (std::uint32_t x = 0; x < table.class_count(); ++x) {
        for (std::uint32_t y = 0; y < table.class_count(); ++y) {
          std::uint32_t expected = table.class_mul(x, y);
          for (std::uint64_t a : table.coset(x))
            for (std::uint64_t b : table.coset(y))
              CHECK(table.class_of_index(f->mul_index(a, b)) == expected);
        }
      }
      // identity and inverses exist: the classes form a group
      for (std::uint32_t x = 0; x < table.class_count(); ++x) {
        CHECK(table.class_mul(x, 0) == x);
        bool has_inverse = false;
        for (std::uint32_t y = 0; y < table.class_count(); ++y)
          if (table.class_mul(x, y) == 0) has_inverse = true;
        CHECK(has_inverse);
      }
    }
  }
}

TEST_CASE("[TRIVIAL] residue table rejects bad inputs") {
  FieldHandle f = Field::make("p=7");
  ResidueTable table(f, 3);
  CHECK_THROWS_AS((void)table.class_of(f->zero()), Error);
  CHECK_THROWS_AS((void)table.class_of_index(0), Error);
  CHECK_THROWS_AS((void)table.class_of_index(7), Error);
  CHECK_THROWS_AS(ResidueTable(f, 0), Error);
  CHECK_THROWS_AS(ResidueTable(Field::make("Q"), 2), Error);

  Limits tight;
  tight.enumeration_cap = 5;
  CHECK_THROWS_AS(ResidueTable(f, 3, tight), Error);
}

TEST_CASE("[PAPER] d and d mod (q-1) give the same classes") {
  FieldHandle f = Field::make("p=13");
  ResidueTable a(f, 5);
  ResidueTable b(f, 17);  // 17 = 5 mod 12
  REQUIRE(a.class_count() == b.class_count());
  for (std::uint32_t cls = 0; cls < a.class_count(); ++cls)
    CHECK(a.coset(cls) == b.coset(cls));
}
