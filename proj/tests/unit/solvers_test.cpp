#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cf/errors.hpp"
#include "cf/field.hpp"
#include "cf/residue.hpp"
#include "cf/solvers.hpp"

using namespace cf;

namespace {

// All coefficient vectors of the given length up to scaling: first nonzero
// entry normalized to 1, remaining entries free. Enumerated by element index.
std::vector<std::vector<Element>> projective_vectors(const FieldHandle& f, std::size_t len) {
  std::uint64_t q = f->order();
  std::vector<std::vector<Element>> out;
  for (std::size_t lead = 0; lead < len; ++lead) {
    std::size_t tail = len - lead - 1;
    std::vector<std::uint64_t> idx(tail, 0);
    while (true) {
      std::vector<Element> v;
      for (std::size_t i = 0; i < lead; ++i) v.push_back(f->zero());
      v.push_back(f->one());
      for (std::uint64_t i : idx) v.push_back(f->element_at(i));
      out.push_back(std::move(v));
      bool wrapped = true;
      for (std::size_t p = tail; p > 0;) {
        --p;
        if (++idx[p] < q) {
          wrapped = false;
          break;
        }
        idx[p] = 0;
      }
      if (tail == 0 || wrapped) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("[TRIVIAL] form evaluation and construction guards") {
  FieldHandle f = Field::make("p=5");
  DiagonalForm form{f, 2, {f->one(), f->from_integer(2)}};
  CHECK(evaluate_form(form, {f->from_integer(1), f->from_integer(2)}) == f->from_integer(4));
  CHECK_THROWS_AS((void)evaluate_form(form, {f->one()}), Error);

  DiagonalForm fermat = fermat_form(f, 3, 2);
  CHECK(fermat.coefficients.size() == 3);
  for (const Element& c : fermat.coefficients) CHECK(c == f->one());
  CHECK_THROWS_AS((void)fermat_form(f, 3, 0), Error);
  CHECK_THROWS_AS((void)evaluate_form(DiagonalForm{f, 0, {f->one(), f->one()}},
                                      {f->one(), f->one()}),
                  Error);
}

TEST_CASE("[TRIVIAL] solution vectors reject the zero vector and nonzeros of the form") {
  FieldHandle f = Field::make("p=5");
  DiagonalForm form{f, 2, {f->one(), f->one()}};
  CHECK_THROWS_AS(SolutionVector(form, {f->zero(), f->zero()}), Error);
  CHECK_THROWS_AS(SolutionVector(form, {f->one(), f->one()}), Error);  // 1+1 = 2 != 0
  SolutionVector ok(form, {f->from_integer(1), f->from_integer(2)});   // 1 + 4 = 0
  CHECK(ok.coordinates().size() == 2);
}

TEST_CASE("[DERIVED] hand-checked fermat points") {
  {
    FieldHandle f = Field::make("p=5");
    SolveOutcome out = fermat_point(f, 2, 1);
    REQUIRE(out.solution.has_value());
    CHECK(out.method == SolveMethod::Certificate);
    CHECK(out.solution->coordinates()[0] == f->one());
    CHECK(out.solution->coordinates()[1] == f->from_integer(2));
  }
  {
    FieldHandle f = Field::make("p=7");
    SolveOutcome out = fermat_point(f, 2, 2);
    REQUIRE(out.solution.has_value());
    const auto& v = out.solution->coordinates();
    CHECK(v[0] == f->one());
    CHECK(v[1] == f->from_integer(2));
    CHECK(v[2] == f->from_integer(3));
  }
}

TEST_CASE("[PAPER] negative control: x^2 + y^2 over F_3 has no nontrivial zero") {
  FieldHandle f = Field::make("p=3");
  SolveOutcome fermat = fermat_point(f, 2, 1);
  CHECK(!fermat.solution.has_value());
  CHECK(fermat.method == SolveMethod::BruteForce);  // exhaustion, not a shortcut

  DiagonalForm form{f, 2, {f->one(), f->one()}};
  SolveOutcome diag = diagonal_solve(form, {});
  CHECK(!diag.solution.has_value());
  CHECK(diag.method == SolveMethod::BruteForce);
}

TEST_CASE("[DERIVED] zero coefficients give an immediate basis vector") {
  FieldHandle f = Field::make("p=7");
  DiagonalForm form{f, 3, {f->one(), f->zero(), f->from_integer(4)}};
  SolveOutcome out = diagonal_solve(form, {});
  REQUIRE(out.solution.has_value());
  CHECK(out.method == SolveMethod::ZeroCoefficient);
  const auto& v = out.solution->coordinates();
  CHECK(v[0] == f->zero());
  CHECK(v[1] == f->one());
  CHECK(v[2] == f->zero());
}

TEST_CASE("[DERIVED] pigeonhole solve on a hand-traced form") {
  FieldHandle f = Field::make("p=5");
  DiagonalForm form{f, 2, {f->from_integer(1), f->from_integer(2), f->from_integer(3),
                           f->from_integer(1), f->from_integer(2)}};
  SolveOutcome out = diagonal_solve(form, {});
  REQUIRE(out.solution.has_value());
  CHECK(out.method == SolveMethod::CosetFermat);
  const auto& v = out.solution->coordinates();
  CHECK(v[0] == f->from_integer(1));
  CHECK(v[1] == f->zero());
  CHECK(v[2] == f->zero());
  CHECK(v[3] == f->from_integer(2));
  CHECK(v[4] == f->zero());
}

TEST_CASE("[DERIVED] solver agrees with the brute-force oracle on all small forms") {
  // every projective coefficient vector of length 2 and 3
  for (std::uint64_t q : {3, 4, 5, 7}) {
    FieldHandle f = Field::make("q=" + std::to_string(q));
    for (std::uint64_t d = 1; d <= 3; ++d) {
      for (std::size_t len : {2, 3}) {
        for (const auto& coeffs : projective_vectors(f, len)) {
          DiagonalForm form{f, d, coeffs};
          SolveOutcome oracle = brute_force_point(form, {});
          SolveOutcome solved = diagonal_solve(form, {});
          CAPTURE(q);
          CAPTURE(d);
          CHECK(solved.solution.has_value() == oracle.solution.has_value());
          // any returned solution already re-verified by SolutionVector
        }
      }
    }
  }
}

TEST_CASE("[DERIVED] brute force scans leads in order and finds the least point") {
  FieldHandle f = Field::make("p=7");
  // x^2 + y^2 = 0 has no solution over F_7; x^2 + 3y^2 does: 3 = 2^2 * ... check
  DiagonalForm none{f, 2, {f->one(), f->one()}};
  CHECK(!brute_force_point(none, {}).solution.has_value());

  DiagonalForm some{f, 2, {f->one(), f->from_integer(3)}};
  SolveOutcome out = brute_force_point(some, {});
  REQUIRE(out.solution.has_value());
  CHECK(out.method == SolveMethod::BruteForce);
  // 1 + 3*y^2 = 0 needs y^2 = 2, so y in {3, 4}; the scan finds y = 3 first
  CHECK(out.solution->coordinates()[0] == f->one());
  CHECK(out.solution->coordinates()[1] == f->from_integer(3));
}

TEST_CASE("[TRIVIAL] brute force respects its cap") {
  FieldHandle f = Field::make("p=31");
  Limits tight;
  tight.brute_force_cap = 10;
  try {
    (void)brute_force_point(fermat_form(f, 2, 3), tight);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BruteForceCapExceeded);
  }
}

TEST_CASE("[PAPER] fermat points exist at n = class count across a small grid") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    FieldHandle f = Field::make("q=" + std::to_string(q));
    for (std::uint64_t d = 1; d <= 6; ++d) {
      auto n = static_cast<std::uint32_t>(class_count_formula(q, d));
      SolveOutcome out = fermat_point(f, d, n);
      CAPTURE(q);
      CAPTURE(d);
      REQUIRE(out.solution.has_value());
      CHECK(out.method == SolveMethod::Certificate);
    }
  }
}
