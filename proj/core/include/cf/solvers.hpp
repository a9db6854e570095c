#pragma once

// Constructive point-finders for Fermat hypersurfaces and diagonal forms
// over finite fields, plus the exhaustive projective-scan oracle they are
// cross-checked against.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cf/config.hpp"
#include "cf/field.hpp"

namespace cf {

struct DiagonalForm {
  FieldHandle field;
  std::uint64_t d = 1;
  std::vector<Element> coefficients;  // length >= 2; zero entries are legal
};

// sum_i a_i v_i^d, exactly; LengthMismatch when v is the wrong length
Element evaluate_form(const DiagonalForm& form, const std::vector<Element>& v);

// a_0 x_0^d + ... + a_n x_n^d with every a_i = 1
DiagonalForm fermat_form(const FieldHandle& field, std::uint64_t d, std::uint32_t n);

class SolutionVector {
 public:
  // checks that some coordinate is nonzero and that the form vanishes;
  // InvalidDocument otherwise
  SolutionVector(DiagonalForm form, std::vector<Element> coordinates);

  const DiagonalForm& form() const { return form_; }
  const std::vector<Element>& coordinates() const { return coords_; }

 private:
  DiagonalForm form_;
  std::vector<Element> coords_;
};

enum class SolveMethod {
  Certificate,      // a power-sum certificate for -1 filled the coordinates
  ZeroCoefficient,  // basis vector at a vanishing coefficient
  CosetFermat,      // pigeonhole class + Fermat assembly
  BruteForce,       // projective scan (also the exhausted no-solution path)
};

std::string_view solve_method_name(SolveMethod m);

struct SolveOutcome {
  // empty means no nontrivial zero exists, proved by exhaustive scan
  std::optional<SolutionVector> solution;
  SolveMethod method = SolveMethod::BruteForce;
};

// x_0^d + ... + x_n^d = 0: builds (1, b_1, ..., b_r, 0, ...) from a rank
// certificate for -1 when r <= n, otherwise falls back to the oracle.
SolveOutcome fermat_point(const FieldHandle& field, std::uint64_t d, std::uint32_t n,
                          const Limits& limits = {});

// Zero-coefficient shortcut, then the residue-class pigeonhole with Fermat
// assembly, then the oracle. A missing solution is only ever reported after
// exhaustion.
SolveOutcome diagonal_solve(const DiagonalForm& form, const Limits& limits = {});

// Deterministic projective scan: leading nonzero coordinate normalized to 1,
// lead position ascending, trailing coordinates in index order (rightmost
// fastest). BruteForceCapExceeded when the point count exceeds the cap.
SolveOutcome brute_force_point(const DiagonalForm& form, const Limits& limits = {});

}  // namespace cf
