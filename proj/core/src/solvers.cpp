#include "cf/solvers.hpp"

#include <utility>

#include "cf/errors.hpp"
#include "cf/waring.hpp"

namespace cf {
namespace {

void check_form(const DiagonalForm& form) {
  if (!form.field) throw Error(ErrorCode::BadArgument, "form has no field");
  if (form.d < 1) throw Error(ErrorCode::BadArgument, "degree must be positive");
  if (form.coefficients.size() < 2) {
    throw Error(ErrorCode::BadArgument, "a diagonal form needs at least two coefficients");
  }
}

// first u (in index order) with u^d = t; t must be a d-th power
std::uint64_t first_root_index(const FieldHandle& f, std::uint64_t q, std::uint64_t d,
                               std::uint64_t t) {
  for (std::uint64_t u = 1; u < q; ++u) {
    if (f->pow_index(u, d) == t) return u;
  }
  throw Error(ErrorCode::BadArgument, "element is not a d-th power");
}

}  // namespace

Element evaluate_form(const DiagonalForm& form, const std::vector<Element>& v) {
  check_form(form);
  if (v.size() != form.coefficients.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "form has " + std::to_string(form.coefficients.size()) + " coefficients, vector has " +
                    std::to_string(v.size()));
  }
  Element sum = form.field->zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum = sum + form.coefficients[i] * v[i].pow(form.d);
  }
  return sum;
}

DiagonalForm fermat_form(const FieldHandle& field, std::uint64_t d, std::uint32_t n) {
  if (n < 1) throw Error(ErrorCode::BadArgument, "n must be at least 1");
  DiagonalForm form;
  form.field = field;
  form.d = d;
  form.coefficients.assign(n + 1, field->one());
  return form;
}

SolutionVector::SolutionVector(DiagonalForm form, std::vector<Element> coordinates)
    : form_(std::move(form)), coords_(std::move(coordinates)) {
  bool nonzero = false;
  for (const auto& c : coords_) {
    if (!c.is_zero()) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero) throw Error(ErrorCode::InvalidDocument, "solution vector is identically zero");
  Element value = evaluate_form(form_, coords_);
  if (!value.is_zero()) {
    throw Error(ErrorCode::InvalidDocument,
                "vector does not solve the form: evaluates to " + value.str());
  }
}

std::string_view solve_method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::Certificate: return "certificate";
    case SolveMethod::ZeroCoefficient: return "zero_coefficient";
    case SolveMethod::CosetFermat: return "coset_fermat";
    case SolveMethod::BruteForce: return "brute_force";
  }
  return "unknown";
}

SolveOutcome fermat_point(const FieldHandle& field, std::uint64_t d, std::uint32_t n,
                          const Limits& limits) {
  DiagonalForm form = fermat_form(field, d, n);
  PowerSumCertificate cert = represent_minus_one(field, d, limits);
  BigInt r = cert.witness_count();
  if (r <= n) {
    std::vector<Element> coords;
    coords.reserve(n + 1);
    coords.push_back(field->one());
    for (const auto& w : cert.flat_witnesses(n)) coords.push_back(w);
    coords.resize(n + 1, field->zero());
    return SolveOutcome{SolutionVector(std::move(form), std::move(coords)),
                        SolveMethod::Certificate};
  }
  return brute_force_point(form, limits);
}

SolveOutcome diagonal_solve(const DiagonalForm& form, const Limits& limits) {
  check_form(form);
  const FieldHandle& f = form.field;
  std::size_t len = form.coefficients.size();

  for (std::size_t i = 0; i < len; ++i) {
    if (!form.coefficients[i].is_zero()) continue;
    std::vector<Element> coords(len, f->zero());
    coords[i] = f->one();
    return SolveOutcome{SolutionVector(form, std::move(coords)), SolveMethod::ZeroCoefficient};
  }

  SigmaChain chain(f, form.d, limits);
  const ResidueTable& table = chain.table();
  WaringResult minus_one = waring_rank(chain, f->from_integer(-1));
  std::uint32_t r = minus_one.rank;

  std::vector<std::vector<std::size_t>> positions(table.class_count());
  for (std::size_t i = 0; i < len; ++i) {
    positions[table.class_of(form.coefficients[i])].push_back(i);
  }

  for (std::uint32_t cls = 0; cls < table.class_count(); ++cls) {
    if (positions[cls].size() < static_cast<std::size_t>(r) + 1) continue;

    // b solves the Fermat equation in r+1 variables: 1 + sum b_j^d = 0
    std::vector<Element> b;
    b.reserve(r + 1);
    b.push_back(f->one());
    for (const auto& w : minus_one.certificate.flat_witnesses(r)) b.push_back(w);

    std::uint64_t q = table.order();
    Element rep = table.representative(cls);
    std::vector<Element> coords(len, f->zero());
    for (std::uint32_t j = 0; j <= r; ++j) {
      std::size_t pos = positions[cls][j];
      // a_pos = rep * u^d: substituting x_pos -> b_j / u folds the unit away
      Element t = form.coefficients[pos] / rep;
      std::uint64_t u = first_root_index(f, q, form.d, f->index_of(t));
      coords[pos] = b[j] / f->element_at(u);
    }
    return SolveOutcome{SolutionVector(form, std::move(coords)), SolveMethod::CosetFermat};
  }

  return brute_force_point(form, limits);
}

SolveOutcome brute_force_point(const DiagonalForm& form, const Limits& limits) {
  check_form(form);
  const FieldHandle& f = form.field;
  std::uint64_t q = f->order();
  std::size_t len = form.coefficients.size();

  BigInt points = 0;  // (q^len - 1) / (q - 1), summed to avoid the division
  BigInt block = 1;
  for (std::size_t i = 0; i < len; ++i) {
    points += block;
    block *= q;
  }
  if (points > limits.brute_force_cap) {
    throw Error(ErrorCode::BruteForceCapExceeded,
                "projective scan needs " + to_string(points) + " evaluations, cap is " +
                    std::to_string(limits.brute_force_cap));
  }

  std::vector<std::uint64_t> coeff(len);
  for (std::size_t i = 0; i < len; ++i) coeff[i] = f->index_of(form.coefficients[i]);
  std::vector<std::uint64_t> power(q);
  for (std::uint64_t e = 0; e < q; ++e) power[e] = f->pow_index(e, form.d);

  std::vector<std::uint64_t> idx(len, 0);
  for (std::size_t lead = 0; lead < len; ++lead) {
    std::fill(idx.begin(), idx.end(), 0);
    idx[lead] = f->one_index();
    std::uint64_t head = coeff[lead];  // a_lead * 1^d
    std::size_t tail = len - lead - 1;

    for (;;) {
      std::uint64_t sum = head;
      for (std::size_t t = 0; t < tail; ++t) {
        std::size_t p = lead + 1 + t;
        if (idx[p] != 0 && coeff[p] != 0) {
          sum = f->add_index(sum, f->mul_index(coeff[p], power[idx[p]]));
        }
      }
      if (sum == 0) {
        std::vector<Element> coords;
        coords.reserve(len);
        for (std::size_t i = 0; i < len; ++i) coords.push_back(f->element_at(idx[i]));
        return SolveOutcome{SolutionVector(form, std::move(coords)), SolveMethod::BruteForce};
      }
      // rightmost-fastest odometer over the tail
      if (tail == 0) break;
      bool wrapped = true;
      for (std::size_t p = len; p > lead + 1;) {
        --p;
        if (++idx[p] < q) {
          wrapped = false;
          break;
        }
        idx[p] = 0;
      }
      if (wrapped) break;
    }
  }
  return SolveOutcome{std::nullopt, SolveMethod::BruteForce};
}

}  // namespace cf
