#include "cf/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cf/errors.hpp"
#include "cf/multipoly.hpp"

namespace cf {
namespace {

using IVec = std::vector<std::int64_t>;

// nonincreasing vectors of length n with entries in [0, h], first entry >= 1,
// gcd 1: one representative per orbit under permutations and sign changes
void reps_rec(std::size_t pos, std::int64_t bound, IVec& cur, std::vector<IVec>& out) {
  if (pos == cur.size()) {
    std::int64_t g = 0;
    for (auto v : cur) g = std::gcd(g, v);
    if (g == 1) out.push_back(cur);
    return;
  }
  std::int64_t lo = (pos == 0) ? 1 : 0;
  for (std::int64_t v = bound; v >= lo; --v) {
    cur[pos] = v;
    reps_rec(pos + 1, v, cur, out);
  }
}

std::vector<IVec> orbit_reps(std::size_t n, std::int64_t height) {
  std::vector<IVec> out;
  IVec cur(n, 0);
  reps_rec(0, height, cur, out);
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    std::int64_t sa = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t sb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (a[0] != b[0]) return a[0] < b[0];  // nonincreasing, so front = max
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

// all images of rep under coordinate permutations and sign flips, each taken
// modulo a global sign (first nonzero entry positive)
std::vector<IVec> orbit_members(const IVec& rep) {
  std::set<IVec> seen;
  IVec perm(rep);
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] != 0) nonzero.push_back(i);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nonzero.size()); ++mask) {
      IVec v(perm);
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) v[nonzero[b]] = -v[nonzero[b]];
      }
      for (auto x : v) {
        if (x != 0) {
          if (x < 0) {
            for (auto& y : v) y = -y;
          }
          break;
        }
      }
      seen.insert(std::move(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

// partitions of d into at most n parts, padded with zeros to length n
void partitions_rec(unsigned rem, unsigned bound, std::size_t pos, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
  if (pos == cur.size()) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  unsigned top = std::min(rem, bound);
  for (unsigned v = top;; --v) {
    cur[pos] = v;
    partitions_rec(rem - v, v, pos + 1, cur, out);
    if (v == 0) break;
  }
}

std::vector<std::vector<unsigned>> partitions(unsigned d, std::size_t n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(n, 0);
  partitions_rec(d, d, 0, cur, out);
  return out;
}

// unique exact solution of the augmented system, if the coefficient columns
// have full rank and the system is consistent
bool solve_unique(std::vector<std::vector<Rational>> m, std::size_t cols,
                  std::vector<Rational>& w) {
  std::size_t rows = m.size();
  std::vector<std::size_t> pivot_row(cols);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) return false;  // rank-deficient columns: skip this subset
    std::swap(m[p], m[rank]);
    Rational inv = Rational(1) / m[rank][c];
    for (std::size_t j = c; j <= cols; ++j) m[rank][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (m[r][cols] != 0) return false;  // inconsistent
  }
  w.assign(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c) w[c] = m[pivot_row[c]][cols];
  return true;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t total) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < total) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

HilbertIdentity find_hilbert_identity(std::size_t n, unsigned d, const Limits& limits) {
  if (n < 1 || d < 1) throw Error(ErrorCode::BadArgument, "n and d must be positive");
  if (n == 1) {
    HilbertIdentity id{1, d, {HilbertTerm{Rational(1), {Rational(1)}}}};
    return id;
  }

  auto alphas = partitions(d, n);
  std::size_t eqs = alphas.size();

  for (std::int64_t h = 1; h <= limits.hilbert_max_height; ++h) {
    auto reps = orbit_reps(n, h);
    std::vector<std::vector<IVec>> members;
    members.reserve(reps.size());
    for (const auto& r : reps) members.push_back(orbit_members(r));

    // full coefficient matrix: column per orbit, row per monomial class x^{2a}
    std::vector<std::vector<Rational>> full(eqs, std::vector<Rational>(reps.size()));
    std::vector<Rational> target(eqs);
    for (std::size_t e = 0; e < eqs; ++e) {
      const auto& alpha = alphas[e];
      std::vector<unsigned> doubled(alpha);
      for (auto& a : doubled) a *= 2;
      BigInt mono = multinomial(2 * d, doubled);
      target[e] = Rational(multinomial(d, alpha));
      for (std::size_t o = 0; o < reps.size(); ++o) {
        BigInt sum = 0;
        for (const auto& v : members[o]) {
          BigInt prod = 1;
          bool zero = false;
          for (std::size_t i = 0; i < n; ++i) {
            if (doubled[i] == 0) continue;
            if (v[i] == 0) {
              zero = true;
              break;
            }
            prod *= pow(BigInt(v[i]), doubled[i]);
          }
          if (!zero) sum += prod;  // exponents are even, so signs wash out
        }
        full[e][o] = Rational(mono * sum);
      }
    }

    std::size_t max_size = std::min(eqs, reps.size());
    for (std::size_t size = 1; size <= max_size; ++size) {
      std::vector<std::size_t> subset(size);
      for (std::size_t i = 0; i < size; ++i) subset[i] = i;
      do {
        std::vector<std::vector<Rational>> m(eqs, std::vector<Rational>(size + 1));
        for (std::size_t e = 0; e < eqs; ++e) {
          for (std::size_t j = 0; j < size; ++j) m[e][j] = full[e][subset[j]];
          m[e][size] = target[e];
        }
        std::vector<Rational> w;
        if (!solve_unique(std::move(m), size, w)) continue;
        bool positive = true;
        for (const auto& x : w) {
          if (!(x > 0)) {
            positive = false;
            break;
          }
        }
        if (!positive) continue;

        HilbertIdentity id;
        id.n = n;
        id.d = d;
        for (std::size_t j = 0; j < size; ++j) {
          for (const auto& v : members[subset[j]]) {
            HilbertTerm t;
            t.lambda = w[j];
            t.form.reserve(n);
            for (auto x : v) t.form.emplace_back(x);
            id.terms.push_back(std::move(t));
          }
        }
        if (verify_identity(id)) return id;
      } while (next_combination(subset, reps.size()));
    }
  }
  throw Error(ErrorCode::SearchBudgetExceeded,
              "no Hilbert identity found for n=" + std::to_string(n) +
                  ", d=" + std::to_string(d) + " within height " +
                  std::to_string(limits.hilbert_max_height));
}

bool verify_identity(const HilbertIdentity& id) {
  if (id.n < 1 || id.d < 1 || id.terms.empty()) return false;
  std::vector<std::pair<Rational, std::vector<Rational>>> terms;
  terms.reserve(id.terms.size());
  for (const auto& t : id.terms) {
    if (!(t.lambda > 0) || t.form.size() != id.n) return false;
    terms.emplace_back(t.lambda, t.form);
  }
  MultiPoly lhs = sum_of_squares_power(id.n, id.d);
  MultiPoly rhs = expand_power_sum(terms, id.n, 2 * id.d);
  return lhs == rhs;
}

ScaledPowerTerm scale_to_pure_power_term(const Rational& lambda, const Element& base,
                                         unsigned e) {
  const FieldHandle& f = base.field();
  if (f->characteristic() != 0) {
    throw Error(ErrorCode::PositiveCharacteristic,
                "weight absorption is defined over characteristic-0 fields only");
  }
  if (!(lambda > 0)) throw Error(ErrorCode::BadArgument, "lambda must be positive");
  if (e < 1) throw Error(ErrorCode::BadArgument, "exponent must be positive");
  BigInt a = numerator(lambda);
  BigInt b = denominator(lambda);
  ScaledPowerTerm term{base / f->from_bigint(b), a * pow(b, e - 1)};
  // a*b^{e-1} * (base/b)^e = (a/b) * base^e; checked exactly
  Element lhs = f->from_bigint(term.count) * term.value.pow(e);
  Element rhs = f->from_rational(lambda) * base.pow(e);
  if (lhs != rhs) throw Error(ErrorCode::BadArgument, "weight absorption identity failed");
  return term;
}

std::vector<Element> scale_to_pure_powers(const Rational& lambda, const Element& base,
                                          unsigned e, std::uint64_t cap) {
  ScaledPowerTerm term = scale_to_pure_power_term(lambda, base, e);
  if (term.count > cap) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                "absorbing lambda = " + to_string(lambda) + " needs " + to_string(term.count) +
                    " copies, above the cap " + std::to_string(cap));
  }
  std::vector<Element> out;
  std::uint64_t count = static_cast<std::uint64_t>(term.count);
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(term.value);
  return out;
}

}  // namespace cf
