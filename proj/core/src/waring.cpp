#include "cf/waring.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "cf/hilbert.hpp"

namespace cf {

SigmaChain::SigmaChain(FieldHandle field, std::uint64_t d, const Limits& limits)
    : table_(std::move(field), d, limits) {
  const FieldHandle& f = table_.field();
  std::uint32_t n = table_.class_count();

  // class sumset: adding one more d-th power sends class c to the classes of
  // rep_c + (K^x)^d; scaling by a d-th power moves rep_c across its coset
  // without changing either side, so the representative computation covers
  // the whole class
  std::vector<std::vector<std::uint32_t>> step(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    std::vector<bool> hit(n, false);
    for (std::uint64_t s : table_.coset(0)) {
      std::uint64_t sum = f->add_index(table_.representative_index(c), s);
      if (sum != 0) hit[table_.class_of_index(sum)] = true;
    }
    for (std::uint32_t t = 0; t < n; ++t) {
      if (hit[t]) step[c].push_back(t);
    }
  }

  first_level_.assign(n, 0);
  std::vector<bool> cur(n, false);
  cur[0] = true;
  first_level_[0] = 1;
  levels_.push_back(SigmaLevel{{0}, true});

  for (;;) {
    std::uint32_t r = static_cast<std::uint32_t>(levels_.size());
    std::vector<bool> next(cur);
    for (std::uint32_t c = 0; c < n; ++c) {
      if (!cur[c]) continue;
      for (std::uint32_t t : step[c]) next[t] = true;
    }
    // 0 is in every level, and 0 + u^d lands in class 0, already present
    SigmaLevel lvl;
    lvl.contains_zero = true;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (!next[c]) continue;
      lvl.classes.push_back(c);
      if (first_level_[c] == 0) first_level_[c] = r + 1;
    }
    bool stable = (next == cur);
    levels_.push_back(std::move(lvl));
    if (stable) {
      stabilization_index_ = r;
      break;
    }
    cur = std::move(next);
  }
}

const SigmaLevel& SigmaChain::level(std::uint32_t r) const {
  if (r < 1 || r > levels_.size()) {
    throw Error(ErrorCode::BadArgument, "level index out of range");
  }
  return levels_[r - 1];
}

bool SigmaChain::level_contains(std::uint32_t r, const Element& a) const {
  if (a.is_zero()) return level(r).contains_zero;
  std::uint32_t cls = table_.class_of(a);
  const auto& classes = level(r).classes;
  return std::binary_search(classes.begin(), classes.end(), cls);
}

std::uint32_t SigmaChain::first_level_of_class(std::uint32_t cls) const {
  if (cls >= table_.class_count()) {
    throw Error(ErrorCode::BadArgument, "class index out of range");
  }
  return first_level_[cls];
}

bool SigmaChain::stabilized_full() const {
  return levels_.back().classes.size() == table_.class_count();
}

PowerSumCertificate::PowerSumCertificate(Element target, std::uint64_t d,
                                         std::vector<PowerTerm> terms)
    : target_(std::move(target)), d_(d) {
  for (auto& t : terms) {
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const PowerTerm& u) { return u.value == t.value; });
    if (it == terms_.end()) {
      terms_.push_back(std::move(t));
    } else {
      it->count += t.count;
    }
  }
  verify();
}

PowerSumCertificate PowerSumCertificate::from_witnesses(Element target, std::uint64_t d,
                                                        const std::vector<Element>& witnesses) {
  std::vector<PowerTerm> terms;
  terms.reserve(witnesses.size());
  for (const auto& w : witnesses) terms.push_back(PowerTerm{w, 1});
  return PowerSumCertificate(std::move(target), d, std::move(terms));
}

BigInt PowerSumCertificate::witness_count() const {
  BigInt total = 0;
  for (const auto& t : terms_) total += t.count;
  return total;
}

bool PowerSumCertificate::all_counts_one() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PowerTerm& t) { return t.count == 1; });
}

std::vector<Element> PowerSumCertificate::flat_witnesses(std::uint64_t cap) const {
  BigInt total = witness_count();
  if (total > cap) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                "certificate has " + to_string(total) + " witnesses, above the cap " +
                    std::to_string(cap));
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(total));
  for (const auto& t : terms_) {
    std::uint64_t c = static_cast<std::uint64_t>(t.count);
    for (std::uint64_t i = 0; i < c; ++i) out.push_back(t.value);
  }
  return out;
}

void PowerSumCertificate::verify() const {
  if (d_ < 1) throw Error(ErrorCode::InvalidDocument, "certificate exponent must be positive");
  if (terms_.empty()) throw Error(ErrorCode::InvalidDocument, "certificate has no witnesses");
  const FieldHandle& f = target_.field();
  Element sum = f->zero();
  for (const auto& t : terms_) {
    if (t.count < 1) {
      throw Error(ErrorCode::InvalidDocument, "witness multiplicity must be positive");
    }
    if (t.value.is_zero()) {
      throw Error(ErrorCode::InvalidDocument, "witnesses must be nonzero");
    }
    sum = sum + f->from_bigint(t.count) * t.value.pow(d_);
  }
  if (sum != target_) {
    throw Error(ErrorCode::InvalidDocument,
                "certificate does not verify: powers sum to " + sum.str() + ", target is " +
                    target_.str());
  }
}

WaringResult waring_rank(const SigmaChain& chain, const Element& c) {
  const ResidueTable& table = chain.table();
  const FieldHandle& f = table.field();
  if (c.is_zero()) throw Error(ErrorCode::ZeroElement, "rank of 0 is not defined");

  std::uint32_t cls = table.class_of(c);
  std::uint32_t r = chain.first_level_of_class(cls);
  if (r == 0) {
    throw Error(ErrorCode::NotRepresentable,
                c.str() + " is not a sum of " + std::to_string(table.d()) + "th powers");
  }

  std::uint64_t q = table.order();
  std::vector<std::uint64_t> power(q);
  for (std::uint64_t u = 1; u < q; ++u) power[u] = f->pow_index(u, table.d());

  std::vector<Element> witnesses;
  witnesses.reserve(r);
  std::uint64_t tgt = f->index_of(c);
  for (std::uint32_t k = r; k >= 1; --k) {
    bool found = false;
    for (std::uint64_t u = 1; u < q && !found; ++u) {
      if (k == 1) {
        if (power[u] == tgt) {
          witnesses.push_back(f->element_at(u));
          found = true;
        }
        continue;
      }
      std::uint64_t rem = f->sub_index(tgt, power[u]);
      if (rem == 0) continue;  // a zero remainder would contradict minimality
      std::uint32_t rc = table.class_of_index(rem);
      std::uint32_t rr = chain.first_level_of_class(rc);
      if (rr != 0 && rr <= k - 1) {
        witnesses.push_back(f->element_at(u));
        tgt = rem;
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::NotRepresentable,
                  "witness descent failed; chain data is inconsistent");
    }
  }
  return WaringResult{r, PowerSumCertificate::from_witnesses(c, table.d(), witnesses)};
}

WaringResult waring_rank(const FieldHandle& field, std::uint64_t d, const Element& c,
                         const Limits& limits) {
  SigmaChain chain(field, d, limits);
  return waring_rank(chain, c);
}

PowerSumCertificate represent_minus_one(const FieldHandle& field, std::uint64_t d,
                                        const Limits& limits) {
  if (!field->is_finite()) {
    throw Error(ErrorCode::BadArgument,
                "characteristic-0 fields need an explicit sum-of-squares certificate for -1");
  }
  return waring_rank(field, d, field->from_integer(-1), limits).certificate;
}

PowerSumCertificate represent_minus_one(const FieldHandle& field, std::uint64_t d,
                                        const PowerSumCertificate& minus_one_squares,
                                        const Limits& limits) {
  if (field->is_finite()) return represent_minus_one(field, d, limits);
  return minus_one_power_tower(field, d, minus_one_squares, limits);
}

namespace {

void check_minus_one_squares(const FieldHandle& field, const PowerSumCertificate& cert) {
  if (!(cert.field()->spec() == field->spec())) {
    throw Error(ErrorCode::BadArgument, "certificate belongs to a different field");
  }
  if (cert.d() != 2 || cert.target() != field->from_integer(-1)) {
    throw Error(ErrorCode::BadArgument,
                "expected a certificate of -1 as a sum of squares (d = 2)");
  }
  cert.verify();
}

class TermAccumulator {
 public:
  void add(const Element& value, const BigInt& count) {
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const PowerTerm& t) { return t.value == value; });
    if (it == terms_.end()) {
      terms_.push_back(PowerTerm{value, count});
    } else {
      it->count += count;
    }
  }
  std::vector<PowerTerm> take() { return std::move(terms_); }

 private:
  std::vector<PowerTerm> terms_;
};

}  // namespace

PowerSumCertificate sum_of_squares_rep(const Element& c,
                                       const PowerSumCertificate& minus_one_squares) {
  const FieldHandle& f = c.field();
  if (f->characteristic() == 2) {
    throw Error(ErrorCode::CharacteristicTwo, "the identity divides by 2");
  }
  check_minus_one_squares(f, minus_one_squares);

  Element half = f->from_integer(2).inverse();
  Element head = (c + f->one()) * half;   // (c+1)/2
  Element scale = (c - f->one()) * half;  // (c-1)/2

  std::vector<PowerTerm> terms;
  if (!head.is_zero()) terms.push_back(PowerTerm{head, 1});
  for (const auto& t : minus_one_squares.terms()) {
    Element w = t.value * scale;
    if (!w.is_zero()) terms.push_back(PowerTerm{w, t.count});
  }
  return PowerSumCertificate(c, 2, std::move(terms));
}

PowerSumCertificate minus_one_power_tower(const FieldHandle& field, std::uint64_t d,
                                          const PowerSumCertificate& minus_one_squares,
                                          const Limits& limits) {
  if (field->characteristic() != 0) {
    throw Error(ErrorCode::PositiveCharacteristic,
                "the induction tower applies to characteristic-0 fields; "
                "finite fields go through the rank search");
  }
  if (d < 1) throw Error(ErrorCode::BadArgument, "d must be positive");
  check_minus_one_squares(field, minus_one_squares);

  // every doubling step rewrites a witness as 1 + (total squares) values;
  // the identity search cannot cope with wide certificates
  constexpr std::uint64_t kSquareWidthCap = 64;
  if (minus_one_squares.witness_count() > kSquareWidthCap) {
    throw Error(ErrorCode::HilbertIdentityUnavailable,
                "sum-of-squares certificate is too wide for the identity search");
  }

  std::uint64_t u = d;
  unsigned m = 0;
  while (u % 2 == 0) {
    u /= 2;
    ++m;
  }

  Element minus_one = field->from_integer(-1);
  std::uint64_t exp;
  PowerSumCertificate cert = [&]() {
    if (m == 0) {
      exp = u;  // (-1)^u = -1 for odd u
      return PowerSumCertificate(minus_one, u, {PowerTerm{minus_one, 1}});
    }
    if (u == 1) {
      exp = 2;  // start the doubling from the given squares
      return minus_one_squares;
    }
    exp = u;
    return PowerSumCertificate(minus_one, u, {PowerTerm{minus_one, 1}});
  }();

  std::map<std::pair<std::size_t, unsigned>, HilbertIdentity> identity_cache;
  auto identity_for = [&](std::size_t n, unsigned e) -> const HilbertIdentity& {
    auto key = std::make_pair(n, e);
    auto it = identity_cache.find(key);
    if (it != identity_cache.end()) return it->second;
    try {
      return identity_cache.emplace(key, find_hilbert_identity(n, e, limits)).first->second;
    } catch (const Error& err) {
      if (err.code() == ErrorCode::SearchBudgetExceeded) {
        throw Error(ErrorCode::HilbertIdentityUnavailable,
                    "no Hilbert identity for n=" + std::to_string(n) +
                        ", d=" + std::to_string(e) + " within the search budget");
      }
      throw;
    }
  };

  while (exp < d) {
    unsigned e = static_cast<unsigned>(exp);
    TermAccumulator acc;
    for (const auto& term : cert.terms()) {
      PowerSumCertificate sos = sum_of_squares_rep(term.value, minus_one_squares);
      std::vector<Element> squares = sos.flat_witnesses(kSquareWidthCap + 1);
      const HilbertIdentity& id = identity_for(squares.size(), e);
      for (const auto& ht : id.terms) {
        Element val = field->zero();
        for (std::size_t j = 0; j < squares.size(); ++j) {
          val = val + field->from_rational(ht.form[j]) * squares[j];
        }
        if (val.is_zero()) continue;
        ScaledPowerTerm spt = scale_to_pure_power_term(ht.lambda, val, 2 * e);
        acc.add(spt.value, spt.count * term.count);
      }
    }
    exp *= 2;
    cert = PowerSumCertificate(minus_one, exp, acc.take());
  }
  return cert;
}

}  // namespace cf
