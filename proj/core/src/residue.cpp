#include "cf/residue.hpp"

#include <algorithm>

namespace cf {

ResidueTable::ResidueTable(FieldHandle field, std::uint64_t d, const Limits& limits)
    : field_(std::move(field)), d_(d) {
  if (d_ < 1) throw Error(ErrorCode::BadArgument, "d must be positive");
  q_ = field_->order();  // InfiniteField for char-0 fields
  if (q_ > limits.enumeration_cap) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                "field order " + std::to_string(q_) + " exceeds the enumeration cap " +
                    std::to_string(limits.enumeration_cap));
  }

  constexpr std::uint32_t kUnassigned = UINT32_MAX;
  class_of_index_.assign(q_, kUnassigned);

  // class 0: the set of nonzero d-th powers
  std::vector<std::uint64_t> powers;
  for (std::uint64_t a = 1; a < q_; ++a) {
    std::uint64_t pw = field_->pow_index(a, d_);
    if (class_of_index_[pw] == kUnassigned) {
      class_of_index_[pw] = 0;
      powers.push_back(pw);
    }
  }
  std::sort(powers.begin(), powers.end());
  cosets_.push_back(std::move(powers));
  rep_index_.push_back(field_->index_of(field_->one()));

  // remaining classes in first-seen enumeration order
  for (std::uint64_t a = 1; a < q_; ++a) {
    if (class_of_index_[a] != kUnassigned) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(cosets_.size());
    std::vector<std::uint64_t> members;
    for (std::uint64_t pw : cosets_[0]) {
      std::uint64_t m = field_->mul_index(a, pw);
      class_of_index_[m] = cls;
      members.push_back(m);
    }
    std::sort(members.begin(), members.end());
    cosets_.push_back(std::move(members));
    rep_index_.push_back(a);
  }

  // quotient-group multiplication table via representatives
  std::uint32_t n = class_count();
  mul_.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      mul_[x][y] = class_of_index_[field_->mul_index(rep_index_[x], rep_index_[y])];
    }
  }
}

std::uint32_t ResidueTable::class_of_index(std::uint64_t idx) const {
  if (idx == 0) throw Error(ErrorCode::ZeroElement, "0 has no residue class");
  if (idx >= q_) throw Error(ErrorCode::BadArgument, "element index out of range");
  return class_of_index_[idx];
}

std::uint32_t ResidueTable::class_of(const Element& a) const {
  return class_of_index(field_->index_of(a));
}

Element ResidueTable::representative(std::uint32_t cls) const {
  return field_->element_at(rep_index_.at(cls));
}

std::uint32_t ResidueTable::class_mul(std::uint32_t x, std::uint32_t y) const {
  if (x >= class_count() || y >= class_count()) {
    throw Error(ErrorCode::BadArgument, "class index out of range");
  }
  return mul_[x][y];
}

}  // namespace cf
