#pragma once

// Exact arithmetic over four kinds of fields: prime fields F_p, extension
// fields F_{p^k} presented as F_p[x]/(m), the rationals Q, and number fields
// Q[x]/(f). Field handles are immutable after construction; elements carry a
// handle to their field, and all operations are pure.

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cf/config.hpp"
#include "cf/errors.hpp"
#include "cf/rational.hpp"

namespace cf {

enum class FieldKind { Prime, Extension, Rationals, NumberField };

class Field;
using FieldHandle = std::shared_ptr<const Field>;

// Textual grammar: "p=7" | "q=9" | "q=9:x^2+1" | "Q" | "Q[x]/(x^2+1)".
// Polynomials are little-endian coefficient vectors (index = exponent) and
// must be monic where a modulus is expected.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;                   // Prime, Extension
  int degree = 1;                       // Extension: k; NumberField: deg f
  std::vector<std::int64_t> modulus;    // Extension; empty = choose default
  std::vector<Rational> min_poly;       // NumberField

  static FieldSpec prime(std::int64_t p);
  static FieldSpec extension(std::int64_t p, int k);
  static FieldSpec extension(std::int64_t p, int k, std::vector<std::int64_t> modulus);
  static FieldSpec rationals();
  static FieldSpec number_field(std::vector<Rational> monic_poly);
  static FieldSpec parse(std::string_view text);

  std::string str() const;
  bool operator==(const FieldSpec& other) const = default;
};

class Element {
 public:
  const FieldHandle& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::string str() const;

  Element operator-() const;
  Element inverse() const;
  Element pow(std::uint64_t e) const;  // 0^0 = 1

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

  // Total order within one field; used for deterministic containers and
  // output, not for any algebraic meaning.
  static bool less(const Element& a, const Element& b);

 private:
  friend class Field;
  using Rep = std::variant<std::int64_t,              // Prime
                           std::vector<std::int64_t>, // Extension
                           Rational,                  // Rationals
                           std::vector<Rational>>;    // NumberField
  Element(FieldHandle f, Rep rep) : field_(std::move(f)), rep_(std::move(rep)) {}

  FieldHandle field_;
  Rep rep_;
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  // Validates the spec: primality of p, modulus monic + irreducible,
  // number-field polynomial monic + squarefree. extension(p, 1) yields the
  // prime-field presentation. Primes are limited to p < 2^31 so residue
  // products fit in 64 bits; extension orders are limited to < 2^63.
  static FieldHandle make(const FieldSpec& spec);
  static FieldHandle make(std::string_view spec_text);

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  bool is_finite() const;
  std::int64_t characteristic() const;  // 0 in characteristic zero
  std::uint64_t order() const;          // throws InfiniteField otherwise
  int extension_degree() const;         // 1 for Prime and Rationals

  Element zero() const;
  Element one() const;
  Element from_integer(std::int64_t n) const;
  Element from_bigint(const BigInt& n) const;
  // a/b as a*b^{-1}; DivisionByZero if the denominator vanishes in the field.
  Element from_rational(const Rational& r) const;
  Element parse_element(std::string_view text) const;

  // Generator image under x (Extension / NumberField): the class of x itself.
  Element generator() const;

  // Index space: a bijection {0, ..., order-1} <-> elements with 0 <-> zero.
  // Prime fields index by residue; extensions by the base-p digit encoding of
  // the coefficient vector. Multiplicative index ops on extensions use lazily
  // built exp/log tables and require order <= kIndexSpaceMax.
  static constexpr std::uint64_t kIndexSpaceMax = std::uint64_t{1} << 20;
  std::uint64_t index_of(const Element& e) const;
  Element element_at(std::uint64_t index) const;
  std::uint64_t one_index() const { return 1; }
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_index(std::uint64_t a) const;
  std::uint64_t mul_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv_index(std::uint64_t a) const;
  std::uint64_t pow_index(std::uint64_t a, std::uint64_t e) const;

  // All elements in index order. InfiniteField / EnumerationCapExceeded.
  std::vector<Element> enumerate(const Limits& limits = {}) const;

 private:
  friend class Element;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  explicit Field(FieldSpec spec) : spec_(std::move(spec)) {}

  Element wrap(Element::Rep rep) const;
  void check_same_field(const Element& a, const Element& b) const;
  void ensure_tables() const;  // extension exp/log, built once

  FieldSpec spec_;
  std::uint64_t order_ = 0;  // finite kinds only

  mutable std::once_flag tables_once_;
  mutable std::vector<std::uint32_t> log_table_;
  mutable std::vector<std::uint32_t> exp_table_;
};

}  // namespace cf
