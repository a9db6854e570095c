#include "cf/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

namespace cf {

namespace {

constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;  // p < 2^31 keeps the product inside 64 bits
}

std::int64_t pow_mod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = mod_norm(a, p);
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  return mod_norm(s0, p);
}

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

// --- dense polynomials over F_p, little-endian, trailing zeros stripped ---

using FPoly = std::vector<std::int64_t>;

void ptrim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FPoly psub(const FPoly& a, const FPoly& b, std::int64_t p) {
  FPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t x = i < a.size() ? a[i] : 0;
    std::int64_t y = i < b.size() ? b[i] : 0;
    r[i] = mod_norm(x - y, p);
  }
  ptrim(r);
  return r;
}

FPoly pmul(const FPoly& a, const FPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  ptrim(r);
  return r;
}

// remainder of a by b (b nonzero, not necessarily monic); quotient optional
FPoly pdivmod(FPoly a, const FPoly& b, std::int64_t p, FPoly* quot) {
  ptrim(a);
  std::int64_t li = inv_mod(b.back(), p);
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::int64_t c = mul_mod(a.back(), li, p);
    std::size_t shift = a.size() - b.size();
    if (quot) (*quot)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = mod_norm(a[shift + i] - mul_mod(c, b[i], p), p);
    }
    ptrim(a);
  }
  if (quot) ptrim(*quot);
  return a;
}

// m monic
FPoly pmod(FPoly a, const FPoly& m, std::int64_t p) {
  return pdivmod(std::move(a), m, p, nullptr);
}

FPoly pgcd(FPoly a, FPoly b, std::int64_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    FPoly r = pdivmod(a, b, p, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, li, p);
  }
  return a;
}

FPoly ppowmod(FPoly base, BigInt e, const FPoly& m, std::int64_t p) {
  FPoly r{1};
  base = pmod(std::move(base), m, p);
  while (e > 0) {
    if ((e & 1) != 0) r = pmod(pmul(r, base, p), m, p);
    e >>= 1;
    if (e > 0) base = pmod(pmul(base, base, p), m, p);
  }
  return r;
}

std::vector<std::int64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::int64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(static_cast<std::int64_t>(f));
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(static_cast<std::int64_t>(n));
  return out;
}

// Rabin test: f monic of degree k is irreducible over F_p iff x^{p^k} = x
// (mod f) and gcd(x^{p^{k/t}} - x, f) = 1 for every prime t | k.
bool poly_irreducible(const FPoly& f, std::int64_t p) {
  std::size_t k = f.size() - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  FPoly x{0, 1};
  BigInt pk = pow(BigInt(p), static_cast<std::uint64_t>(k));
  FPoly xq = ppowmod(x, pk, f, p);
  if (psub(xq, x, p) != FPoly{}) return false;
  for (std::int64_t t : prime_factors_u64(k)) {
    BigInt pe = pow(BigInt(p), static_cast<std::uint64_t>(k / t));
    FPoly xe = ppowmod(x, pe, f, p);
    FPoly g = pgcd(f, psub(xe, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Smallest monic irreducible of degree k in lexicographic coefficient order,
// constant term first.
FPoly default_modulus(std::int64_t p, int k) {
  std::vector<std::int64_t> digits(k, 0);
  while (true) {
    FPoly f(digits.begin(), digits.end());
    f.push_back(1);
    if (poly_irreducible(f, p)) return f;
    int i = k - 1;
    while (i >= 0) {
      if (++digits[i] < p) break;
      digits[i] = 0;
      --i;
    }
    if (i < 0) throw Error(ErrorCode::BadFieldSpec, "no irreducible modulus found");
  }
}

// --- dense polynomials over Q ---

using QPoly = std::vector<Rational>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qtrim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  qtrim(r);
  return r;
}

// remainder of a by b (b nonzero); quotient optional
QPoly qdivmod(QPoly a, const QPoly& b, QPoly* quotient) {
  qtrim(a);
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    if (quotient) (*quotient)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qtrim(a);
  }
  if (quotient) qtrim(*quotient);
  return a;
}

QPoly qmod(QPoly a, const QPoly& m) { return qdivmod(std::move(a), m, nullptr); }

QPoly qderiv(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rational(static_cast<int>(i)));
  qtrim(r);
  return r;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// extended gcd of a against monic m: returns (g, s) with s*a = g (mod m),
// g monic (or empty when a = 0 mod m)
std::pair<QPoly, QPoly> qegcd_mod(QPoly a, const QPoly& m) {
  QPoly r0 = m, r1 = std::move(a);
  qtrim(r1);
  QPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q;
    QPoly r2 = qdivmod(r0, r1, &q);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
  }
  if (!r0.empty()) {
    Rational lead = r0.back();
    for (auto& c : r0) c /= lead;
    for (auto& c : s0) c /= lead;
  }
  return {std::move(r0), std::move(s0)};
}

// --- polynomial text parsing and formatting (variable fixed to 'x') ---

QPoly parse_poly_text(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::BadElement, "empty polynomial");
  QPoly coeffs;
  auto at = [&](std::size_t deg) -> Rational& {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
    return coeffs[deg];
  };
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error(ErrorCode::BadElement, "expected '+' or '-' in '" + std::string(raw) + "'");
    }
    first = false;
    if (i >= s.size()) throw Error(ErrorCode::BadElement, "dangling sign in '" + std::string(raw) + "'");
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      BigInt num{s.substr(start, i - start)};
      BigInt den{1};
      if (i < s.size() && s[i] == '/') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw Error(ErrorCode::BadElement, "missing denominator in '" + std::string(raw) + "'");
        den = BigInt{s.substr(start, i - start)};
        if (den == 0) throw Error(ErrorCode::BadElement, "zero denominator in '" + std::string(raw) + "'");
      }
      coef = Rational(num, den);
      have_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::size_t deg = 0;
    bool have_x = false;
    if (i < s.size() && s[i] == 'x') {
      have_x = true;
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i || i - start > 4) {
          throw Error(ErrorCode::BadElement, "bad exponent in '" + std::string(raw) + "'");
        }
        deg = std::stoul(std::string(s.substr(start, i - start)));
        if (deg > 4096) throw Error(ErrorCode::BadElement, "exponent too large in '" + std::string(raw) + "'");
      }
    }
    if (!have_coef && !have_x) {
      throw Error(ErrorCode::BadElement, "unexpected character in '" + std::string(raw) + "'");
    }
    at(deg) += Rational(sign) * coef;
  }
  return coeffs;
}

std::string format_term(const std::string& coef, bool coef_is_one, std::size_t deg) {
  if (deg == 0) return coef;
  std::string xp = deg == 1 ? "x" : "x^" + std::to_string(deg);
  return coef_is_one ? xp : coef + "*" + xp;
}

std::string format_poly_q(const QPoly& c) {
  std::string out;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] == 0) continue;
    bool neg = c[j] < 0;
    Rational mag = neg ? Rational(-c[j]) : c[j];
    std::string term = format_term(to_string(mag), mag == 1, j);
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? "-" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_poly_fp(const std::vector<std::int64_t>& c) {
  std::string out;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j] == 0) continue;
    std::string term = format_term(std::to_string(c[j]), c[j] == 1, j);
    out += out.empty() ? term : "+" + term;
  }
  return out.empty() ? "0" : out;
}

std::int64_t rational_to_residue(const Rational& r, std::int64_t p) {
  std::int64_t num = static_cast<std::int64_t>(numerator(r) % p);
  std::int64_t den = static_cast<std::int64_t>(denominator(r) % p);
  num = mod_norm(num, p);
  den = mod_norm(den, p);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo " + std::to_string(p));
  return den == 1 ? num : mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

// --- FieldSpec ---

FieldSpec FieldSpec::prime(std::int64_t p) {
  FieldSpec s;
  s.kind = FieldKind::Prime;
  s.p = p;
  s.degree = 1;
  return s;
}

FieldSpec FieldSpec::extension(std::int64_t p, int k) {
  FieldSpec s;
  s.kind = FieldKind::Extension;
  s.p = p;
  s.degree = k;
  return s;
}

FieldSpec FieldSpec::extension(std::int64_t p, int k, std::vector<std::int64_t> modulus) {
  FieldSpec s = extension(p, k);
  s.modulus = std::move(modulus);
  return s;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{}; }

FieldSpec FieldSpec::number_field(std::vector<Rational> monic_poly) {
  FieldSpec s;
  s.kind = FieldKind::NumberField;
  s.min_poly = std::move(monic_poly);
  s.degree = s.min_poly.empty() ? 0 : static_cast<int>(s.min_poly.size()) - 1;
  return s;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "Q") return rationals();
  if (s.rfind("Q[x]/(", 0) == 0) {
    if (s.back() != ')') throw Error(ErrorCode::BadFieldSpec, "expected ')' in '" + std::string(text) + "'");
    QPoly poly = parse_poly_text(std::string_view(s).substr(6, s.size() - 7));
    return number_field(std::move(poly));
  }
  if (s.rfind("p=", 0) == 0) {
    BigInt p = parse_bigint(std::string_view(s).substr(2));
    if (p < 2 || p > kMaxPrime) throw Error(ErrorCode::BadFieldSpec, "characteristic out of range in '" + std::string(text) + "'");
    return prime(static_cast<std::int64_t>(p));
  }
  if (s.rfind("q=", 0) == 0) {
    std::string_view rest = std::string_view(s).substr(2);
    std::string_view qpart = rest;
    std::string_view mpart;
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      qpart = rest.substr(0, colon);
      mpart = rest.substr(colon + 1);
    }
    BigInt qbig = parse_bigint(qpart);
    if (qbig < 2 || qbig > BigInt(std::uint64_t{1} << 62)) {
      throw Error(ErrorCode::BadFieldSpec, "order out of range in '" + std::string(text) + "'");
    }
    std::uint64_t q = static_cast<std::uint64_t>(qbig);
    // recognize q = p^k by probing integer k-th roots, largest k first
    std::int64_t p = 0;
    int k = 0;
    for (int kk = 62; kk >= 1 && p == 0; --kk) {
      auto root = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(q), 1.0 / kk)));
      for (std::int64_t cand = std::max<std::int64_t>(2, root - 2); cand <= root + 2; ++cand) {
        if (cand > kMaxPrime) break;
        BigInt power = cf::pow(BigInt(cand), static_cast<std::uint64_t>(kk));
        if (power == qbig && is_prime_int(cand)) {
          p = cand;
          k = kk;
          break;
        }
      }
    }
    if (p == 0) {
      throw Error(ErrorCode::BadFieldSpec,
                  "'" + std::string(text) + "' is not a prime power with characteristic below 2^31");
    }
    if (mpart.empty()) return k == 1 ? prime(p) : extension(p, k);
    QPoly poly = parse_poly_text(mpart);
    std::vector<std::int64_t> mod(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (denominator(poly[i]) != 1) throw Error(ErrorCode::BadFieldSpec, "modulus coefficients must be integers");
      mod[i] = mod_norm(static_cast<std::int64_t>(numerator(poly[i]) % p), p);
    }
    return extension(p, k, std::move(mod));
  }
  throw Error(ErrorCode::BadFieldSpec, "cannot parse field spec '" + std::string(text) + "'");
}

std::string FieldSpec::str() const {
  switch (kind) {
    case FieldKind::Prime:
      return "p=" + std::to_string(p);
    case FieldKind::Extension: {
      BigInt q = cf::pow(BigInt(p), static_cast<std::uint64_t>(degree));
      std::string out = "q=" + q.str();
      if (!modulus.empty()) out += ":" + format_poly_fp(modulus);
      return out;
    }
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::NumberField:
      return "Q[x]/(" + format_poly_q(min_poly) + ")";
  }
  return "?";
}

// --- Field construction ---

FieldHandle Field::make(std::string_view spec_text) { return make(FieldSpec::parse(spec_text)); }

FieldHandle Field::make(const FieldSpec& spec_in) {
  FieldSpec spec = spec_in;
  switch (spec.kind) {
    case FieldKind::Prime: {
      if (spec.p < 2 || spec.p > kMaxPrime) {
        throw Error(ErrorCode::BadFieldSpec, "characteristic must be in [2, 2^31)");
      }
      if (!is_prime_int(spec.p)) {
        throw Error(ErrorCode::CompositeCharacteristic, std::to_string(spec.p) + " is not prime");
      }
      spec.degree = 1;
      spec.modulus.clear();
      spec.min_poly.clear();
      auto* f = new Field(std::move(spec));
      f->order_ = static_cast<std::uint64_t>(f->spec_.p);
      return FieldHandle(f);
    }
    case FieldKind::Extension: {
      if (spec.p < 2 || spec.p > kMaxPrime) {
        throw Error(ErrorCode::BadFieldSpec, "characteristic must be in [2, 2^31)");
      }
      if (!is_prime_int(spec.p)) {
        throw Error(ErrorCode::CompositeCharacteristic, std::to_string(spec.p) + " is not prime");
      }
      if (spec.degree < 1) throw Error(ErrorCode::BadFieldSpec, "extension degree must be >= 1");
      if (spec.degree == 1) return make(FieldSpec::prime(spec.p));  // degree-1 moduli give F_p itself
      // order p^degree must stay below 2^62
      BigInt order_big = cf::pow(BigInt(spec.p), static_cast<std::uint64_t>(spec.degree));
      if (order_big > BigInt(std::uint64_t{1} << 62)) {
        throw Error(ErrorCode::BadFieldSpec, "extension order exceeds 2^62");
      }
      if (spec.modulus.empty()) {
        spec.modulus = default_modulus(spec.p, spec.degree);
      } else {
        for (auto& c : spec.modulus) c = mod_norm(c, spec.p);
        FPoly m = spec.modulus;
        ptrim(m);
        if (m.size() != static_cast<std::size_t>(spec.degree) + 1 || m.back() != 1) {
          throw Error(ErrorCode::BadFieldSpec, "modulus must be monic of degree " + std::to_string(spec.degree));
        }
        spec.modulus = m;
        if (!poly_irreducible(m, spec.p)) {
          throw Error(ErrorCode::ReducibleModulus,
                      format_poly_fp(m) + " is reducible over F_" + std::to_string(spec.p));
        }
      }
      spec.min_poly.clear();
      auto* f = new Field(std::move(spec));
      f->order_ = static_cast<std::uint64_t>(order_big);
      return FieldHandle(f);
    }
    case FieldKind::Rationals: {
      spec = FieldSpec::rationals();
      return FieldHandle(new Field(std::move(spec)));
    }
    case FieldKind::NumberField: {
      QPoly m = spec.min_poly;
      qtrim(m);
      if (m.size() < 2) throw Error(ErrorCode::BadFieldSpec, "number field polynomial must be non-constant");
      if (m.back() != 1) throw Error(ErrorCode::BadFieldSpec, "number field polynomial must be monic");
      QPoly g = qgcd(m, qderiv(m));
      if (g.size() != 1) {
        throw Error(ErrorCode::NonSquarefreeNumberFieldPolynomial,
                    format_poly_q(m) + " is not squarefree");
      }
      spec.min_poly = std::move(m);
      spec.degree = static_cast<int>(spec.min_poly.size()) - 1;
      spec.modulus.clear();
      spec.p = 0;
      return FieldHandle(new Field(std::move(spec)));
    }
  }
  throw Error(ErrorCode::BadFieldSpec, "unknown field kind");
}

bool Field::is_finite() const {
  return spec_.kind == FieldKind::Prime || spec_.kind == FieldKind::Extension;
}

std::int64_t Field::characteristic() const { return is_finite() ? spec_.p : 0; }

std::uint64_t Field::order() const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteField, spec_.str() + " is infinite");
  return order_;
}

int Field::extension_degree() const { return spec_.degree; }

Element Field::wrap(Element::Rep rep) const { return Element(shared_from_this(), std::move(rep)); }

Element Field::zero() const { return from_integer(0); }
Element Field::one() const { return from_integer(1); }

Element Field::from_integer(std::int64_t n) const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return wrap(mod_norm(n, spec_.p));
    case FieldKind::Extension: {
      std::vector<std::int64_t> v(spec_.degree, 0);
      v[0] = mod_norm(n, spec_.p);
      return wrap(std::move(v));
    }
    case FieldKind::Rationals:
      return wrap(Rational(n));
    case FieldKind::NumberField: {
      std::vector<Rational> v(spec_.degree, Rational(0));
      v[0] = Rational(n);
      return wrap(std::move(v));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown field kind");
}

Element Field::from_bigint(const BigInt& n) const {
  if (is_finite()) {
    std::int64_t r = static_cast<std::int64_t>(n % spec_.p);
    return from_integer(mod_norm(r, spec_.p));
  }
  return from_rational(Rational(n));
}

Element Field::from_rational(const Rational& r) const {
  switch (spec_.kind) {
    case FieldKind::Prime:
      return wrap(rational_to_residue(r, spec_.p));
    case FieldKind::Extension: {
      std::vector<std::int64_t> v(spec_.degree, 0);
      v[0] = rational_to_residue(r, spec_.p);
      return wrap(std::move(v));
    }
    case FieldKind::Rationals:
      return wrap(r);
    case FieldKind::NumberField: {
      std::vector<Rational> v(spec_.degree, Rational(0));
      v[0] = r;
      return wrap(std::move(v));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown field kind");
}

Element Field::generator() const {
  if (spec_.kind == FieldKind::Extension) {
    std::vector<std::int64_t> v(spec_.degree, 0);
    v[1] = 1;
    return wrap(std::move(v));
  }
  if (spec_.kind == FieldKind::NumberField) {
    std::vector<Rational> v(spec_.degree, Rational(0));
    v[1] = Rational(1);
    return wrap(std::move(v));
  }
  throw Error(ErrorCode::BadArgument, "field has no generator element x");
}

Element Field::parse_element(std::string_view text) const {
  QPoly coeffs = parse_poly_text(text);
  switch (spec_.kind) {
    case FieldKind::Prime:
    case FieldKind::Rationals: {
      if (coeffs.size() > 1) {
        throw Error(ErrorCode::BadElement, "'" + std::string(text) + "' is not a constant");
      }
      return from_rational(coeffs.empty() ? Rational(0) : coeffs[0]);
    }
    case FieldKind::Extension: {
      FPoly v(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = rational_to_residue(coeffs[i], spec_.p);
      v = pmod(std::move(v), spec_.modulus, spec_.p);
      v.resize(spec_.degree, 0);
      return wrap(std::move(v));
    }
    case FieldKind::NumberField: {
      QPoly v = qmod(std::move(coeffs), spec_.min_poly);
      v.resize(spec_.degree, Rational(0));
      return wrap(std::move(v));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown field kind");
}

void Field::check_same_field(const Element& a, const Element& b) const {
  if (a.field_.get() == b.field_.get()) return;
  if (a.field_->spec_ == b.field_->spec_) return;
  throw Error(ErrorCode::BadArgument, "elements belong to different fields: " + a.field_->spec_.str() +
                                          " vs " + b.field_->spec_.str());
}

// --- Element operations ---

bool Element::is_zero() const {
  switch (field_->kind()) {
    case FieldKind::Prime:
      return std::get<std::int64_t>(rep_) == 0;
    case FieldKind::Extension: {
      for (auto c : std::get<std::vector<std::int64_t>>(rep_)) {
        if (c != 0) return false;
      }
      return true;
    }
    case FieldKind::Rationals:
      return std::get<Rational>(rep_) == 0;
    case FieldKind::NumberField: {
      for (const auto& c : std::get<std::vector<Rational>>(rep_)) {
        if (c != 0) return false;
      }
      return true;
    }
  }
  return false;
}

bool Element::is_one() const { return *this == field_->one(); }

bool Element::operator==(const Element& other) const {
  field_->check_same_field(*this, other);
  return rep_ == other.rep_;
}

std::string Element::str() const {
  switch (field_->kind()) {
    case FieldKind::Prime:
      return std::to_string(std::get<std::int64_t>(rep_));
    case FieldKind::Extension:
      return format_poly_fp(std::get<std::vector<std::int64_t>>(rep_));
    case FieldKind::Rationals:
      return to_string(std::get<Rational>(rep_));
    case FieldKind::NumberField:
      return format_poly_q(std::get<std::vector<Rational>>(rep_));
  }
  return "?";
}

bool Element::less(const Element& a, const Element& b) {
  a.field_->check_same_field(a, b);
  switch (a.field_->kind()) {
    case FieldKind::Prime:
      return std::get<std::int64_t>(a.rep_) < std::get<std::int64_t>(b.rep_);
    case FieldKind::Extension: {
      const auto& x = std::get<std::vector<std::int64_t>>(a.rep_);
      const auto& y = std::get<std::vector<std::int64_t>>(b.rep_);
      for (std::size_t j = x.size(); j-- > 0;) {
        if (x[j] != y[j]) return x[j] < y[j];
      }
      return false;
    }
    case FieldKind::Rationals:
      return std::get<Rational>(a.rep_) < std::get<Rational>(b.rep_);
    case FieldKind::NumberField: {
      const auto& x = std::get<std::vector<Rational>>(a.rep_);
      const auto& y = std::get<std::vector<Rational>>(b.rep_);
      for (std::size_t j = x.size(); j-- > 0;) {
        if (x[j] != y[j]) return x[j] < y[j];
      }
      return false;
    }
  }
  return false;
}

Element operator+(const Element& a, const Element& b) {
  a.field_->check_same_field(a, b);
  const Field& F = *a.field_;
  switch (F.kind()) {
    case FieldKind::Prime:
      return F.wrap(mod_norm(std::get<std::int64_t>(a.rep_) + std::get<std::int64_t>(b.rep_), F.spec().p));
    case FieldKind::Extension: {
      auto v = std::get<std::vector<std::int64_t>>(a.rep_);
      const auto& w = std::get<std::vector<std::int64_t>>(b.rep_);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_norm(v[i] + w[i], F.spec().p);
      return F.wrap(std::move(v));
    }
    case FieldKind::Rationals:
      return F.wrap(std::get<Rational>(a.rep_) + std::get<Rational>(b.rep_));
    case FieldKind::NumberField: {
      auto v = std::get<std::vector<Rational>>(a.rep_);
      const auto& w = std::get<std::vector<Rational>>(b.rep_);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      return F.wrap(std::move(v));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown field kind");
}

Element Element::operator-() const {
  const Field& F = *field_;
  switch (F.kind()) {
    case FieldKind::Prime:
      return F.wrap(mod_norm(-std::get<std::int64_t>(rep_), F.spec().p));
    case FieldKind::Extension: {
      auto v = std::get<std::vector<std::int64_t>>(rep_);
      for (auto& c : v) c = mod_norm(-c, F.spec().p);
      return F.wrap(std::move(v));
    }
    case FieldKind::Rationals:
      return F.wrap(Rational(-std::get<Rational>(rep_)));
    case FieldKind::NumberField: {
      auto v = std::get<std::vector<Rational>>(rep_);
      for (auto& c : v) c = -c;
      return F.wrap(std::move(v));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown field kind");
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  a.field_->check_same_field(a, b);
  const Field& F = *a.field_;
  switch (F.kind()) {
    case FieldKind::Prime:
      return F.wrap(mul_mod(std::get<std::int64_t>(a.rep_), std::get<std::int64_t>(b.rep_), F.spec().p));
    case FieldKind::Extension: {
      FPoly prod = pmul(std::get<std::vector<std::int64_t>>(a.rep_),
                        std::get<std::vector<std::int64_t>>(b.rep_), F.spec().p);
      prod = pmod(std::move(prod), F.spec().modulus, F.spec().p);
      prod.resize(F.spec().degree, 0);
      return F.wrap(std::move(prod));
    }
    case FieldKind::Rationals:
      return F.wrap(std::get<Rational>(a.rep_) * std::get<Rational>(b.rep_));
    case FieldKind::NumberField: {
      QPoly prod = qmul(std::get<std::vector<Rational>>(a.rep_), std::get<std::vector<Rational>>(b.rep_));
      prod = qmod(std::move(prod), F.spec().min_poly);
      prod.resize(F.spec().degree, Rational(0));
      return F.wrap(std::move(prod));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown field kind");
}

Element Element::inverse() const {
  const Field& F = *field_;
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  switch (F.kind()) {
    case FieldKind::Prime:
      return F.wrap(inv_mod(std::get<std::int64_t>(rep_), F.spec().p));
    case FieldKind::Extension: {
      // extended gcd against the modulus; the gcd is a nonzero constant
      // because the modulus is irreducible
      std::int64_t p = F.spec().p;
      FPoly r0 = F.spec().modulus, r1 = std::get<std::vector<std::int64_t>>(rep_);
      ptrim(r1);
      FPoly s0{}, s1{1};
      while (!r1.empty()) {
        FPoly q;
        FPoly r2 = pdivmod(r0, r1, p, &q);
        FPoly s2 = psub(s0, pmul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      std::int64_t gi = inv_mod(r0.empty() ? 0 : r0[0], p);
      for (auto& c : s0) c = mul_mod(c, gi, p);
      s0 = pmod(std::move(s0), F.spec().modulus, p);
      s0.resize(F.spec().degree, 0);
      return F.wrap(std::move(s0));
    }
    case FieldKind::Rationals:
      return F.wrap(Rational(1) / std::get<Rational>(rep_));
    case FieldKind::NumberField: {
      auto [g, s] = qegcd_mod(std::get<std::vector<Rational>>(rep_), F.spec().min_poly);
      if (g.size() != 1) {
        throw Error(ErrorCode::ZeroDivisor,
                    "'" + str() + "' is a zero divisor in " + F.spec().str() +
                        " (modulus not irreducible)");
      }
      QPoly v = qmod(std::move(s), F.spec().min_poly);
      v.resize(F.spec().degree, Rational(0));
      return F.wrap(std::move(v));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown field kind");
}

Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }

Element Element::pow(std::uint64_t e) const {
  Element result = field_->one();
  Element base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// --- index space ---

std::uint64_t Field::index_of(const Element& e) const {
  if (e.field_.get() != this && !(e.field_->spec_ == spec_)) {
    throw Error(ErrorCode::BadArgument, "element belongs to a different field");
  }
  switch (spec_.kind) {
    case FieldKind::Prime:
      return static_cast<std::uint64_t>(std::get<std::int64_t>(e.rep_));
    case FieldKind::Extension: {
      const auto& v = std::get<std::vector<std::int64_t>>(e.rep_);
      std::uint64_t idx = 0;
      std::uint64_t mult = 1;
      for (int i = 0; i < spec_.degree; ++i) {
        idx += static_cast<std::uint64_t>(v[i]) * mult;
        mult *= static_cast<std::uint64_t>(spec_.p);
      }
      return idx;
    }
    default:
      throw Error(ErrorCode::InfiniteField, "index space requires a finite field");
  }
}

Element Field::element_at(std::uint64_t index) const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteField, "index space requires a finite field");
  if (index >= order_) throw Error(ErrorCode::BadArgument, "element index out of range");
  if (spec_.kind == FieldKind::Prime) return wrap(static_cast<std::int64_t>(index));
  std::vector<std::int64_t> v(spec_.degree, 0);
  std::uint64_t p = static_cast<std::uint64_t>(spec_.p);
  for (int i = 0; i < spec_.degree && index > 0; ++i) {
    v[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return wrap(std::move(v));
}

std::uint64_t Field::add_index(std::uint64_t a, std::uint64_t b) const {
  if (spec_.kind == FieldKind::Prime) return (a + b) % order_;
  std::uint64_t p = static_cast<std::uint64_t>(spec_.p);
  std::uint64_t r = 0, mult = 1;
  for (int i = 0; i < spec_.degree; ++i) {
    r += ((a % p) + (b % p)) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

std::uint64_t Field::neg_index(std::uint64_t a) const {
  if (spec_.kind == FieldKind::Prime) return a == 0 ? 0 : order_ - a;
  std::uint64_t p = static_cast<std::uint64_t>(spec_.p);
  std::uint64_t r = 0, mult = 1;
  for (int i = 0; i < spec_.degree; ++i) {
    std::uint64_t d = a % p;
    r += (d == 0 ? 0 : p - d) * mult;
    a /= p;
    mult *= p;
  }
  return r;
}

std::uint64_t Field::sub_index(std::uint64_t a, std::uint64_t b) const {
  return add_index(a, neg_index(b));
}

void Field::ensure_tables() const {
  std::call_once(tables_once_, [this] {
    std::uint64_t q = order_;
    if (q > kIndexSpaceMax) {
      throw Error(ErrorCode::EnumerationCapExceeded,
                  "extension order " + std::to_string(q) + " exceeds the index table limit");
    }
    std::int64_t p = spec_.p;
    auto decode = [&](std::uint64_t idx) {
      FPoly v(spec_.degree, 0);
      for (int i = 0; i < spec_.degree && idx > 0; ++i) {
        v[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p));
        idx /= static_cast<std::uint64_t>(p);
      }
      return v;
    };
    auto encode = [&](const FPoly& v) {
      std::uint64_t idx = 0, mult = 1;
      for (std::size_t i = 0; i < v.size(); ++i) {
        idx += static_cast<std::uint64_t>(v[i]) * mult;
        mult *= static_cast<std::uint64_t>(p);
      }
      return idx;
    };
    auto factors = prime_factors_u64(q - 1);
    std::uint64_t gen_idx = 0;
    for (std::uint64_t cand = 2; cand < q; ++cand) {
      FPoly v = decode(cand);
      bool ok = true;
      for (std::int64_t t : factors) {
        FPoly r = ppowmod(v, BigInt((q - 1) / static_cast<std::uint64_t>(t)), spec_.modulus, p);
        if (r == FPoly{1}) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen_idx = cand;
        break;
      }
    }
    if (gen_idx == 0) {
      throw Error(ErrorCode::BadFieldSpec, "no multiplicative generator found (modulus reducible?)");
    }
    FPoly g = decode(gen_idx);
    exp_table_.assign(q - 1, 0);
    log_table_.assign(q, 0);
    FPoly cur{1};
    for (std::uint64_t j = 0; j < q - 1; ++j) {
      std::uint64_t idx = encode(cur);
      exp_table_[j] = static_cast<std::uint32_t>(idx);
      log_table_[idx] = static_cast<std::uint32_t>(j);
      cur = pmod(pmul(cur, g, p), spec_.modulus, p);
    }
  });
}

std::uint64_t Field::mul_index(std::uint64_t a, std::uint64_t b) const {
  if (spec_.kind == FieldKind::Prime) return (a * b) % order_;
  if (a == 0 || b == 0) return 0;
  ensure_tables();
  std::uint64_t n = order_ - 1;
  return exp_table_[(log_table_[a] + log_table_[b]) % n];
}

std::uint64_t Field::inv_index(std::uint64_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (spec_.kind == FieldKind::Prime) return static_cast<std::uint64_t>(inv_mod(static_cast<std::int64_t>(a), spec_.p));
  ensure_tables();
  std::uint64_t n = order_ - 1;
  return exp_table_[(n - log_table_[a]) % n];
}

std::uint64_t Field::pow_index(std::uint64_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t n = order_ - 1;
  if (spec_.kind == FieldKind::Prime) {
    return static_cast<std::uint64_t>(pow_mod(static_cast<std::int64_t>(a), e % n == 0 ? n : e % n, spec_.p));
  }
  ensure_tables();
  return exp_table_[(static_cast<std::uint64_t>(log_table_[a]) * (e % n)) % n];
}

std::vector<Element> Field::enumerate(const Limits& limits) const {
  std::uint64_t q = order();  // throws InfiniteField for char-0 fields
  if (q > limits.enumeration_cap) {
    throw Error(ErrorCode::EnumerationCapExceeded,
                "field order " + std::to_string(q) + " exceeds the enumeration cap " +
                    std::to_string(limits.enumeration_cap));
  }
  std::vector<Element> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(element_at(i));
  return out;
}

}  // namespace cf
