#include "cf/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "cf/errors.hpp"

namespace cf {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorCode::InvalidPermutation, "degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw Error(ErrorCode::InvalidPermutation, "image list is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> im(degree);
  for (std::uint32_t i = 0; i < degree; ++i) im[i] = i;
  return Permutation(std::move(im));
}

std::uint32_t Permutation::operator()(std::uint32_t x) const {
  if (x >= images_.size()) throw Error(ErrorCode::BadArgument, "point out of range");
  return images_[x];
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) {
    throw Error(ErrorCode::BadArgument, "composing permutations of different degrees");
  }
  std::vector<std::uint32_t> im(images_.size());
  for (std::uint32_t x = 0; x < im.size(); ++x) im[x] = images_[other.images_[x]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::uint32_t x = 0; x < im.size(); ++x) im[images_[x]] = x;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::parse_cycles(std::string_view text, std::uint32_t degree) {
  if (degree == 0) throw Error(ErrorCode::InvalidPermutation, "degree must be positive");
  std::vector<std::uint32_t> im(degree);
  for (std::uint32_t i = 0; i < degree; ++i) im[i] = i;

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorCode::InvalidPermutation, "expected '(' in cycle notation");
    }
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorCode::InvalidPermutation, "expected a point number in cycle");
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= degree) throw Error(ErrorCode::InvalidPermutation, "point out of range");
        ++i;
      }
      cycle.push_back(static_cast<std::uint32_t>(v));
      skip_ws();
    }
    if (i == text.size()) throw Error(ErrorCode::InvalidPermutation, "unterminated cycle");
    ++i;  // ')'
    skip_ws();
    any = true;

    std::vector<bool> seen(degree, false);
    for (auto p : cycle) {
      if (seen[p]) throw Error(ErrorCode::InvalidPermutation, "repeated point in cycle");
      seen[p] = true;
    }
    if (cycle.size() >= 2) {
      // apply the cycle on the left of what has been built so far
      std::vector<std::uint32_t> c(degree);
      for (std::uint32_t x = 0; x < degree; ++x) c[x] = x;
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        c[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      for (std::uint32_t x = 0; x < degree; ++x) im[x] = c[im[x]];
    }
  }
  if (!any) throw Error(ErrorCode::InvalidPermutation, "empty permutation text");
  return Permutation(std::move(im));
}

std::string Permutation::cycle_str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x);
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

PermGroupSpec parse_group(std::string_view generators_text, std::uint32_t degree) {
  PermGroupSpec spec;
  spec.degree = degree;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= generators_text.size(); ++i) {
    bool split = (i == generators_text.size());
    if (!split) {
      char c = generators_text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      split = (c == ',' && depth == 0);
    }
    if (!split) continue;
    std::string_view piece = generators_text.substr(start, i - start);
    start = i + 1;
    std::size_t a = piece.find_first_not_of(" \t");
    if (a == std::string_view::npos) {
      throw Error(ErrorCode::InvalidPermutation, "empty generator in list");
    }
    std::size_t b = piece.find_last_not_of(" \t");
    spec.generators.push_back(Permutation::parse_cycles(piece.substr(a, b - a + 1), degree));
  }
  if (spec.generators.empty()) {
    throw Error(ErrorCode::InvalidPermutation, "generator list is empty");
  }
  return spec;
}

SchreierResult schreier_generators(const PermGroupSpec& group, std::uint32_t base) {
  if (group.degree == 0 || group.generators.empty()) {
    throw Error(ErrorCode::BadArgument, "group spec needs a degree and generators");
  }
  if (base >= group.degree) throw Error(ErrorCode::BadArgument, "base point out of range");
  for (const auto& s : group.generators) {
    if (s.degree() != group.degree) {
      throw Error(ErrorCode::BadArgument, "generator degree mismatch");
    }
  }

  SchreierResult result;
  result.base = base;

  // breadth-first transversal: t_x maps base to x, tree edges give t_{s(x)} = s t_x
  std::vector<Permutation> transversal(group.degree, Permutation::identity(group.degree));
  std::vector<bool> in_orbit(group.degree, false);
  std::deque<std::uint32_t> queue;
  in_orbit[base] = true;
  queue.push_back(base);
  result.orbit.push_back(base);
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (const auto& s : group.generators) {
      std::uint32_t y = s(x);
      if (in_orbit[y]) continue;
      in_orbit[y] = true;
      transversal[y] = s.compose(transversal[x]);
      queue.push_back(y);
      result.orbit.push_back(y);
    }
  }
  result.index = result.orbit.size();
  result.generator_count_bound =
      generator_bound(group.generators.size(), BigInt(result.index));

  std::set<Permutation> seen;
  for (std::uint32_t x : result.orbit) {
    for (const auto& s : group.generators) {
      std::uint32_t y = s(x);
      Permutation gen = transversal[y].inverse().compose(s).compose(transversal[x]);
      if (gen(base) != base) {
        throw Error(ErrorCode::BadArgument, "Schreier generator does not fix the base point");
      }
      if (gen.is_identity()) continue;
      if (seen.insert(gen).second) result.subgroup_generators.push_back(std::move(gen));
    }
  }
  return result;
}

BigInt group_order(const std::vector<Permutation>& generators, std::uint64_t cap) {
  if (generators.empty()) throw Error(ErrorCode::BadArgument, "no generators");
  std::uint32_t degree = generators[0].degree();
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorCode::BadArgument, "generator degree mismatch");
  }
  std::set<Permutation> elements;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(degree);
  elements.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation y = g.compose(x);
      if (elements.insert(y).second) {
        if (elements.size() > cap) {
          throw Error(ErrorCode::EnumerationCapExceeded,
                      "group closure exceeds " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return BigInt(elements.size());
}

BigInt generator_bound(std::uint64_t g, const BigInt& index) {
  if (g < 1 || index < 1) throw Error(ErrorCode::BadArgument, "g and index must be positive");
  return 1 + index * (BigInt(g) - 1);
}

BigInt kummer_bound(std::uint64_t d, std::uint64_t g) {
  if (d < 1 || g < 1) throw Error(ErrorCode::BadArgument, "d and g must be positive");
  return pow(BigInt(d), d * g + 1);
}

std::pair<BigInt, BigInt> diagonal_variable_bound(std::uint64_t d, std::uint64_t g) {
  BigInt n = kummer_bound(d, g);
  return {n, n * n};
}

}  // namespace cf
