#include "belyi/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "belyi/error.hpp"

namespace belyi {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

void require_same_degree(std::span<const Permutation> gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator list");
  for (const auto& g : gens) {
    if (g.degree() != gens.front().degree())
      throw Error(ErrorCode::DegreeMismatch, "generators have different degrees");
  }
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorCode::InvalidArgument, "permutation degree must be >= 1");
  std::vector<bool> seen(images_.size() + 1, false);
  for (Point x : images_) {
    if (x < 1 || x > images_.size() || seen[x])
      throw Error(ErrorCode::InvalidArgument, "image table is not a bijection of {1..n}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  return Permutation(std::move(images));
}

Point Permutation::operator()(Point x) const {
  if (x < 1 || x > images_.size())
    throw Error(ErrorCode::PointOutOfRange, "point " + std::to_string(x) + " outside 1.." +
                                                std::to_string(images_.size()));
  return images_[x - 1];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> Point {
    skip_ws();
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > 0xffffffffULL) throw SyntaxError(start, "integer too large");
      ++pos;
    }
    if (pos == start) throw SyntaxError(pos, "expected a positive integer");
    if (value == 0) throw SyntaxError(start, "point labels are 1-based");
    return static_cast<Point>(value);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw SyntaxError(pos, "expected '('");
    ++pos;
    skip_ws();
    Cycle cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" denotes the identity
    } else {
      cycle.push_back(read_int());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        cycle.push_back(read_int());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != ')') throw SyntaxError(pos, "expected ',' or ')'");
      ++pos;
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }

  Point max_label = 0;
  for (const auto& c : cycles)
    for (Point x : c) max_label = std::max(max_label, x);
  if (degree == 0) degree = max_label;
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "cannot infer degree of the identity");
  if (max_label > degree)
    throw Error(ErrorCode::PointOutOfRange, "label " + std::to_string(max_label) +
                                                " exceeds degree " + std::to_string(degree));

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(degree + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (used[c[i]])
        throw Error(ErrorCode::InvalidArgument,
                    "label " + std::to_string(c[i]) + " appears in more than one position");
      used[c[i]] = true;
      images[c[i] - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

std::size_t CycleType::degree() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::size_t CycleType::count(std::size_t length) const noexcept {
  return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), length));
}

std::string CycleType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(parts[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::DegreeMismatch, "compose: degrees " + std::to_string(p.degree()) +
                                               " and " + std::to_string(q.degree()));
  const auto pi = p.images();
  const auto qi = q.images();
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = qi[pi[i] - 1];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  const auto pi = p.images();
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[pi[i] - 1] = static_cast<Point>(i + 1);
  return Permutation(std::move(images));
}

Permutation power(const Permutation& p, long long exponent) {
  Permutation base = exponent < 0 ? inverse(p) : p;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& h) {
  return compose(inverse(h), compose(p, h));
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  const auto pi = p.images();
  std::vector<bool> seen(p.degree() + 1, false);
  std::vector<Cycle> cycles;
  for (Point start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (Point x = start; !seen[x]; x = pi[x - 1]) {
      seen[x] = true;
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  for (const auto& c : cycle_decomposition(p)) t.parts.push_back(c.size());
  std::sort(t.parts.begin(), t.parts.end(), std::greater<>());
  return t;
}

std::size_t cycle_count(const Permutation& p) {
  const auto pi = p.images();
  std::vector<bool> seen(p.degree() + 1, false);
  std::size_t count = 0;
  for (Point start = 1; start <= p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point x = start; !seen[x]; x = pi[x - 1]) seen[x] = true;
  }
  return count;
}

std::string to_cycle_string(const Permutation& p, bool include_fixed_points) {
  std::string out;
  for (const auto& c : cycle_decomposition(p)) {
    if (c.size() == 1 && !include_fixed_points) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::vector<Point> orbit(std::span<const Permutation> generators, Point point) {
  require_same_degree(generators);
  const std::size_t n = generators.front().degree();
  if (point < 1 || point > n)
    throw Error(ErrorCode::PointOutOfRange,
                "orbit base point " + std::to_string(point) + " outside 1.." + std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t head = 0; head < result.size(); ++head) {
    for (const auto& g : generators) {
      Point y = g.images()[result[head] - 1];
      if (!seen[y]) {
        seen[y] = true;
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_transitive(std::span<const Permutation> generators) {
  return orbit(generators, 1).size() == generators.front().degree();
}

std::optional<std::size_t> group_order(std::span<const Permutation> generators, std::size_t cap) {
  require_same_degree(generators);
  const Permutation id = Permutation::identity(generators.front().degree());
  std::unordered_set<std::vector<Point>, ImageHash> elements;
  std::deque<Permutation> frontier;
  elements.emplace(id.images().begin(), id.images().end());
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Permutation h = compose(s, g);
      std::vector<Point> key(h.images().begin(), h.images().end());
      if (elements.insert(std::move(key)).second) {
        if (elements.size() > cap) return std::nullopt;
        frontier.push_back(std::move(h));
      }
    }
  }
  return elements.size();
}

}  // namespace belyi
