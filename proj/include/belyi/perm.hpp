#pragma once

// Permutations of {1..n} stored as image tables, with the cycle and orbit
// machinery the monodromy and Galois layers are built on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace belyi {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

class Permutation {
 public:
  // images[i] is the image of point i + 1; values are 1-based.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // Cycle notation "(1,2,3)(4,5)". Fixed points may be omitted; the degree
  // defaults to the largest label mentioned.
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const;
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// Multiset of cycle lengths, kept in descending order.
struct CycleType {
  std::vector<std::size_t> parts;

  std::size_t degree() const noexcept;
  std::size_t count(std::size_t length) const noexcept;
  // "10 2 1^10" style summary.
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

// compose(p, q) applies p first, then q: x -> q(p(x)). Products read left
// to right, as loops concatenate.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, long long exponent);
// p relabelled by h: x -> h(p(h^-1(x))).
Permutation conjugate(const Permutation& p, const Permutation& h);

// Cycles in order of their smallest element, each starting at that element.
// Fixed points are reported as length-1 cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& p);
CycleType cycle_type(const Permutation& p);
std::size_t cycle_count(const Permutation& p);

std::string to_cycle_string(const Permutation& p, bool include_fixed_points = true);

// Sorted orbit of `point` under the generated group.
std::vector<Point> orbit(std::span<const Permutation> generators, Point point);
bool is_transitive(std::span<const Permutation> generators);

inline constexpr std::size_t kDefaultOrderCap = 10000;

// Exact order by closure enumeration; nullopt when the group exceeds `cap`.
std::optional<std::size_t> group_order(std::span<const Permutation> generators,
                                       std::size_t cap = kDefaultOrderCap);

}  // namespace belyi
