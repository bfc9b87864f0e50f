#pragma once

#include <array>
#include <compare>
#include <string>

namespace belyi {

inline constexpr int kRootCount = 12;

// Three distinct root labels from 1..12, always held in ascending order.
class Triple {
 public:
  // Throws BadTriple for repeated or out-of-range indices.
  Triple(int i, int j, int k);

  int i() const noexcept { return v_[0]; }
  int j() const noexcept { return v_[1]; }
  int k() const noexcept { return v_[2]; }
  const std::array<int, 3>& indices() const noexcept { return v_; }
  bool contains(int label) const noexcept;

  std::string to_string() const;  // "(2,7,11)"

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<int, 3> v_;
};

}  // namespace belyi
