#pragma once

// Combinatorial dessins: a pair (g0, g1) acting on edge-segment labels.
// Black vertices are cycles of g0, white vertices cycles of g1, and faces
// cycles of g_inf = (g0 g1)^-1.

#include <optional>
#include <string>
#include <vector>

#include "belyi/perm.hpp"

namespace belyi {

class Constellation {
 public:
  // Throws DegreeMismatch.
  Constellation(Permutation g0, Permutation g1);

  std::size_t degree() const noexcept { return g0_.degree(); }
  const Permutation& g0() const noexcept { return g0_; }
  const Permutation& g1() const noexcept { return g1_; }
  Permutation ginf() const;
  bool transitive() const noexcept { return transitive_; }

  friend bool operator==(const Constellation& a, const Constellation& b) {
    return a.g0_ == b.g0_ && a.g1_ == b.g1_;
  }

 private:
  Permutation g0_;
  Permutation g1_;
  bool transitive_;
};

struct Passport {
  CycleType black;
  CycleType white;
  CycleType faces;

  friend bool operator==(const Passport&, const Passport&) = default;
};

struct DessinInvariants {
  std::size_t degree;
  int genus;
  std::size_t black_count;
  std::size_t white_count;
  std::size_t face_count;
  Passport passport;
  bool clean;
  std::optional<CycleType> bouquets;  // present for clean dessins
  std::string canonical_hash;
};

std::vector<Cycle> faces(const Constellation& c);
// 2 - 2g = #cycles(g0) + #cycles(g1) + #cycles(g_inf) - n. Throws NotConnected.
int genus(const Constellation& c);
Passport passport(const Constellation& c);
bool is_clean(const Constellation& c);
// Black valencies of a clean dessin; a vertex of valency v is the centre of
// a v-fold bouquet. Throws CleannessRequired.
CycleType bouquet_profile(const Constellation& c);

// Simultaneous conjugacy: h with h g0 h^-1 = g0' and h g1 h^-1 = g1'.
std::optional<Permutation> isomorphism(const Constellation& c1, const Constellation& c2);
bool isomorphic(const Constellation& c1, const Constellation& c2);

// Lexicographically least relabelling over breadth-first numberings (g0
// before g1) rooted at every point. Throws NotConnected.
Constellation canonical_form(const Constellation& c);
// 64-bit FNV-1a of the canonical image tables, as 16 hex digits.
std::string canonical_hash(const Constellation& c);

DessinInvariants invariants(const Constellation& c);

}  // namespace belyi
