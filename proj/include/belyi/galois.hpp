#pragma once

// The A5 subgroup of S12 generated by a and b acts on root labels and hence
// on index triples, curves and the dessins of the full chain.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "belyi/covering.hpp"
#include "belyi/dessin.hpp"
#include "belyi/monodromy.hpp"
#include "belyi/perm.hpp"
#include "belyi/triple.hpp"

namespace belyi {

struct A5Generators {
  Permutation a;
  Permutation b;
};

// a = (2,3,4,5,6)(7,8,9,10,11), b = (1,2,3)(4,6,7)(5,11,8)(9,10,12).
const A5Generators& generators_a5();

struct A5Check {
  bool relations_hold;    // a^5 = b^3 = (ab)^2 = 1
  std::size_t order;      // |<a, b>|
  std::string product;    // compose(a, b) without fixed points
};

A5Check verify_a5();

// Letters a, b and their inverses A, B. Words read left to right: "ab" is
// compose(a, b), a acting first. Empty word: identity.
// Throws BadWord.
Permutation eval_word(std::string_view word);

Triple act(const Permutation& g, const Triple& t);
Triple act(std::string_view word, const Triple& t);

class SubgroupSpec {
 public:
  // Throws BadWord (an empty list is not allowed; the empty word is).
  explicit SubgroupSpec(std::vector<std::string> words);
  // Comma separated words, e.g. "a", "ab" or "a,b".
  static SubgroupSpec parse(std::string_view text);

  const std::vector<std::string>& words() const noexcept { return words_; }
  std::vector<Permutation> generators() const;
  std::string to_string() const;

 private:
  std::vector<std::string> words_;
};

// All 220 triples in ascending order; a triple's position is its point label
// minus one when the group acts on triples.
const std::vector<Triple>& all_triples();

// Orbit of t, ascending.
std::vector<Triple> orbit_triples(const SubgroupSpec& sub, const Triple& t);
// Orbits of the whole group <a, b> on all 220 triples, ordered by smallest member.
std::vector<std::vector<Triple>> a5_triple_orbits();

struct CurveData {
  Cubic cubic;
  cplx discriminant;  // prod_{i<j} (e_i - e_j)^2
};

CurveData curve_from_triple(const Triple& t, const LabeledRoots& roots);
cplx discriminant(const Cubic& c);
// 1728 * 4A^3 / (4A^3 + 27B^2) for the depressed form x^3 + A x + B.
cplx j_invariant(const Cubic& c);
cplx j_invariant(const Triple& t, const LabeledRoots& roots);

struct OrbitEntry {
  Triple triple;
  MonodromyPair pair;
  DessinInvariants invariants;
};

struct OrbitReport {
  std::string subgroup;
  Triple base;
  std::vector<OrbitEntry> entries;               // in orbit order
  std::vector<std::vector<Triple>> iso_classes;  // equal canonical forms
  bool shared_passport;
  bool shared_genus;
};

OrbitReport orbit_dessins(const SubgroupSpec& sub, const Triple& t,
                          const TrackingConfig& cfg = {});

}  // namespace belyi
