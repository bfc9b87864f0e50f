#include "belyi/galois.hpp"

#include <algorithm>

#include "belyi/error.hpp"

namespace belyi {

const A5Generators& generators_a5() {
  static const A5Generators g{Permutation::parse("(2,3,4,5,6)(7,8,9,10,11)", kRootCount),
                              Permutation::parse("(1,2,3)(4,6,7)(5,11,8)(9,10,12)", kRootCount)};
  return g;
}

A5Check verify_a5() {
  const auto& [a, b] = generators_a5();
  const bool rel = power(a, 5).is_identity() && power(b, 3).is_identity() &&
                   power(compose(a, b), 2).is_identity();
  const std::vector<Permutation> gens{a, b};
  return {rel, group_order(gens, 1000).value_or(0), to_cycle_string(compose(a, b), false)};
}

Permutation eval_word(std::string_view word) {
  const auto& [a, b] = generators_a5();
  const Permutation ai = inverse(a);
  const Permutation bi = inverse(b);
  Permutation result = Permutation::identity(kRootCount);
  for (auto it = word.begin(); it != word.end(); ++it) {
    const Permutation* letter = nullptr;
    switch (*it) {
      case 'a': letter = &a; break;
      case 'b': letter = &b; break;
      case 'A': letter = &ai; break;
      case 'B': letter = &bi; break;
      default:
        throw Error(ErrorCode::BadWord,
                    "word letter '" + std::string(1, *it) + "' is not one of a, b, A, B");
    }
    result = compose(result, *letter);
  }
  return result;
}

Triple act(const Permutation& g, const Triple& t) {
  if (g.degree() != kRootCount)
    throw Error(ErrorCode::DegreeMismatch, "triples are acted on by degree-12 permutations");
  return Triple(static_cast<int>(g(t.i())), static_cast<int>(g(t.j())),
                static_cast<int>(g(t.k())));
}

Triple act(std::string_view word, const Triple& t) { return act(eval_word(word), t); }

SubgroupSpec::SubgroupSpec(std::vector<std::string> words) : words_(std::move(words)) {
  if (words_.empty()) throw Error(ErrorCode::BadWord, "subgroup needs at least one generator word");
  for (const auto& w : words_) eval_word(w);
}

SubgroupSpec SubgroupSpec::parse(std::string_view text) {
  std::vector<std::string> words;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      words.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  words.push_back(cur);
  return SubgroupSpec(std::move(words));
}

std::vector<Permutation> SubgroupSpec::generators() const {
  std::vector<Permutation> gens;
  gens.reserve(words_.size());
  for (const auto& w : words_) gens.push_back(eval_word(w));
  return gens;
}

std::string SubgroupSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) s += ',';
    s += words_[i];
  }
  return s;
}

const std::vector<Triple>& all_triples() {
  static const std::vector<Triple> triples = [] {
    std::vector<Triple> v;
    for (int i = 1; i <= kRootCount; ++i)
      for (int j = i + 1; j <= kRootCount; ++j)
        for (int k = j + 1; k <= kRootCount; ++k) v.emplace_back(i, j, k);
    return v;
  }();
  return triples;
}

namespace {

Point triple_point(const Triple& t) {
  const auto& all = all_triples();
  return static_cast<Point>(std::lower_bound(all.begin(), all.end(), t) - all.begin() + 1);
}

// Induced permutation of the 220 triples.
Permutation on_triples(const Permutation& g) {
  const auto& all = all_triples();
  std::vector<Point> img;
  img.reserve(all.size());
  for (const auto& t : all) img.push_back(triple_point(act(g, t)));
  return Permutation(std::move(img));
}

std::vector<Triple> orbit_under(const std::vector<Permutation>& gens, const Triple& t) {
  std::vector<Permutation> induced;
  for (const auto& g : gens) induced.push_back(on_triples(g));
  std::vector<Triple> out;
  for (Point p : orbit(induced, triple_point(t))) out.push_back(all_triples()[p - 1]);
  return out;
}

}  // namespace

std::vector<Triple> orbit_triples(const SubgroupSpec& sub, const Triple& t) {
  return orbit_under(sub.generators(), t);
}

std::vector<std::vector<Triple>> a5_triple_orbits() {
  const auto& [a, b] = generators_a5();
  const std::vector<Permutation> gens{a, b};
  std::vector<bool> seen(all_triples().size(), false);
  std::vector<std::vector<Triple>> orbits;
  for (const auto& t : all_triples()) {
    if (seen[triple_point(t) - 1]) continue;
    auto o = orbit_under(gens, t);
    for (const auto& u : o) seen[triple_point(u) - 1] = true;
    orbits.push_back(std::move(o));
  }
  return orbits;
}

cplx discriminant(const Cubic& c) {
  const auto& e = c.roots;
  const cplx d = (e[0] - e[1]) * (e[0] - e[2]) * (e[1] - e[2]);
  return d * d;
}

CurveData curve_from_triple(const Triple& t, const LabeledRoots& roots) {
  Cubic c = cubic_for(t, roots);
  const cplx d = discriminant(c);
  return {c, d};
}

cplx j_invariant(const Cubic& c) {
  const cplx A = c.a1 - c.a2 * c.a2 / 3.0;
  const cplx B = 2.0 * c.a2 * c.a2 * c.a2 / 27.0 - c.a2 * c.a1 / 3.0 + c.a0;
  const cplx fourA3 = 4.0 * A * A * A;
  return 1728.0 * fourA3 / (fourA3 + 27.0 * B * B);
}

cplx j_invariant(const Triple& t, const LabeledRoots& roots) {
  return j_invariant(cubic_for(t, roots));
}

OrbitReport orbit_dessins(const SubgroupSpec& sub, const Triple& t, const TrackingConfig& cfg) {
  OrbitReport rep{sub.to_string(), t, {}, {}, true, true};
  // Base triple first, then the rest in ascending order.
  std::vector<Triple> orbit = orbit_triples(sub, t);
  std::stable_partition(orbit.begin(), orbit.end(), [&](const Triple& u) { return u == t; });

  std::vector<Constellation> canon;
  for (const auto& u : orbit) {
    MonodromyPair pair = monodromy(MapExpr::full_chain(u), cfg);
    Constellation c(pair.g0, pair.g1);
    DessinInvariants inv = invariants(c);
    Constellation cf = canonical_form(c);
    auto it = std::find(canon.begin(), canon.end(), cf);
    if (it == canon.end()) {
      canon.push_back(std::move(cf));
      rep.iso_classes.push_back({u});
    } else {
      rep.iso_classes[static_cast<std::size_t>(it - canon.begin())].push_back(u);
    }
    if (!rep.entries.empty()) {
      rep.shared_passport = rep.shared_passport && inv.passport == rep.entries.front().invariants.passport;
      rep.shared_genus = rep.shared_genus && inv.genus == rep.entries.front().invariants.genus;
    }
    rep.entries.push_back({u, std::move(pair), std::move(inv)});
  }
  return rep;
}

}  // namespace belyi
