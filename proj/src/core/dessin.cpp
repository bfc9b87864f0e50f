#include "belyi/dessin.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "belyi/error.hpp"

namespace belyi {

Constellation::Constellation(Permutation g0, Permutation g1)
    : g0_(std::move(g0)), g1_(std::move(g1)) {
  if (g0_.degree() != g1_.degree())
    throw Error(ErrorCode::DegreeMismatch, "constellation generators differ in degree");
  const std::array<Permutation, 2> gens{g0_, g1_};
  transitive_ = is_transitive(gens);
}

Permutation Constellation::ginf() const { return inverse(compose(g0_, g1_)); }

std::vector<Cycle> faces(const Constellation& c) { return cycle_decomposition(c.ginf()); }

int genus(const Constellation& c) {
  if (!c.transitive()) throw Error(ErrorCode::NotConnected, "constellation is not transitive");
  const auto n = static_cast<long long>(c.degree());
  const auto chi = static_cast<long long>(cycle_count(c.g0()) + cycle_count(c.g1()) +
                                          cycle_count(c.ginf())) - n;
  return static_cast<int>((2 - chi) / 2);
}

Passport passport(const Constellation& c) {
  return {cycle_type(c.g0()), cycle_type(c.g1()), cycle_type(c.ginf())};
}

bool is_clean(const Constellation& c) {
  for (const auto& cyc : cycle_decomposition(c.g1()))
    if (cyc.size() != 2) return false;
  return true;
}

CycleType bouquet_profile(const Constellation& c) {
  if (!is_clean(c))
    throw Error(ErrorCode::CleannessRequired, "bouquet profile needs every g1 cycle of length 2");
  return cycle_type(c.g0());
}

namespace {

// Local valency signature used to prune candidate images.
std::vector<std::pair<std::size_t, std::size_t>> valencies(const Constellation& c) {
  std::vector<std::pair<std::size_t, std::size_t>> v(c.degree() + 1);
  for (const auto& cyc : cycle_decomposition(c.g0()))
    for (Point x : cyc) v[x].first = cyc.size();
  for (const auto& cyc : cycle_decomposition(c.g1()))
    for (Point x : cyc) v[x].second = cyc.size();
  return v;
}

// Extends h from root -> image along g0, g1. On failure every assignment made
// here is undone.
bool propagate(const Constellation& a, const Constellation& b, Point root, Point image,
               std::vector<Point>& h, std::vector<bool>& used) {
  std::vector<Point> assigned{root};
  h[root] = image;
  used[image] = true;
  bool ok = true;
  for (std::size_t head = 0; head < assigned.size() && ok; ++head) {
    const Point x = assigned[head];
    for (int which = 0; which < 2 && ok; ++which) {
      const Permutation& ga = which == 0 ? a.g0() : a.g1();
      const Permutation& gb = which == 0 ? b.g0() : b.g1();
      const Point xn = ga.images()[x - 1];
      const Point yn = gb.images()[h[x] - 1];
      if (h[xn] == 0) {
        if (used[yn]) {
          ok = false;
        } else {
          h[xn] = yn;
          used[yn] = true;
          assigned.push_back(xn);
        }
      } else if (h[xn] != yn) {
        ok = false;
      }
    }
  }
  if (!ok) {
    for (Point x : assigned) {
      used[h[x]] = false;
      h[x] = 0;
    }
  }
  return ok;
}

}  // namespace

std::optional<Permutation> isomorphism(const Constellation& c1, const Constellation& c2) {
  const std::size_t n = c1.degree();
  if (n != c2.degree() || c1.transitive() != c2.transitive()) return std::nullopt;
  if (passport(c1) != passport(c2)) return std::nullopt;
  const auto v1 = valencies(c1);
  const auto v2 = valencies(c2);
  std::vector<Point> h(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  // Components are matched greedily: any unused isomorphic component will do.
  for (Point root = 1; root <= n; ++root) {
    if (h[root] != 0) continue;
    bool matched = false;
    for (Point y = 1; y <= n && !matched; ++y) {
      if (used[y] || v1[root] != v2[y]) continue;
      matched = propagate(c1, c2, root, y, h, used);
    }
    if (!matched) return std::nullopt;
  }
  return Permutation(std::vector<Point>(h.begin() + 1, h.end()));
}

bool isomorphic(const Constellation& c1, const Constellation& c2) {
  return isomorphism(c1, c2).has_value();
}

Constellation canonical_form(const Constellation& c) {
  if (!c.transitive()) throw Error(ErrorCode::NotConnected, "canonical form needs a transitive pair");
  const std::size_t n = c.degree();
  const auto g0 = c.g0().images();
  const auto g1 = c.g1().images();
  std::vector<Point> best;
  std::vector<Point> label(n + 1);
  std::vector<Point> order;
  std::vector<Point> table(2 * n);
  for (Point root = 1; root <= n; ++root) {
    std::fill(label.begin(), label.end(), 0);
    order.clear();
    order.push_back(root);
    label[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Point x = order[head];
      for (Point y : {g0[x - 1], g1[x - 1]}) {
        if (label[y] == 0) {
          label[y] = static_cast<Point>(order.size() + 1);
          order.push_back(y);
        }
      }
    }
    for (Point x = 1; x <= n; ++x) {
      table[label[x] - 1] = label[g0[x - 1]];
      table[n + label[x] - 1] = label[g1[x - 1]];
    }
    if (best.empty() || table < best) best = table;
  }
  return Constellation(Permutation(std::vector<Point>(best.begin(), best.begin() + n)),
                       Permutation(std::vector<Point>(best.begin() + n, best.end())));
}

std::string canonical_hash(const Constellation& c) {
  const Constellation cf = canonical_form(c);
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(cf.degree());
  for (Point x : cf.g0().images()) mix(x);
  for (Point x : cf.g1().images()) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DessinInvariants invariants(const Constellation& c) {
  DessinInvariants d;
  d.degree = c.degree();
  d.genus = genus(c);
  d.passport = passport(c);
  d.black_count = d.passport.black.parts.size();
  d.white_count = d.passport.white.parts.size();
  d.face_count = d.passport.faces.parts.size();
  d.clean = is_clean(c);
  if (d.clean) d.bouquets = d.passport.black;
  d.canonical_hash = canonical_hash(c);
  return d;
}

}  // namespace belyi
