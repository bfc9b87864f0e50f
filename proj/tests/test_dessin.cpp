#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "belyi/dessin.hpp"
#include "belyi/error.hpp"

using namespace belyi;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{1});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

Constellation conjugated(const Constellation& c, const Permutation& h) {
  return {conjugate(c.g0(), h), conjugate(c.g1(), h)};
}

Constellation psi() {
  std::string g1;
  for (int i = 1; i <= 10; ++i) g1 += "(" + std::to_string(i) + "," + std::to_string(i + 10) + ")";
  g1 += "(21,22)";
  return {Permutation::parse("(1,2,3,4,5,6,7,8,9,10)(11,21)", 22), Permutation::parse(g1, 22)};
}

// Transitive random pair: retries until the generated group is transitive.
Constellation random_transitive(std::size_t n, std::mt19937& rng) {
  for (;;) {
    Constellation c(random_perm(n, rng), random_perm(n, rng));
    if (c.transitive()) return c;
  }
}

}  // namespace

TEST_CASE("b(1,1) dessin") {
  const Constellation c(Permutation::identity(2), Permutation::parse("(1,2)"));
  CHECK(faces(c).size() == 1);
  CHECK(genus(c) == 0);
  const Passport p = passport(c);
  CHECK(p.black.parts == std::vector<std::size_t>{1, 1});
  CHECK(p.white.parts == std::vector<std::size_t>{2});
  CHECK(p.faces.parts == std::vector<std::size_t>{2});
  CHECK(is_clean(c));
  CHECK(bouquet_profile(c).parts == std::vector<std::size_t>{1, 1});
}

TEST_CASE("pair with trivial face permutation") {
  const Constellation c(Permutation::parse("(1,2)"), Permutation::parse("(1,2)"));
  CHECK(c.ginf().is_identity());
  CHECK(faces(c).size() == 2);
  CHECK(genus(c) == 0);
}

TEST_CASE("psi invariants") {
  const Constellation c = psi();
  const DessinInvariants inv = invariants(c);
  CHECK(inv.degree == 22);
  CHECK(inv.genus == 0);
  CHECK(inv.black_count == 12);
  CHECK(inv.white_count == 11);
  CHECK(inv.face_count == 1);
  CHECK(inv.clean);
  REQUIRE(inv.bouquets);
  CHECK(inv.bouquets->to_string() == "10 2 1^10");
  CHECK(inv.canonical_hash.size() == 16);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Constellation(Permutation::identity(2), Permutation::identity(3)), Error);
  const Constellation split(Permutation::parse("(1,2)(3,4)"), Permutation::parse("(1,2)", 4));
  CHECK_FALSE(split.transitive());
  try {
    genus(split);
    FAIL("genus of a disconnected pair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnected);
  }
  CHECK_THROWS_AS(canonical_form(split), Error);
  const Constellation dirty(Permutation::parse("(1,2,3)"), Permutation::parse("(1,2)", 3));
  CHECK_FALSE(is_clean(dirty));
  try {
    bouquet_profile(dirty);
    FAIL("bouquets of an unclean dessin");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CleannessRequired);
  }
}

TEST_CASE("isomorphism witnesses") {
  const Constellation c = psi();
  const auto self = isomorphism(c, c);
  REQUIRE(self);
  CHECK(self->is_identity());

  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Permutation h = random_perm(22, rng);
    const Constellation d = conjugated(c, h);
    const auto w = isomorphism(c, d);
    REQUIRE(w);
    CHECK(conjugate(c.g0(), *w) == d.g0());
    CHECK(conjugate(c.g1(), *w) == d.g1());
  }
  // same passport, different dessin: swap the roles of the two 2-cycles' ends
  const Constellation other(Permutation::parse("(1,2,3,4,5,6,7,8,9,10)(11,22)", 22), c.g1());
  CHECK(passport(other) == passport(c));
  CHECK(isomorphic(c, other) == (canonical_form(c) == canonical_form(other)));
  CHECK_FALSE(isomorphic(c, Constellation(Permutation::identity(2), Permutation::parse("(1,2)"))));
}

TEST_CASE("disconnected pairs match component by component") {
  const Constellation a(Permutation::parse("(1,2)(3,4,5)"), Permutation::parse("(2,3)", 5));
  const Constellation b(Permutation::parse("(1,2,3)(4,5)"), Permutation::parse("(3,4)", 5));
  CHECK(isomorphic(a, b));
}

TEST_CASE("canonical form") {
  const Constellation c = psi();
  const Constellation cf = canonical_form(c);
  CHECK(canonical_form(cf) == cf);
  CHECK(isomorphic(c, cf));
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Constellation d = conjugated(c, random_perm(22, rng));
    CHECK(canonical_form(d) == cf);
    CHECK(canonical_hash(d) == canonical_hash(c));
  }
}

TEST_CASE("randomized properties") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + rng() % 29;
    const Constellation c = random_transitive(n, rng);
    // Euler characteristic is even
    const long long chi = static_cast<long long>(cycle_count(c.g0()) + cycle_count(c.g1()) +
                                                 cycle_count(c.ginf())) - static_cast<long long>(n);
    CHECK(chi % 2 == 0);
    CHECK(genus(c) >= 0);
    CHECK(compose(compose(c.g0(), c.g1()), c.ginf()).is_identity());

    const Constellation d = conjugated(c, random_perm(n, rng));
    CHECK(isomorphic(c, d));
    CHECK(passport(c) == passport(d));
    // a second random pair: isomorphism and canonical form agree
    const Constellation e = random_transitive(n, rng);
    CHECK(isomorphic(c, e) == (canonical_form(c) == canonical_form(e)));
  }
}

TEST_CASE("clean dessins pair up their edges") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t half = 1 + rng() % 15;
    std::vector<Point> pts(2 * half);
    std::iota(pts.begin(), pts.end(), Point{1});
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<Point> img(2 * half);
    for (std::size_t k = 0; k < half; ++k) {
      img[pts[2 * k] - 1] = pts[2 * k + 1];
      img[pts[2 * k + 1] - 1] = pts[2 * k];
    }
    const Constellation c(random_perm(2 * half, rng), Permutation(img));
    CHECK(is_clean(c));
    CHECK(passport(c).white.parts == std::vector<std::size_t>(half, 2));
    CHECK(bouquet_profile(c) == cycle_type(c.g0()));
  }
}

TEST_CASE("passport survives relabelling of psi") {
  const Constellation c = psi();
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) CHECK(passport(conjugated(c, random_perm(22, rng))) == passport(c));
}
