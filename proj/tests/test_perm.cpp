#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "belyi/error.hpp"
#include "belyi/perm.hpp"

using namespace belyi;

namespace {

Permutation P(const char* s, std::size_t n = 0) { return Permutation::parse(s, n); }

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{1});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("image table must be a bijection") {
  CHECK(code_of([] { Permutation({}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Permutation({1, 1}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { Permutation({1, 3}); }) == ErrorCode::InvalidArgument);
  CHECK(Permutation({2, 1})(1) == 2);
  CHECK(code_of([] { Permutation({2, 1})(3); }) == ErrorCode::PointOutOfRange);
}

TEST_CASE("cycle notation parser") {
  const Permutation p = P("(1,2,3)(4,5)");
  CHECK(p.degree() == 5);
  CHECK(p(1) == 2);
  CHECK(p(3) == 1);
  CHECK(p(5) == 4);
  CHECK(P(" ( 1 , 2 ) ( 3 ) ", 4) == P("(1,2)", 4));
  CHECK(P("()", 3).is_identity());
  CHECK(P("(1)(2)").is_identity());
  CHECK(code_of([] { P("()"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { P("(1,2)(2,3)"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { P("(1,5)", 4); }) == ErrorCode::PointOutOfRange);
  CHECK(code_of([] { P("(0,1)"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { P("(1,2"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { P("1,2)"); }) == ErrorCode::Syntax);
  try {
    P("(1,,2)");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("printing round-trips") {
  const Permutation p = P("(1,4)(2,6,3)", 7);
  CHECK(to_cycle_string(p) == "(1,4)(2,6,3)(5)(7)");
  CHECK(to_cycle_string(p, false) == "(1,4)(2,6,3)");
  CHECK(P(to_cycle_string(p).c_str()) == p);
  CHECK(to_cycle_string(Permutation::identity(2)) == "(1)(2)");
  CHECK(to_cycle_string(Permutation::identity(2), false) == "()");
}

TEST_CASE("compose applies its left factor first") {
  const Permutation p = P("(1,2)", 3), q = P("(2,3)", 3);
  for (Point x = 1; x <= 3; ++x) CHECK(compose(p, q)(x) == q(p(x)));
  CHECK(compose(Permutation::identity(2), P("(1,2)")) == P("(1,2)"));
  CHECK(compose(P("(1,2)"), P("(1,2)")).is_identity());
  CHECK(code_of([] { compose(P("(1,2)"), P("(1,2,3)")); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("inverse, power, conjugate") {
  CHECK(inverse(Permutation::identity(3)).is_identity());
  CHECK(inverse(P("(1,2)")) == P("(1,2)"));
  CHECK(inverse(P("(1,2,3,4,5)")) == P("(1,5,4,3,2)"));
  const Permutation c = P("(1,2,3,4,5)");
  CHECK(power(c, 5).is_identity());
  CHECK(power(c, -1) == inverse(c));
  CHECK(power(c, 7) == power(c, 2));
  CHECK(power(c, 0).is_identity());
  // conjugate relabels: h maps the cycle (1,2,3,4,5) to (h1,...,h5)
  const Permutation h = P("(1,3)(2,5)", 5);
  CHECK(conjugate(c, h) == P("(3,5,1,4,2)"));
}

TEST_CASE("cycle decomposition and cycle type") {
  const Permutation g0 = P("(1,2,3,4,5,6,7,8,9,10)(11,21)", 22);
  const Permutation g1 =
      P("(1,11)(2,12)(3,13)(4,14)(5,15)(6,16)(7,17)(8,18)(9,19)(10,20)(21,22)");
  CHECK(cycle_type(g0).parts == std::vector<std::size_t>{10, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(cycle_type(g0).to_string() == "10 2 1^10");
  CHECK(cycle_type(g1).to_string() == "2^11");
  CHECK(cycle_type(g1).count(2) == 11);
  CHECK(cycle_type(Permutation::identity(5)).to_string() == "1^5");
  CHECK(cycle_count(g0) == 12);
  const auto cycles = cycle_decomposition(P("(2,5)(3,4,6)", 6));
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0] == Cycle{1});
  CHECK(cycles[1] == Cycle{2, 5});
  CHECK(cycles[2] == Cycle{3, 4, 6});
}

TEST_CASE("orbits and transitivity") {
  const std::vector<Permutation> id{Permutation::identity(5)};
  CHECK(orbit(id, 3) == std::vector<Point>{3});
  const std::vector<Permutation> c{P("(1,2,3,4,5)")};
  CHECK(orbit(c, 1) == std::vector<Point>{1, 2, 3, 4, 5});
  const std::vector<Permutation> a{P("(2,3,4,5,6)(7,8,9,10,11)", 12)};
  CHECK(orbit(a, 7) == std::vector<Point>{7, 8, 9, 10, 11});
  CHECK(code_of([&] { orbit(a, 13); }) == ErrorCode::PointOutOfRange);

  const std::vector<Permutation> t{P("(1,2)")};
  CHECK(is_transitive(t));
  const std::vector<Permutation> i2{Permutation::identity(2)};
  CHECK_FALSE(is_transitive(i2));
  const std::vector<Permutation> psi{
      P("(1,2,3,4,5,6,7,8,9,10)(11,21)", 22),
      P("(1,11)(2,12)(3,13)(4,14)(5,15)(6,16)(7,17)(8,18)(9,19)(10,20)(21,22)")};
  CHECK(is_transitive(psi));
}

TEST_CASE("group order by closure") {
  const std::vector<Permutation> id{Permutation::identity(5)};
  CHECK(group_order(id, 100) == 1);
  const std::vector<Permutation> s3{P("(1,2)", 3), P("(1,2,3)")};
  CHECK(group_order(s3, 10) == 6);
  const std::vector<Permutation> a5{P("(2,3,4,5,6)(7,8,9,10,11)", 12),
                                    P("(1,2,3)(4,6,7)(5,11,8)(9,10,12)")};
  CHECK(group_order(a5, 100) == 60);
  CHECK_FALSE(group_order(a5, 59).has_value());
  const std::vector<Permutation> s12{P("(1,2)", 12), P("(1,2,3,4,5,6,7,8,9,10,11,12)")};
  CHECK_FALSE(group_order(s12).has_value());
}

TEST_CASE("randomized algebra laws") {
  std::mt19937 rng(20240611);
  int cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const Permutation p = random_perm(n, rng), q = random_perm(n, rng), r = random_perm(n, rng);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(cycle_type(p).degree() == n);
    CHECK(cycle_type(conjugate(p, q)) == cycle_type(p));
    CHECK(cycle_type(compose(q, compose(p, inverse(q)))) == cycle_type(p));
    // orbits over all base points partition {1..n}
    const std::vector<Permutation> gens{p, q};
    std::vector<int> hits(n + 1, 0);
    std::vector<bool> done(n + 1, false);
    for (Point x = 1; x <= n; ++x) {
      if (done[x]) continue;
      for (Point y : orbit(gens, x)) {
        ++hits[y];
        done[y] = true;
      }
    }
    CHECK(std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; }));
    ++cases;
  }
  CHECK(cases == 300);
}
