#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "belyi/dessin.hpp"
#include "belyi/error.hpp"
#include "belyi/monodromy.hpp"

using namespace belyi;

namespace {

std::optional<ErrorCode> code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Reference generators of the psi dessin on 22 labels.
Constellation reference_psi() {
  std::string g1;
  for (int i = 1; i <= 10; ++i) g1 += "(" + std::to_string(i) + "," + std::to_string(i + 10) + ")";
  g1 += "(21,22)";
  return {Permutation::parse("(1,2,3,4,5,6,7,8,9,10)(11,21)", 22), Permutation::parse(g1, 22)};
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(TrackingConfig{}.validate());
  TrackingConfig c;
  c.newton_tol = 0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidArgument);
  c = {};
  c.min_step = 2 * c.initial_step;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidArgument);
  c = {};
  c.separation_factor = 1;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidArgument);
  c = {};
  c.max_newton_iters = 0;
  CHECK(code_of([&] { c.validate(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("loop geometry") {
  const MapExpr b = MapExpr::parse("b(1,1)");
  const LoopSpec l0 = LoopSpec::around(b, 0.0, {});
  CHECK(l0.radius == doctest::Approx(0.25));
  CHECK(std::abs(l0.entry_point() - cplx{0.25, 0}) < 1e-15);
  CHECK(std::abs(l0.at(0) - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(l0.at(1) - cplx{0.5, 0}) < 1e-12);
  CHECK(l0.length() == doctest::Approx(0.5 + 2 * std::numbers::pi * 0.25));
  // f has the branch value 10/11 close to 1
  const LoopSpec lf = LoopSpec::around(MapExpr::parse("f"), 1.0, {});
  CHECK(lf.radius == doctest::Approx(0.5 / 11));
}

TEST_CASE("fibers") {
  const Fiber f = fiber(MapExpr::parse("b(1,1)"), 0.5);
  REQUIRE(f.size() == 2);
  CHECK(std::abs(f[0].x - (2 - std::sqrt(2.0)) / 4) < 1e-14);
  CHECK(std::abs(f[1].x - (2 + std::sqrt(2.0)) / 4) < 1e-14);
  CHECK(f[0].label == 1);
  CHECK(f[1].label == 2);
  CHECK_FALSE(f[0].y.has_value());
  CHECK(fiber(MapExpr::parse("b(1,1).b(10,1)"), 0.5).size() == 22);
  const Fiber full = fiber(MapExpr::full_chain(Triple(2, 7, 11)), 0.5);
  CHECK(full.size() == 528);
  for (std::size_t i = 0; i < full.size(); ++i) {
    CHECK(full[i].label == i + 1);
    CHECK(full[i].y.has_value());
  }
  CHECK(code_of([] { fiber(MapExpr::parse("b(1,1)"), 1.0); }) == ErrorCode::NearBranch);
}

TEST_CASE("pullback multiplicities") {
  const auto one = pullback(MapExpr::parse("b(1,1)"), 1.0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].multiplicity == 2);
  CHECK(std::abs(one[0].x - 0.5) < 1e-14);

  const auto zero = pullback(MapExpr::parse("b(10,1)"), 0.0);
  std::size_t total = 0, max_mult = 0;
  for (const auto& p : zero) {
    total += p.multiplicity;
    max_mult = std::max(max_mult, p.multiplicity);
  }
  CHECK(total == 11);
  CHECK(max_mult == 10);

  // every value pulls back to degree-many points counted with multiplicity
  const MapExpr full = MapExpr::full_chain(Triple(2, 7, 11));
  for (double w : {0.0, 1.0, 0.3}) {
    std::size_t sum = 0;
    for (const auto& p : pullback(full, w)) sum += p.multiplicity;
    CHECK(sum == 528);
  }
}

TEST_CASE("b(1,1) monodromy") {
  const MonodromyPair p = monodromy(MapExpr::parse("b(1,1)"));
  CHECK(p.g0.is_identity());
  CHECK(p.g1 == Permutation::parse("(1,2)"));
  CHECK(p.ginf() == Permutation::parse("(1,2)"));
}

TEST_CASE("a loop enclosing no branch value is trivial") {
  const MapExpr e = MapExpr::parse("b(1,1).b(10,1)");
  const Fiber fib = fiber(e, 0.5);
  LoopSpec loop;
  loop.center = {0.5, 0.2};
  loop.radius = 0.05;
  CHECK(track_loop(e, loop, fib).is_identity());
}

TEST_CASE("psi matches the reference pair") {
  const MapExpr e = MapExpr::parse("b(1,1).b(10,1)");
  const MonodromyPair p = monodromy(e);
  CHECK(cycle_type(p.g0).to_string() == "10 2 1^10");
  CHECK(cycle_type(p.g1).to_string() == "2^11");
  const Constellation c(p.g0, p.g1);
  CHECK(genus(c) == 0);
  CHECK(isomorphic(c, reference_psi()));
  CHECK(track_product_loop(e) == compose(p.g0, p.g1));
  CHECK(verify_stability(e, p, {}));
}

TEST_CASE("psi after f") {
  const MapExpr e = MapExpr::parse("b(1,1).b(10,1).f");
  const MonodromyPair p = monodromy(e);
  CHECK(p.g0.degree() == 264);
  const Constellation c(p.g0, p.g1);
  CHECK(c.transitive());
  CHECK(genus(c) == 0);
  CHECK(cycle_type(p.g1).to_string() == "2^132");
  CHECK(track_product_loop(e) == compose(p.g0, p.g1));
}

TEST_CASE("non-Belyi chains are refused") {
  CHECK(code_of([] { monodromy(MapExpr::parse("f")); }) == ErrorCode::NotBelyi);
  CHECK(code_of([] { monodromy(MapExpr::parse("pi(1,2,3)")); }) == ErrorCode::NotBelyi);
  CHECK(code_of([] { track_product_loop(MapExpr::parse("f.pi(1,2,3)")); }) == ErrorCode::NotBelyi);
}

TEST_CASE("starting angle does not change the labels") {
  TrackingConfig shifted;
  shifted.root_angle_offset = 1.1;
  const MapExpr e = MapExpr::full_chain(Triple(1, 4, 5));
  const MonodromyPair a = monodromy(e);
  const MonodromyPair b = monodromy(e, shifted);
  CHECK(a.g0 == b.g0);
  CHECK(a.g1 == b.g1);
}
