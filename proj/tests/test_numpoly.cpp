#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "belyi/error.hpp"
#include "belyi/numpoly.hpp"
#include "oracle/root_oracle.hpp"

using namespace belyi;

namespace {

bool contains_near(const std::vector<cplx>& v, cplx z, double tol) {
  return std::any_of(v.begin(), v.end(), [&](cplx w) { return std::abs(w - z) < tol; });
}

}  // namespace

TEST_CASE("evaluation and derivative of f") {
  const ComplexPoly& f = f_poly();
  CHECK(f.degree() == 12);
  CHECK(std::abs(eval(f, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(eval(f, 1.0) - 10.0 / 11.0) < 1e-15);
  CHECK(std::abs(eval(derivative(f), 1.0)) < 1e-13);
  cplx v, d;
  f.eval_with_derivative({0.3, 0.2}, v, d);
  CHECK(std::abs(v - f({0.3, 0.2})) < 1e-15);
  CHECK(std::abs(d - derivative(f)({0.3, 0.2})) < 1e-14);
}

TEST_CASE("polynomial arithmetic") {
  const ComplexPoly a({-1.0, 1.0}), b({1.0, 1.0});
  const ComplexPoly prod = a * b;  // x^2 - 1
  CHECK(prod.degree() == 2);
  CHECK(std::abs(prod.coefficients()[0] + 1.0) < 1e-15);
  CHECK(std::abs(prod.coefficients()[1]) < 1e-15);
  CHECK((prod - prod).is_zero());
  const ComplexPoly q = deflate(ComplexPoly({1.0, -3.0, 3.0, -1.0}), 1.0, 3);  // (1-x)^3
  CHECK(q.degree() == 0);
  CHECK(std::abs(q.coefficients()[0] + 1.0) < 1e-14);
  CHECK(ComplexPoly({1.0, 0.0, 0.0}).degree() == 0);
}

TEST_CASE("roots of small polynomials") {
  const auto r1 = roots(ComplexPoly({-1.0, 0.0, 1.0}));
  REQUIRE(r1.size() == 2);
  CHECK(contains_near(r1, 1.0, 1e-12));
  CHECK(contains_near(r1, -1.0, 1e-12));
  const auto r2 = roots(ComplexPoly({1.0, -8.0, 8.0}));
  CHECK(contains_near(r2, (2 + std::sqrt(2.0)) / 4, 1e-12));
  CHECK(contains_near(r2, (2 - std::sqrt(2.0)) / 4, 1e-12));
  CHECK_THROWS_AS(roots(ComplexPoly({1.0})), Error);
  try {
    roots(ComplexPoly({0.0, -5e-9, 1.0}));  // roots 0 and 5e-9
    FAIL("cluster accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClusteredRoots);
  }
  // a double root splits to about sqrt(eps); either refusal or two nearby roots is fine
  try {
    const auto d = roots(ComplexPoly({1.0, -2.0, 1.0}));
    CHECK(std::abs(d[0] - 1.0) < 1e-7);
    CHECK(std::abs(d[1] - 1.0) < 1e-7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClusteredRoots);
  }
  RootOptions tight;
  tight.max_iterations = 1;
  CHECK_THROWS_AS(roots(f_poly(), tight), Error);
}

TEST_CASE("roots are deterministic for a fixed angle offset") {
  const auto a = roots(f_poly());
  const auto b = roots(f_poly());
  CHECK(a == b);
}

TEST_CASE("labelled roots of f") {
  const LabeledRoots r = roots_of_f();
  REQUIRE(r.size() == 12);
  cplx sum = 0, prod = 1;
  double prev_arg = -1;
  for (std::size_t i = 1; i <= 12; ++i) {
    CHECK(r.residuals[i - 1] < 1e-10);
    sum += r.r(i);
    prod *= r.r(i);
    double arg = std::arg(r.r(i));
    if (arg < 0) arg += 2 * std::numbers::pi;
    CHECK(arg > prev_arg);
    prev_arg = arg;
    CHECK(std::abs(std::abs(r.r(i)) - 1.0) < 0.2);
  }
  CHECK(std::abs(sum - 12.0 / 11.0) < 1e-9);
  CHECK(std::abs(prod - 1.0) < 1e-9);
  CHECK(r.min_argument_gap() > 1e-3);
  // r_1 sits in the upper right quadrant, r_12 in the lower right
  CHECK(r.r(1).real() > 0);
  CHECK(r.r(1).imag() > 0);
  CHECK(r.r(12).real() > 0);
  CHECK(r.r(12).imag() < 0);
  for (std::size_t i = 1; i <= 12; ++i)
    for (std::size_t j = i + 1; j <= 12; ++j) CHECK(std::abs(r.r(i) - r.r(j)) > 1e-6);
}

TEST_CASE("labelled roots agree with 200-digit refinement") {
  const LabeledRoots r = roots_of_f();
  for (std::size_t i = 1; i <= 12; ++i) {
    const oracle::Refined ref = oracle::refine(r.r(i));
    REQUIRE(ref.converged);
    CHECK(oracle::abs_f(ref.root) < 1e-150);
    CHECK(std::abs(oracle::to_double(ref.root) - r.r(i)) < 1e-13);
  }
}

TEST_CASE("extended precision check does not increase the residual") {
  const LabeledRoots r = roots_of_f();
  for (cplx z : r.roots) {
    const RootCheck c = extended_precision_check(z);
    CHECK(c.residual_before < 1e-10);
    CHECK(c.residual_after <= c.residual_before + 1e-18);
  }
}

TEST_CASE("integral model roots are 11 r_i") {
  const ComplexPoly& F = f_integral_model();
  CHECK(std::abs(F.coefficients()[0] - std::pow(11.0, 12)) < 1);
  CHECK(std::abs(F.coefficients()[11] + 12.0) < 1e-9);
  const auto big = roots(F);
  const LabeledRoots r = roots_of_f();
  REQUIRE(big.size() == 12);
  for (cplx z : r.roots) CHECK(contains_near(big, 11.0 * z, 1e-8));
}

TEST_CASE("a different angle offset finds the same labelled roots") {
  RootOptions o;
  o.angle_offset = 1.1;
  const LabeledRoots a = roots_of_f(), b = roots_of_f(o);
  for (std::size_t i = 1; i <= 12; ++i) CHECK(std::abs(a.r(i) - b.r(i)) < 1e-12);
}
