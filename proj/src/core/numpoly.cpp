#include "belyi/numpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "belyi/error.hpp"

namespace belyi {

ComplexPoly::ComplexPoly(std::vector<cplx> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

std::size_t ComplexPoly::degree() const noexcept {
  return coeffs_.empty() ? 0 : coeffs_.size() - 1;
}

double ComplexPoly::max_coefficient_magnitude() const noexcept {
  double m = 0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx ComplexPoly::operator()(cplx x) const noexcept {
  cplx v{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
  return v;
}

void ComplexPoly::eval_with_derivative(cplx x, cplx& value, cplx& deriv) const noexcept {
  value = {};
  deriv = {};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    deriv = deriv * x + value;
    value = value * x + *it;
  }
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ComplexPoly(std::move(out));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
  std::vector<cplx> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return ComplexPoly(std::move(out));
}

cplx eval(const ComplexPoly& p, cplx x) noexcept { return p(x); }

ComplexPoly derivative(const ComplexPoly& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<cplx> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
  return ComplexPoly(std::move(d));
}

ComplexPoly deflate(const ComplexPoly& p, cplx c, std::size_t multiplicity) {
  std::vector<cplx> coeffs = p.coefficients();
  for (std::size_t m = 0; m < multiplicity && coeffs.size() > 1; ++m) {
    // Synthetic division from the top; the constant slot ends up as remainder.
    std::vector<cplx> q(coeffs.size() - 1);
    cplx carry{};
    for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
      carry = carry * c + coeffs[k];
      q[k - 1] = carry;
    }
    coeffs = std::move(q);
  }
  return ComplexPoly(std::move(coeffs));
}

namespace {

double residual_scale(const ComplexPoly& p, cplx z) {
  double s = 0;
  double zp = 1;
  const double az = std::abs(z);
  for (const auto& c : p.coefficients()) {
    s += std::abs(c) * zp;
    zp *= az;
  }
  return std::max(s, p.max_coefficient_magnitude());
}

void newton_polish(const ComplexPoly& p, cplx& z) {
  for (int it = 0; it < 3; ++it) {
    cplx v, d;
    p.eval_with_derivative(z, v, d);
    if (d == cplx{}) return;
    cplx next = z - v / d;
    if (!(std::abs(p(next)) < std::abs(v))) return;
    z = next;
  }
}

}  // namespace

std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& options) {
  const std::size_t n = p.degree();
  if (p.is_zero() || n == 0) throw Error(ErrorCode::InvalidArgument, "roots: degree must be >= 1");
  const auto& c = p.coefficients();
  if (n == 1) return {-c[0] / c[1]};

  double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i] / c[n]));
  radius += 1;

  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = options.angle_offset + 2 * std::numbers::pi * static_cast<double>(k) / n;
    z[k] = std::polar(radius, angle);
  }

  bool converged = false;
  for (int iter = 0; iter < options.max_iterations && !converged; ++iter) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      cplx v, d;
      p.eval_with_derivative(z[k], v, d);
      if (v == cplx{}) continue;
      cplx sum{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cplx correction;
      if (d == cplx{}) {
        correction = cplx{1e-3 * (1 + std::abs(z[k])), 0};  // nudge off a critical point
      } else {
        cplx ratio = v / d;
        cplx denom = 1.0 - ratio * sum;
        correction = denom == cplx{} ? ratio : ratio / denom;
      }
      z[k] -= correction;
      if (std::abs(correction) > options.tol * (1 + std::abs(z[k]))) converged = false;
    }
  }
  if (!converged)
    throw Error(ErrorCode::NonConverged, "Aberth iteration did not converge in " +
                                             std::to_string(options.max_iterations) +
                                             " iterations");

  for (auto& root : z) {
    newton_polish(p, root);
    if (std::abs(p(root)) > options.residual_tol * residual_scale(p, root))
      throw Error(ErrorCode::NonConverged, "root residual above tolerance");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) < 1e-8)
        throw Error(ErrorCode::ClusteredRoots, "two roots closer than 1e-8");
  return z;
}

const ComplexPoly& f_poly() {
  static const ComplexPoly f = [] {
    std::vector<cplx> c(13);
    c[0] = 1.0;
    c[11] = -12.0 / 11.0;
    c[12] = 1.0;
    return ComplexPoly(std::move(c));
  }();
  return f;
}

const ComplexPoly& f_integral_model() {
  static const ComplexPoly F = [] {
    std::vector<cplx> c(13);
    c[0] = std::pow(11.0, 12);  // 3138428376721, exact in double
    c[11] = -12.0;
    c[12] = 1.0;
    return ComplexPoly(std::move(c));
  }();
  return F;
}

namespace {

double principal_argument(cplx z) {
  double a = std::arg(z);
  return a < 0 ? a + 2 * std::numbers::pi : a;
}

}  // namespace

double LabeledRoots::min_argument_gap() const {
  if (roots.size() < 2) return 2 * std::numbers::pi;
  std::vector<double> args;
  for (const auto& r : roots) args.push_back(principal_argument(r));
  std::sort(args.begin(), args.end());
  double gap = args.front() + 2 * std::numbers::pi - args.back();
  for (std::size_t i = 1; i < args.size(); ++i) gap = std::min(gap, args[i] - args[i - 1]);
  return gap;
}

LabeledRoots roots_of_f(const RootOptions& options) {
  std::vector<cplx> z = roots(f_poly(), options);
  std::sort(z.begin(), z.end(),
            [](cplx a, cplx b) { return principal_argument(a) < principal_argument(b); });
  LabeledRoots out;
  out.roots = std::move(z);
  for (const auto& r : out.roots) out.residuals.push_back(std::abs(f_poly()(r)));
  for (double res : out.residuals)
    if (!(res < 1e-10)) throw Error(ErrorCode::NonConverged, "root of f with residual >= 1e-10");
  return out;
}

RootCheck extended_precision_check(cplx r) {
  using lcplx = std::complex<long double>;
  auto f = [](lcplx x, lcplx& d) {
    lcplx x10 = std::pow(x, 10);
    lcplx x11 = x10 * x;
    d = 12.0L * x11 - 12.0L * x10;
    return x11 * x - (12.0L / 11.0L) * x11 + 1.0L;
  };
  lcplx x(r.real(), r.imag());
  lcplx d;
  lcplx v = f(x, d);
  RootCheck check{static_cast<double>(std::abs(v)), 0};
  x -= v / d;
  check.residual_after = static_cast<double>(std::abs(f(x, d)));
  return check;
}

}  // namespace belyi
