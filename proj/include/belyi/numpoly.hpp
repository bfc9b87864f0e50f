#pragma once

// Complex polynomials, the simultaneous (Aberth) root finder, and the
// labelled roots of f(x) = x^12 - (12/11) x^11 + 1.

#include <complex>
#include <cstddef>
#include <vector>

namespace belyi {

using cplx = std::complex<double>;

class ComplexPoly {
 public:
  ComplexPoly() = default;
  // Ascending order: coefficients[k] multiplies x^k. Trailing zeros are trimmed.
  explicit ComplexPoly(std::vector<cplx> coefficients);

  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<cplx>& coefficients() const noexcept { return coeffs_; }
  cplx leading() const noexcept { return coeffs_.empty() ? cplx{} : coeffs_.back(); }
  double max_coefficient_magnitude() const noexcept;

  cplx operator()(cplx x) const noexcept;
  // Value and first derivative by a single Horner pass.
  void eval_with_derivative(cplx x, cplx& value, cplx& derivative) const noexcept;

  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);

 private:
  std::vector<cplx> coeffs_;
};

cplx eval(const ComplexPoly& p, cplx x) noexcept;
ComplexPoly derivative(const ComplexPoly& p);

// Quotient of p by (x - c)^multiplicity; the remainder is discarded.
ComplexPoly deflate(const ComplexPoly& p, cplx c, std::size_t multiplicity = 1);

struct RootOptions {
  double tol = 1e-12;           // relative size of the last Aberth correction
  double residual_tol = 1e-12;  // |p(z)| relative to the largest coefficient
  int max_iterations = 1000;
  // Angle (radians) of the first starting point on the initial circle.
  double angle_offset = 0.4;
};

// All degree-many roots by Aberth iteration. Starting points sit on the
// circle of radius 1 + max|c_i / c_lead| at angles offset + 2 pi k / n.
// Throws NonConverged or ClusteredRoots (two roots closer than 1e-8).
std::vector<cplx> roots(const ComplexPoly& p, const RootOptions& options = {});

// f(x) = x^12 - (12/11) x^11 + 1
const ComplexPoly& f_poly();
// Monic integral model F(x) = 11^12 f(x / 11) = x^12 - 12 x^11 + 11^12.
const ComplexPoly& f_integral_model();

struct LabeledRoots {
  std::vector<cplx> roots;       // roots[0] is r_1
  std::vector<double> residuals; // |f(r_i)|

  cplx r(std::size_t label) const { return roots.at(label - 1); }
  std::size_t size() const noexcept { return roots.size(); }
  // Smallest difference between consecutive arguments (cyclically).
  double min_argument_gap() const;
};

// The 12 roots of f ordered by principal argument in [0, 2 pi), r_1 having
// the smallest argument. Each root is Newton-polished after Aberth.
LabeledRoots roots_of_f(const RootOptions& options = {});

// Newton-refines r in long double and reports |f| before and after one step.
struct RootCheck {
  double residual_before;
  double residual_after;
};
RootCheck extended_precision_check(cplx r);

}  // namespace belyi
