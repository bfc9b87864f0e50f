#pragma once

// Composition chains of the three primitive coverings
//   b(m,n):    x -> (m+n)^(m+n) / (m^m n^n) * x^m (1-x)^n
//   f:         x -> x^12 - (12/11) x^11 + 1
//   pi(i,j,k): (x, y) -> x on y^2 = (x - r_i)(x - r_j)(x - r_k)
// with their textual grammar, evaluation, and forward branch propagation.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "belyi/numpoly.hpp"
#include "belyi/triple.hpp"

namespace belyi {

struct BelyiMN {
  unsigned m;
  unsigned n;
  friend bool operator==(const BelyiMN&, const BelyiMN&) = default;
};
struct FPoly {
  friend bool operator==(const FPoly&, const FPoly&) = default;
};
struct Proj {
  Triple triple;
  friend bool operator==(const Proj&, const Proj&) = default;
};

using Primitive = std::variant<BelyiMN, FPoly, Proj>;

// A point of C u {infinity}; infinity is a token, never a float sentinel.
struct SpherePoint {
  bool infinite = false;
  cplx value{};

  static SpherePoint infinity() { return {true, {}}; }
  static SpherePoint finite(cplx z) { return {false, z}; }
  bool approx_equal(const SpherePoint& other, double tol) const;
};

// A point in the domain of a chain: y is present iff the chain ends in pi.
struct CurvePoint {
  SpherePoint x;
  std::optional<cplx> y;
};

class MapExpr {
 public:
  // Outermost primitive first. Throws MisplacedPrimitive or Empty.
  explicit MapExpr(std::vector<Primitive> chain);

  // chain := prim ("." prim)* ; prim := "b(" int "," int ")" | "f" |
  // "pi(" int "," int "," int ")". Whitespace is ignored.
  static MapExpr parse(std::string_view text);

  // The clean chain b(1,1).b(10,1).f.pi(i,j,k).
  static MapExpr full_chain(const Triple& t);

  const std::vector<Primitive>& chain() const noexcept { return chain_; }
  std::size_t degree() const noexcept;
  bool has_projection() const noexcept;
  std::optional<Triple> triple() const noexcept;
  // Sub-chain with the outermost primitive removed (may be empty).
  std::vector<Primitive> inner() const;

  // Canonical lowercase form without spaces.
  std::string to_string() const;

  friend bool operator==(const MapExpr&, const MapExpr&) = default;

 private:
  std::vector<Primitive> chain_;
};

std::size_t degree(const Primitive& p) noexcept;
std::string to_string(const Primitive& p);

// Leading constant (m+n)^(m+n) / (m^m n^n).
double belyi_constant(unsigned m, unsigned n);
// b(m,n)(x) - w as a polynomial in x.
ComplexPoly belyi_poly(unsigned m, unsigned n, cplx w = 0.0);

// Monic cubic (x - r_i)(x - r_j)(x - r_k) for a triple of roots of f.
struct Cubic {
  std::array<cplx, 3> roots;
  cplx a2, a1, a0;  // x^3 + a2 x^2 + a1 x + a0

  static Cubic from_roots(cplx e1, cplx e2, cplx e3);
  cplx operator()(cplx x) const noexcept { return ((x + a2) * x + a1) * x + a0; }
  cplx derivative(cplx x) const noexcept { return (3.0 * x + 2.0 * a2) * x + a1; }
};

Cubic cubic_for(const Triple& t, const LabeledRoots& roots);

// Evaluates the x-part of a chain (pi contributes the identity on x) with its
// derivative by the chain rule, never expanding composite coefficients. Each
// stage also carries 1 - value in a cancellation-free form, so factors
// (1 - u)^n stay accurate where an inner stage is close to 1.
class ChainEvaluator {
 public:
  explicit ChainEvaluator(const MapExpr& e, const RootOptions& root_options = {});

  cplx value(cplx x) const noexcept;
  void value_and_derivative(cplx x, cplx& value, cplx& derivative) const noexcept;
  // Evaluates the primitives [first, chain end), e.g. first = 1 skips the outermost.
  cplx value_from(std::size_t first, cplx x) const noexcept;

  bool has_projection() const noexcept { return cubic_.has_value(); }
  const Cubic& cubic() const { return *cubic_; }
  const MapExpr& expr() const noexcept { return expr_; }
  const LabeledRoots& labeled_roots() const noexcept { return roots_; }

 private:
  MapExpr expr_;
  LabeledRoots roots_;
  struct Stage {
    bool is_f;
    unsigned m, n;  // b(m, n) only
    double k;       // b(m, n) only
  };
  // v = stage(u) and cv = 1 - v from (u, cu = 1 - u); dv = dv/du if non-null.
  static void apply(const Stage& st, cplx u, cplx cu, cplx& v, cplx& cv, cplx* dv) noexcept;

  std::vector<Stage> stages_;  // outermost first
  std::optional<Cubic> cubic_;
};

// Throws PointOffCurve when a y-coordinate is missing, superfluous, or
// violates |y^2 - c(x)| < 1e-8.
SpherePoint eval_chain(const MapExpr& e, const CurvePoint& pt, const RootOptions& ro = {});

struct Ramification {
  SpherePoint point;
  std::size_t order;
};

struct BranchData {
  std::vector<SpherePoint> branch_values;  // finite values ascending by (re, im), then infinity
  // Closed-form critical data of the innermost primitive: critical point and
  // its ramification order.
  std::vector<Ramification> innermost_ramification;

  bool subset_of_01inf(double tol = 1e-9) const;
  bool contains(const SpherePoint& p, double tol = 1e-9) const;
};

BranchData branch_values(const MapExpr& e, const RootOptions& ro = {});
// Branch values of a bare primitive sequence; empty sequence -> no branching.
std::vector<SpherePoint> branch_values(const std::vector<Primitive>& chain,
                                       const RootOptions& ro = {});

// Outermost b(1,1) over an inner chain whose branch values lie in {0, 1, inf}.
bool is_clean_syntactic(const MapExpr& e, const RootOptions& ro = {});

}  // namespace belyi
