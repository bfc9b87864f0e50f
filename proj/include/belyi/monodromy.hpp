#pragma once

// Monodromy of a covering chain: the labelled fiber over a base point, and
// the permutations obtained by continuing every fiber point around a loop.
//
// Continuation tracks all x-values of the fiber together with one common
// step size. A step is accepted only when every point's Newton corrector
// converges, stays close to its predictor (at most 0.1 of the distance to
// its nearest neighbour) and moves less than a third of that distance. The
// y-branches over each x follow sqrt(c(x)) by choosing the root nearer the
// previous y and must move by less than |y|/2 per step.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "belyi/covering.hpp"
#include "belyi/perm.hpp"

namespace belyi {

struct TrackingConfig {
  double newton_tol = 1e-12;
  int max_newton_iters = 30;
  double initial_step = 1.0 / 256;   // fraction of the path length
  double min_step = 1.0 / 1048576;  // 2^-20
  double match_tol = 1e-6;
  double separation_factor = 10;
  double root_angle_offset = 0.4;   // start angle for every Aberth solve

  // Throws InvalidArgument on inconsistent values.
  void validate() const;
  RootOptions root_options() const;
};

struct FiberPoint {
  cplx x;
  std::optional<cplx> y;
  Point label;
};

using Fiber = std::vector<FiberPoint>;

// Loop based at `basepoint`: straight segment to the entry point on the
// circle |w - center| = radius, one counterclockwise turn, and back.
struct LoopSpec {
  cplx center;
  cplx basepoint{0.5, 0.0};
  double radius = 0.25;
  int steps = 256;  // initial step = 1 / steps of the loop length
  // Defaults to the point of the circle on the segment towards the basepoint.
  std::optional<cplx> entry;

  // Radius: half the distance from `center` to the nearest other branch value
  // or to the basepoint, whichever is closer.
  static LoopSpec around(const MapExpr& e, cplx center, const TrackingConfig& cfg,
                         cplx basepoint = {0.5, 0.0});

  cplx entry_point() const;
  double length() const;
  cplx at(double s) const;  // s in [0, 1]
};

// Deterministic labels 1..degree, ordered by (re x, im x, im y, re y) with
// coordinates within 1e-9 treated as equal.
// Throws NearBranch or Collision.
Fiber fiber(const MapExpr& e, cplx p, const TrackingConfig& cfg = {});

// Preimage of a value with its ramification order (local degree).
struct Preimage {
  cplx x;
  std::optional<cplx> y;
  std::size_t multiplicity;
};

// Stage-wise pullback that recognises the closed-form critical values of
// each primitive, so ramified points come out exactly with their orders.
std::vector<Preimage> pullback(const MapExpr& e, cplx value, const TrackingConfig& cfg = {});

struct TrackState {
  std::vector<cplx> x;
  std::vector<std::vector<cplx>> y;  // y-branches carried over each x (may be empty)
};

struct TrackStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

using TrackObserver = std::function<void(double s, const TrackState&)>;

// Continues `state` along w = path(s), s from 0 to 1, with the first trial
// step `initial_step` (also the largest allowed). Throws StepUnderflow.
TrackStats track_path(const ChainEvaluator& ev, const std::function<cplx(double)>& path,
                      TrackState& state, const TrackingConfig& cfg, double initial_step,
                      const TrackObserver& observer = {});

// Throws StepUnderflow, MatchAmbiguous or NotBijective.
Permutation track_loop(const MapExpr& e, const LoopSpec& loop, const Fiber& fiber,
                       const TrackingConfig& cfg = {});

struct MonodromyPair {
  Permutation g0;
  Permutation g1;

  // (g0 g1)^-1: the inverse of g0 followed by g1.
  Permutation ginf() const;
};

// Requires branch values within {0, 1, inf} (NotBelyi otherwise).
MonodromyPair monodromy(const MapExpr& e, const TrackingConfig& cfg = {});

// Loop based at 1/2 that first rises to 1/2 + i and then circles
// counterclockwise around both 0 and 1 (centre 1/2, radius 1). It is
// homotopic to the loop around 0 followed by the loop around 1, so its
// permutation must equal compose(g0, g1).
Permutation track_product_loop(const MapExpr& e, const TrackingConfig& cfg = {});

// Recomputes the pair with twice as many initial steps and loop radii scaled
// by 0.8; true iff both runs agree label for label.
bool verify_stability(const MapExpr& e, const TrackingConfig& cfg = {});
bool verify_stability(const MapExpr& e, const MonodromyPair& base, const TrackingConfig& cfg);

}  // namespace belyi
