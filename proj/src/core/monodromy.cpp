#include "belyi/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "belyi/error.hpp"

namespace belyi {

void TrackingConfig::validate() const {
  if (!(newton_tol > 0)) throw Error(ErrorCode::InvalidArgument, "newton_tol must be > 0");
  if (max_newton_iters < 1) throw Error(ErrorCode::InvalidArgument, "max_newton_iters must be >= 1");
  if (!(initial_step > 0 && initial_step <= 1))
    throw Error(ErrorCode::InvalidArgument, "initial_step must lie in (0, 1]");
  if (!(min_step > 0 && min_step <= initial_step))
    throw Error(ErrorCode::InvalidArgument, "min_step must lie in (0, initial_step]");
  if (!(match_tol > 0)) throw Error(ErrorCode::InvalidArgument, "match_tol must be > 0");
  if (!(separation_factor > 1))
    throw Error(ErrorCode::InvalidArgument, "separation_factor must be > 1");
}

RootOptions TrackingConfig::root_options() const {
  RootOptions ro;
  ro.angle_offset = root_angle_offset;
  return ro;
}

// ---------------------------------------------------------------- loops

LoopSpec LoopSpec::around(const MapExpr& e, cplx center, const TrackingConfig& cfg,
                          cplx basepoint) {
  double nearest = std::abs(basepoint - center);
  for (const auto& b : branch_values(e, cfg.root_options()).branch_values) {
    if (b.infinite) continue;
    double d = std::abs(b.value - center);
    if (d > 1e-12) nearest = std::min(nearest, d);
  }
  LoopSpec loop;
  loop.center = center;
  loop.basepoint = basepoint;
  loop.radius = nearest / 2;
  loop.steps = std::max(1, static_cast<int>(std::lround(1.0 / cfg.initial_step)));
  return loop;
}

cplx LoopSpec::entry_point() const {
  if (entry) return *entry;
  cplx dir = basepoint - center;
  double len = std::abs(dir);
  if (len == 0) return center + radius;
  return center + radius * dir / len;
}

double LoopSpec::length() const {
  return 2 * std::abs(basepoint - entry_point()) + 2 * std::numbers::pi * radius;
}

cplx LoopSpec::at(double s) const {
  const cplx e = entry_point();
  const double tail = std::abs(basepoint - e);
  const double circle = 2 * std::numbers::pi * radius;
  const double total = 2 * tail + circle;
  double arc = std::clamp(s, 0.0, 1.0) * total;
  if (arc <= tail && tail > 0) return basepoint + (e - basepoint) * (arc / tail);
  arc -= tail;
  if (arc <= circle) {
    if (s >= 1.0 && tail == 0) return basepoint;
    return center + (e - center) * std::polar(1.0, 2 * std::numbers::pi * arc / circle);
  }
  arc -= circle;
  if (s >= 1.0) return basepoint;
  return e + (basepoint - e) * std::min(1.0, arc / tail);
}

// ---------------------------------------------------------------- fibers

namespace {

constexpr double kCriticalTol = 1e-10;

struct StageValue {
  cplx v;
  std::size_t mult;
};

std::vector<StageValue> belyi_preimages(unsigned m, unsigned n, cplx w, const RootOptions& ro) {
  if (std::abs(w) < kCriticalTol) return {{0.0, m}, {1.0, n}};
  std::vector<StageValue> out;
  ComplexPoly p = belyi_poly(m, n, w);
  if (std::abs(w - 1.0) < kCriticalTol) {
    const cplx c = double(m) / (m + n);
    out.push_back({c, 2});
    p = deflate(belyi_poly(m, n, 1.0), c, 2);
    if (p.degree() == 0) return out;
  }
  for (cplx z : roots(p, ro)) out.push_back({z, 1});
  return out;
}

std::vector<StageValue> f_preimages(cplx w, const RootOptions& ro) {
  std::vector<StageValue> out;
  std::vector<cplx> c = f_poly().coefficients();
  c[0] -= w;
  ComplexPoly p{c};
  if (std::abs(w - 1.0) < kCriticalTol) {
    out.push_back({0.0, 11});
    out.push_back({12.0 / 11.0, 1});
    return out;
  }
  if (std::abs(w - 10.0 / 11.0) < kCriticalTol) {
    out.push_back({1.0, 2});
    std::vector<cplx> c1 = f_poly().coefficients();
    c1[0] -= 10.0 / 11.0;
    p = deflate(ComplexPoly{c1}, 1.0, 2);
  }
  for (cplx z : roots(p, ro)) out.push_back({z, 1});
  return out;
}

// Coordinates closer than 1e-9 count as equal: conjugate fiber points share
// their real part only up to rounding.
bool fiber_less(const FiberPoint& a, const FiberPoint& b) {
  const cplx ya = a.y.value_or(0.0), yb = b.y.value_or(0.0);
  const double ka[] = {a.x.real(), a.x.imag(), ya.imag(), ya.real()};
  const double kb[] = {b.x.real(), b.x.imag(), yb.imag(), yb.real()};
  for (int i = 0; i < 4; ++i)
    if (std::abs(ka[i] - kb[i]) > 1e-9 * (1 + std::abs(ka[i]))) return ka[i] < kb[i];
  return false;
}

double point_distance(cplx x1, std::optional<cplx> y1, cplx x2, std::optional<cplx> y2) {
  double d = std::norm(x1 - x2);
  if (y1 && y2) d += std::norm(*y1 - *y2);
  return std::sqrt(d);
}

cplx polish(const ChainEvaluator& ev, cplx x, cplx target) {
  cplx v, d;
  ev.value_and_derivative(x, v, d);
  double res = std::abs(v - target);
  for (int it = 0; it < 4 && d != cplx{}; ++it) {
    cplx next = x - (v - target) / d;
    cplx nv, nd;
    ev.value_and_derivative(next, nv, nd);
    if (!(std::abs(nv - target) < res)) break;
    x = next;
    v = nv;
    d = nd;
    res = std::abs(v - target);
  }
  return x;
}

}  // namespace

std::vector<Preimage> pullback(const MapExpr& e, cplx value, const TrackingConfig& cfg) {
  const RootOptions ro = cfg.root_options();
  std::vector<StageValue> cur{{value, 1}};
  for (const auto& prim : e.chain()) {
    if (std::holds_alternative<Proj>(prim)) break;
    std::vector<StageValue> next;
    for (const auto& sv : cur) {
      std::vector<StageValue> pre;
      if (const auto* b = std::get_if<BelyiMN>(&prim)) pre = belyi_preimages(b->m, b->n, sv.v, ro);
      else pre = f_preimages(sv.v, ro);
      for (const auto& q : pre) next.push_back({q.v, sv.mult * q.mult});
    }
    cur = std::move(next);
  }

  std::vector<Preimage> out;
  if (auto t = e.triple()) {
    const LabeledRoots roots = roots_of_f(ro);
    const Cubic c = cubic_for(*t, roots);
    for (const auto& sv : cur) {
      bool ramified = false;
      for (int label : t->indices())
        if (std::abs(sv.v - roots.r(label)) < 1e-8) ramified = true;
      if (ramified) {
        out.push_back({sv.v, cplx{0.0}, sv.mult * 2});
      } else {
        cplx y = std::sqrt(c(sv.v));
        out.push_back({sv.v, y, sv.mult});
        out.push_back({sv.v, -y, sv.mult});
      }
    }
  } else {
    for (const auto& sv : cur) out.push_back({sv.v, std::nullopt, sv.mult});
  }
  return out;
}

Fiber fiber(const MapExpr& e, cplx p, const TrackingConfig& cfg) {
  cfg.validate();
  const RootOptions ro = cfg.root_options();
  for (const auto& b : branch_values(e, ro).branch_values)
    if (!b.infinite && std::abs(b.value - p) < 1e-6)
      throw Error(ErrorCode::NearBranch, "base point within 1e-6 of a branch value");

  const ChainEvaluator ev(e, ro);
  std::vector<Preimage> pre = pullback(e, p, cfg);
  Fiber out;
  for (auto& q : pre) {
    if (q.multiplicity != 1)
      throw Error(ErrorCode::NearBranch, "base point is a critical value of an inner stage");
  }
  // Polish each distinct x once so that both y-sheets keep an identical x.
  for (std::size_t i = 0; i < pre.size(); ++i) {
    if (ev.has_projection() && i > 0 && pre[i].x == pre[i - 1].x) {
      out.push_back({out.back().x, pre[i].y, 0});
      continue;
    }
    cplx x = polish(ev, pre[i].x, p);
    std::optional<cplx> y = pre[i].y;
    if (y) {
      cplx root = std::sqrt(ev.cubic()(x));
      y = std::abs(root - *y) <= std::abs(root + *y) ? root : -root;
    }
    out.push_back({x, y, 0});
  }
  // Re-sync the partner sheet, which copied x before its own y was fixed.
  if (ev.has_projection()) {
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i].x == out[i - 1].x) out[i].y = -*out[i - 1].y;
  }

  std::sort(out.begin(), out.end(), fiber_less);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = static_cast<Point>(i + 1);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (point_distance(out[i].x, out[i].y, out[j].x, out[j].y) < cfg.match_tol)
        throw Error(ErrorCode::Collision, "two fiber points closer than match_tol");
  if (out.size() != e.degree())
    throw Error(ErrorCode::Collision, "fiber size differs from the chain degree");
  return out;
}

// ---------------------------------------------------------------- tracking

TrackStats track_path(const ChainEvaluator& ev, const std::function<cplx(double)>& path,
                      TrackState& state, const TrackingConfig& cfg, double initial_step,
                      const TrackObserver& observer) {
  const std::size_t n = state.x.size();
  if (state.y.size() != n) state.y.resize(n);
  TrackStats stats;
  std::vector<double> sep(n);
  std::vector<cplx> deriv(n);
  std::vector<cplx> next_x(n);
  std::vector<std::vector<cplx>> next_y(n);

  auto refresh = [&] {
    std::fill(sep.begin(), sep.end(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double d = std::abs(state.x[i] - state.x[j]);
        sep[i] = std::min(sep[i], d);
        sep[j] = std::min(sep[j], d);
      }
    for (std::size_t i = 0; i < n; ++i) {
      cplx v;
      ev.value_and_derivative(state.x[i], v, deriv[i]);
    }
  };

  double s = 0;
  double h = initial_step;
  cplx w = path(0);
  int streak = 0;
  refresh();
  if (observer) observer(0, state);

  while (s < 1) {
    const double s_new = (1 - s <= h * (1 + 1e-12)) ? 1.0 : s + h;
    const double step = s_new - s;
    const cplx w_new = path(s_new);
    const cplx dw = w_new - w;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (deriv[i] == cplx{}) {
        ok = false;
        break;
      }
      const cplx pred = state.x[i] + dw / deriv[i];
      cplx z = pred;
      bool converged = false;
      for (int it = 0; it < cfg.max_newton_iters; ++it) {
        cplx v, d;
        ev.value_and_derivative(z, v, d);
        if (d == cplx{} || !std::isfinite(std::abs(v))) break;
        const cplx dz = (v - w_new) / d;
        z -= dz;
        if (std::abs(dz) <= cfg.newton_tol * (1 + std::abs(z))) {
          converged = true;
          break;
        }
      }
      if (!converged || std::abs(z - pred) > 0.1 * sep[i] ||
          std::abs(z - state.x[i]) > sep[i] / 3) {
        ok = false;
        break;
      }
      next_x[i] = z;
      next_y[i].resize(state.y[i].size());
      if (!state.y[i].empty()) {
        const cplx root = std::sqrt(ev.cubic()(z));
        for (std::size_t k = 0; k < state.y[i].size(); ++k) {
          const cplx y_old = state.y[i][k];
          const cplx y_new = std::abs(root - y_old) <= std::abs(root + y_old) ? root : -root;
          if (!(std::abs(y_new - y_old) < 0.5 * std::abs(y_old))) {
            ok = false;
            break;
          }
          next_y[i][k] = y_new;
        }
      }
    }

    if (ok) {
      state.x.swap(next_x);
      state.y.swap(next_y);
      s = s_new;
      w = w_new;
      ++stats.accepted;
      refresh();
      if (observer) observer(s, state);
      if (++streak >= 2 && 2 * step <= initial_step * (1 + 1e-12)) {
        h = 2 * step;
        streak = 0;
      }
    } else {
      ++stats.rejected;
      streak = 0;
      h = step / 2;
      if (h < cfg.min_step)
        throw Error(ErrorCode::StepUnderflow,
                    "step fell below min_step at s = " + std::to_string(s) +
                        " (loop radius may be too large)");
    }
  }
  return stats;
}

namespace {

struct SheetGroups {
  TrackState state;
  std::vector<std::vector<Point>> labels;  // labels[g][k] carries y[g][k]
};

SheetGroups group_by_x(const Fiber& fib) {
  SheetGroups g;
  for (const auto& fp : fib) {
    std::size_t idx = g.state.x.size();
    for (std::size_t i = 0; i < g.state.x.size(); ++i)
      if (g.state.x[i] == fp.x) idx = i;
    if (idx == g.state.x.size()) {
      g.state.x.push_back(fp.x);
      g.state.y.emplace_back();
      g.labels.emplace_back();
    }
    if (fp.y) g.state.y[idx].push_back(*fp.y);
    g.labels[idx].push_back(fp.label);
  }
  return g;
}

Permutation match_endpoints(const ChainEvaluator& ev, const SheetGroups& groups,
                            const TrackState& end, cplx target, const Fiber& fib,
                            const TrackingConfig& cfg) {
  std::vector<Point> images(fib.size(), 0);
  std::vector<bool> hit(fib.size() + 1, false);
  for (std::size_t g = 0; g < end.x.size(); ++g) {
    const cplx x = polish(ev, end.x[g], target);
    const std::size_t sheets = std::max<std::size_t>(1, end.y[g].size());
    for (std::size_t k = 0; k < sheets; ++k) {
      std::optional<cplx> y;
      if (!end.y[g].empty()) {
        const cplx root = std::sqrt(ev.cubic()(x));
        const cplx y_old = end.y[g][k];
        y = std::abs(root - y_old) <= std::abs(root + y_old) ? root : -root;
      }
      double best = std::numeric_limits<double>::infinity();
      double second = best;
      Point best_label = 0;
      for (const auto& fp : fib) {
        const double d = point_distance(x, y, fp.x, fp.y);
        if (d < best) {
          second = best;
          best = d;
          best_label = fp.label;
        } else if (d < second) {
          second = d;
        }
      }
      if (!(best <= cfg.match_tol) || !(second >= cfg.separation_factor * best))
        throw Error(ErrorCode::MatchAmbiguous,
                    "endpoint match failed (nearest " + std::to_string(best) + ", second " +
                        std::to_string(second) + ")");
      if (hit[best_label])
        throw Error(ErrorCode::NotBijective, "two tracked points ended at the same fiber point");
      hit[best_label] = true;
      images[groups.labels[g][k] - 1] = best_label;
    }
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation track_loop(const MapExpr& e, const LoopSpec& loop, const Fiber& fib,
                       const TrackingConfig& cfg) {
  cfg.validate();
  if (!(loop.radius > 0) || loop.steps < 1)
    throw Error(ErrorCode::InvalidArgument, "loop radius and steps must be positive");
  const ChainEvaluator ev(e, cfg.root_options());
  SheetGroups groups = group_by_x(fib);
  TrackState state = groups.state;
  track_path(ev, [&](double s) { return loop.at(s); }, state, cfg, 1.0 / loop.steps);
  return match_endpoints(ev, groups, state, loop.basepoint, fib, cfg);
}

Permutation MonodromyPair::ginf() const { return inverse(compose(g0, g1)); }

namespace {

void require_belyi(const MapExpr& e, const TrackingConfig& cfg) {
  if (!branch_values(e, cfg.root_options()).subset_of_01inf())
    throw Error(ErrorCode::NotBelyi, "chain " + e.to_string() + " has branch values outside {0,1,inf}");
}

MonodromyPair monodromy_with(const MapExpr& e, const Fiber& fib, const TrackingConfig& cfg,
                             int step_scale, double radius_scale) {
  const cplx base{0.5, 0.0};
  LoopSpec l0 = LoopSpec::around(e, 0.0, cfg, base);
  LoopSpec l1 = LoopSpec::around(e, 1.0, cfg, base);
  for (LoopSpec* l : {&l0, &l1}) {
    l->steps *= step_scale;
    l->radius *= radius_scale;
  }
  return {track_loop(e, l0, fib, cfg), track_loop(e, l1, fib, cfg)};
}

}  // namespace

MonodromyPair monodromy(const MapExpr& e, const TrackingConfig& cfg) {
  require_belyi(e, cfg);
  const Fiber fib = fiber(e, {0.5, 0.0}, cfg);
  return monodromy_with(e, fib, cfg, 1, 1.0);
}

Permutation track_product_loop(const MapExpr& e, const TrackingConfig& cfg) {
  require_belyi(e, cfg);
  const Fiber fib = fiber(e, {0.5, 0.0}, cfg);
  LoopSpec loop;
  loop.center = {0.5, 0.0};
  loop.basepoint = {0.5, 0.0};
  loop.radius = 1.0;
  loop.entry = cplx{0.5, 1.0};
  loop.steps = 2 * std::max(1, static_cast<int>(std::lround(1.0 / cfg.initial_step)));
  return track_loop(e, loop, fib, cfg);
}

bool verify_stability(const MapExpr& e, const MonodromyPair& base, const TrackingConfig& cfg) {
  require_belyi(e, cfg);
  const Fiber fib = fiber(e, {0.5, 0.0}, cfg);
  const MonodromyPair alt = monodromy_with(e, fib, cfg, 2, 0.8);
  return alt.g0 == base.g0 && alt.g1 == base.g1;
}

bool verify_stability(const MapExpr& e, const TrackingConfig& cfg) {
  return verify_stability(e, monodromy(e, cfg), cfg);
}

}  // namespace belyi
