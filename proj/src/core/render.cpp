#include "belyi/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "belyi/error.hpp"

namespace belyi {

void RenderPlan::validate() const {
  if (samples_per_edge < 8) throw Error(ErrorCode::InvalidArgument, "samples_per_edge must be >= 8");
  if (width <= 0 || height <= 0 || margin < 0 || 2 * margin >= std::min(width, height))
    throw Error(ErrorCode::InvalidArgument, "canvas size and margin are inconsistent");
  if (vertex_radius < 0 || arc_stroke_width <= 0 || vertex_stroke_width < 0)
    throw Error(ErrorCode::InvalidArgument, "stroke widths and radii must be nonnegative");
  if (viewport && !(viewport->xmax > viewport->xmin && viewport->ymax > viewport->ymin))
    throw Error(ErrorCode::InvalidArgument, "viewport must have positive extent");
}

namespace {

std::vector<std::size_t> valencies_of(const std::vector<RenderedVertex>& vs) {
  std::vector<std::size_t> v;
  for (const auto& x : vs) v.push_back(x.valency);
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

std::vector<std::size_t> RenderStats::black_valencies() const { return valencies_of(black); }
std::vector<std::size_t> RenderStats::white_valencies() const { return valencies_of(white); }

namespace {

// Closest approach of a strand end to its vertex parameter value.
constexpr double kEndDistance = 1e-7;

struct StrandPoint {
  cplx x;
  std::optional<cplx> y;
};

using Strand = std::vector<StrandPoint>;

struct Sheets {
  TrackState state;
  std::vector<std::vector<Point>> labels;
};

Sheets group_by_x(const Fiber& fib) {
  Sheets g;
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

double distance(const StrandPoint& a, cplx x, std::optional<cplx> y) {
  double d = std::norm(a.x - x);
  if (a.y && y) d += std::norm(*a.y - *y);
  return std::sqrt(d);
}

// Follows every edge from w = 1/2 to within kEndDistance of `target` (0 or
// 1); the last `halves` samples lie on a geometric approach to the vertex.
std::vector<Strand> trace_half(const ChainEvaluator& ev, const Sheets& sheets, double target,
                               int halves, std::size_t degree, const TrackingConfig& cfg) {
  std::vector<Strand> strands(degree);
  TrackState st = sheets.state;
  const double dir = target < 0.5 ? -1.0 : 1.0;
  auto w_at = [&](int j) { return 0.5 + dir * 0.5 * j / halves; };
  for (int j = 1; j <= halves; ++j) {
    const double a = w_at(j - 1);
    std::function<cplx(double)> path;
    if (j < halves) {
      const double b = w_at(j);
      path = [a, b](double s) { return cplx{a + (b - a) * s, 0.0}; };
    } else {
      const double d0 = std::abs(target - a);
      path = [=](double s) { return cplx{target - dir * d0 * std::pow(kEndDistance / d0, s), 0.0}; };
    }
    track_path(ev, path, st, cfg, 1.0 / 16);
    for (std::size_t g = 0; g < st.x.size(); ++g) {
      const auto& labels = sheets.labels[g];
      for (std::size_t k = 0; k < labels.size(); ++k) {
        std::optional<cplx> y;
        if (!st.y[g].empty()) y = st.y[g][k];
        strands[labels[k] - 1].push_back({st.x[g], y});
      }
    }
  }
  return strands;
}

// Matches each cycle of g (the edges around one vertex) with the exact
// preimage nearest to the centroid of its strand ends.
std::vector<RenderedVertex> assign_vertices(const Permutation& g, const std::vector<Strand>& ends,
                                            const std::vector<Preimage>& exact, double& max_err,
                                            std::vector<std::size_t>& vertex_of,
                                            const char* colour) {
  vertex_of.assign(g.degree(), 0);
  std::vector<RenderedVertex> out;
  std::vector<bool> used(exact.size(), false);
  const auto cycles = cycle_decomposition(g);
  if (cycles.size() != exact.size())
    throw Error(ErrorCode::NotBijective, std::string(colour) + " vertex count differs from the cycle count");
  for (const auto& cyc : cycles) {
    cplx cx = 0, cy = 0;
    bool has_y = false;
    for (Point p : cyc) {
      const auto& end = ends[p - 1].back();
      cx += end.x;
      if (end.y) {
        cy += *end.y;
        has_y = true;
      }
    }
    StrandPoint centroid{cx / double(cyc.size()), std::nullopt};
    if (has_y) centroid.y = cy / double(cyc.size());
    std::size_t best = exact.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < exact.size(); ++i) {
      const double d = distance(centroid, exact[i].x, exact[i].y);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == exact.size() || best_d > kVertexMergeTol || used[best] ||
        exact[best].multiplicity != cyc.size())
      throw Error(ErrorCode::NotBijective,
                  std::string("strands around a ") + colour + " vertex disagree with the monodromy");
    used[best] = true;
    max_err = std::max(max_err, best_d);
    for (Point p : cyc) vertex_of[p - 1] = out.size();
    out.push_back({exact[best].x, exact[best].y, cyc.size()});
  }
  return out;
}

// Greedy proximity merge; valencies add up.
std::vector<RenderedVertex> merge_close(const std::vector<RenderedVertex>& vs) {
  std::vector<RenderedVertex> out;
  for (const auto& v : vs) {
    bool merged = false;
    for (auto& o : out) {
      if (distance({o.x, o.y}, v.x, v.y) < kVertexMergeTol) {
        o.valency += v.valency;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(v);
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

RenderResult render_graph(const MapExpr& e, const RenderPlan& plan, const TrackingConfig& cfg) {
  return render_graph(e, monodromy(e, cfg), plan, cfg);
}

RenderResult render_graph(const MapExpr& e, const MonodromyPair& pair, const RenderPlan& plan,
                          const TrackingConfig& cfg) {
  plan.validate();
  cfg.validate();
  if (!branch_values(e, cfg.root_options()).subset_of_01inf())
    throw Error(ErrorCode::NotBelyi, "only Belyi chains can be drawn");
  const std::size_t n = e.degree();
  if (pair.g0.degree() != n || pair.g1.degree() != n)
    throw Error(ErrorCode::DegreeMismatch, "monodromy pair does not match the chain degree");

  const ChainEvaluator ev(e, cfg.root_options());
  const Fiber fib = fiber(e, {0.5, 0.0}, cfg);
  const Sheets sheets = group_by_x(fib);
  const int halves = std::max(4, plan.samples_per_edge / 2);
  const auto to0 = trace_half(ev, sheets, 0.0, halves, n, cfg);
  const auto to1 = trace_half(ev, sheets, 1.0, halves, n, cfg);

  RenderStats stats;
  stats.arcs = n;
  std::vector<std::size_t> at0, at1;
  const auto black = assign_vertices(pair.g0, to0, pullback(e, 0.0, cfg), stats.max_endpoint_error,
                                     at0, "black");
  const auto white = assign_vertices(pair.g1, to1, pullback(e, 1.0, cfg), stats.max_endpoint_error,
                                     at1, "white");
  stats.black = merge_close(black);
  stats.white = merge_close(white);

  // Full polylines: black vertex, strand towards 0 reversed, base, strand towards 1, white vertex.
  std::vector<std::vector<cplx>> lines(n);
  std::vector<int> sheet(n, 0);
  for (const auto& fp : fib) {
    const std::size_t i = fp.label - 1;
    auto& line = lines[i];
    line.push_back(black[at0[i]].x);
    for (auto it = to0[i].rbegin(); it != to0[i].rend(); ++it) line.push_back(it->x);
    line.push_back(fp.x);
    for (const auto& p : to1[i]) line.push_back(p.x);
    line.push_back(white[at1[i]].x);
    if (fp.y) {
      sheet[i] = (fp.y->imag() > 0 || (fp.y->imag() == 0 && fp.y->real() > 0)) ? 0 : 1;
      stats.sheets = 2;
    }
  }

  Viewport vp;
  if (plan.viewport) {
    vp = *plan.viewport;
  } else {
    vp = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& line : lines)
      for (cplx z : line) {
        vp.xmin = std::min(vp.xmin, z.real());
        vp.xmax = std::max(vp.xmax, z.real());
        vp.ymin = std::min(vp.ymin, z.imag());
        vp.ymax = std::max(vp.ymax, z.imag());
      }
    // Square, slightly padded box so the x-plane keeps its angles.
    const double span = std::max({vp.xmax - vp.xmin, vp.ymax - vp.ymin, 1e-6}) * 1.04;
    const double cx = (vp.xmin + vp.xmax) / 2, cy = (vp.ymin + vp.ymax) / 2;
    vp = {cx - span / 2, cx + span / 2, cy - span / 2, cy + span / 2};
  }
  const double inner_w = plan.width - 2.0 * plan.margin;
  const double inner_h = plan.height - 2.0 * plan.margin;
  const double scale = std::min(inner_w / (vp.xmax - vp.xmin), inner_h / (vp.ymax - vp.ymin));
  auto px = [&](cplx z) {
    return fmt(plan.margin + (z.real() - vp.xmin) * scale) + "," +
           fmt(plan.height - plan.margin - (z.imag() - vp.ymin) * scale);
  };
  auto circle = [&](cplx z, std::size_t valency, const std::string& fill) {
    const std::string p = px(z);
    const auto comma = p.find(',');
    return "    <circle cx=\"" + p.substr(0, comma) + "\" cy=\"" + p.substr(comma + 1) + "\" r=\"" +
           fmt(plan.vertex_radius) + "\" fill=\"" + fill + "\" data-valency=\"" +
           std::to_string(valency) + "\"/>\n";
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(plan.width) + "\" height=\"" + std::to_string(plan.height) +
         "\" viewBox=\"0 0 " + std::to_string(plan.width) + " " + std::to_string(plan.height) +
         "\">\n";
  svg += "  <title>" + e.to_string() + "</title>\n";
  for (int s = 0; s < static_cast<int>(stats.sheets); ++s) {
    svg += "  <g id=\"sheet-" + std::to_string(s) + "\" fill=\"none\" stroke=\"" +
           plan.sheet_colors[s] + "\" stroke-width=\"" + fmt(plan.arc_stroke_width) + "\">\n";
    for (std::size_t i = 0; i < n; ++i) {
      if (sheet[i] != s) continue;
      svg += "    <polyline data-edge=\"" + std::to_string(i + 1) + "\" points=\"";
      for (std::size_t k = 0; k < lines[i].size(); ++k) {
        if (k) svg += ' ';
        svg += px(lines[i][k]);
      }
      svg += "\"/>\n";
    }
    svg += "  </g>\n";
  }
  svg += "  <g id=\"black-vertices\" stroke=\"" + plan.vertex_stroke + "\" stroke-width=\"" +
         fmt(plan.vertex_stroke_width) + "\">\n";
  for (const auto& v : stats.black) svg += circle(v.x, v.valency, plan.black_fill);
  svg += "  </g>\n";
  svg += "  <g id=\"white-vertices\" stroke=\"" + plan.vertex_stroke + "\" stroke-width=\"" +
         fmt(plan.vertex_stroke_width) + "\">\n";
  for (const auto& v : stats.white) svg += circle(v.x, v.valency, plan.white_fill);
  svg += "  </g>\n</svg>\n";
  return {std::move(svg), std::move(stats)};
}

}  // namespace belyi
