#pragma once

// Drawing of the graph lifted from [0, 1]: every edge segment is followed
// from the base fiber over 1/2 towards 0 and towards 1 and ends on the exact
// black or white vertex it belongs to. Chains ending in pi are drawn in the
// x-plane with one stroke per y-sheet.

#include <optional>
#include <string>
#include <vector>

#include "belyi/covering.hpp"
#include "belyi/monodromy.hpp"

namespace belyi {

struct Viewport {
  double xmin, xmax, ymin, ymax;
};

struct RenderPlan {
  int samples_per_edge = 32;  // polyline points per edge, at least 8
  int width = 800;
  int height = 800;
  int margin = 24;
  double arc_stroke_width = 1.0;
  std::string sheet_colors[2] = {"#1f4e9c", "#c0392b"};
  std::string black_fill = "#000000";
  std::string white_fill = "#ffffff";
  std::string vertex_stroke = "#000000";
  double vertex_radius = 3.5;
  double vertex_stroke_width = 1.0;
  std::optional<Viewport> viewport;  // fitted to the drawing when absent

  void validate() const;  // InvalidArgument
};

struct RenderedVertex {
  cplx x;
  std::optional<cplx> y;
  std::size_t valency;
};

struct RenderStats {
  std::size_t arcs = 0;
  std::vector<RenderedVertex> black;
  std::vector<RenderedVertex> white;
  std::size_t sheets = 1;
  double max_endpoint_error = 0;  // centroid of a vertex's strand ends vs. the vertex

  std::vector<std::size_t> black_valencies() const;  // descending
  std::vector<std::size_t> white_valencies() const;
};

struct RenderResult {
  std::string svg;
  RenderStats stats;
};

// Vertices closer than this in (x, y) are one dot.
inline constexpr double kVertexMergeTol = 1e-4;

// Requires a Belyi chain; consistency failures between the strands and the
// monodromy pair raise NotBijective.
RenderResult render_graph(const MapExpr& e, const RenderPlan& plan = {},
                          const TrackingConfig& cfg = {});
RenderResult render_graph(const MapExpr& e, const MonodromyPair& pair, const RenderPlan& plan,
                          const TrackingConfig& cfg);

}  // namespace belyi
