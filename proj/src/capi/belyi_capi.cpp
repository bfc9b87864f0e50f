#include "belyi/belyi.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "belyi/report.hpp"

struct belyi_context {
  belyi::TrackingConfig config;
  std::string last_error;
  std::string last_error_json;
};

struct belyi_perm {
  belyi::Permutation value;
};

struct belyi_map {
  belyi::MapExpr value;
};

struct belyi_constellation {
  belyi::Constellation value;
};

namespace {

belyi_status status_of(belyi::ErrorCode code) {
  return static_cast<belyi_status>(static_cast<int>(code) + 1);
}

void clear(belyi_context* ctx) {
  ctx->last_error.clear();
  ctx->last_error_json.clear();
}

belyi_status fail(belyi_context* ctx, belyi::ErrorCode code, const std::string& msg,
                  std::optional<std::size_t> pos = std::nullopt) {
  ctx->last_error = msg;
  ctx->last_error_json = belyi::error_json(code, msg, pos).dump();
  return status_of(code);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body` translating every exception into a status on ctx.
template <class F>
belyi_status guarded(belyi_context* ctx, F&& body) {
  if (!ctx) return BELYI_INVALID_ARGUMENT;
  clear(ctx);
  try {
    body();
    return BELYI_OK;
  } catch (const belyi::SyntaxError& e) {
    return fail(ctx, e.code(), e.what(), e.position());
  } catch (const belyi::Error& e) {
    return fail(ctx, e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ctx, belyi::ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    ctx->last_error_json =
        nlohmann::json{{"error", {{"code", "INTERNAL"}, {"message", e.what()}}}}.dump();
    return BELYI_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw belyi::Error(belyi::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* belyi_version(void) { return "1.0.0"; }

const char* belyi_status_name(belyi_status status) {
  if (status == BELYI_OK) return "OK";
  if (status == BELYI_INTERNAL) return "INTERNAL";
  if (status < BELYI_OK || status > BELYI_INTERNAL) return "UNKNOWN";
  return belyi::to_string(static_cast<belyi::ErrorCode>(status - 1)).data();
}

void belyi_string_free(char* s) { std::free(s); }

belyi_status belyi_context_create(belyi_context** out) {
  if (!out) return BELYI_INVALID_ARGUMENT;
  *out = new (std::nothrow) belyi_context();
  return *out ? BELYI_OK : BELYI_INTERNAL;
}

void belyi_context_destroy(belyi_context* ctx) { delete ctx; }

belyi_status belyi_context_set_config_json(belyi_context* ctx, const char* json) {
  return guarded(ctx, [&] {
    require(json, "config text is null");
    ctx->config = belyi::config_from_json(belyi::Json::parse(json), ctx->config);
  });
}

belyi_status belyi_context_set_root_offset(belyi_context* ctx, double radians) {
  return guarded(ctx, [&] {
    require(std::isfinite(radians), "root offset must be finite");
    ctx->config.root_angle_offset = radians;
  });
}

belyi_status belyi_context_config_json(belyi_context* ctx, char** out) {
  return guarded(ctx, [&] {
    require(out, "output pointer is null");
    *out = dup(belyi::config_json(ctx->config).dump());
  });
}

const char* belyi_context_last_error(const belyi_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

const char* belyi_context_last_error_json(const belyi_context* ctx) {
  return ctx ? ctx->last_error_json.c_str() : "";
}

// ---- permutations

belyi_status belyi_perm_parse(belyi_context* ctx, const char* cycles, size_t degree,
                              belyi_perm** out) {
  return guarded(ctx, [&] {
    require(cycles && out, "null argument");
    *out = new belyi_perm{belyi::Permutation::parse(cycles, degree)};
  });
}

belyi_status belyi_perm_from_images(belyi_context* ctx, const uint32_t* images, size_t degree,
                                    belyi_perm** out) {
  return guarded(ctx, [&] {
    require(out && (images || degree == 0), "null argument");
    *out = new belyi_perm{belyi::Permutation(std::vector<belyi::Point>(images, images + degree))};
  });
}

void belyi_perm_destroy(belyi_perm* p) { delete p; }

size_t belyi_perm_degree(const belyi_perm* p) { return p ? p->value.degree() : 0; }

belyi_status belyi_perm_apply(belyi_context* ctx, const belyi_perm* p, uint32_t point,
                              uint32_t* out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = p->value(point);
  });
}

belyi_status belyi_perm_compose(belyi_context* ctx, const belyi_perm* p, const belyi_perm* q,
                                belyi_perm** out) {
  return guarded(ctx, [&] {
    require(p && q && out, "null argument");
    *out = new belyi_perm{belyi::compose(p->value, q->value)};
  });
}

belyi_status belyi_perm_inverse(belyi_context* ctx, const belyi_perm* p, belyi_perm** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = new belyi_perm{belyi::inverse(p->value)};
  });
}

belyi_status belyi_perm_to_string(belyi_context* ctx, const belyi_perm* p,
                                  int include_fixed_points, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = dup(belyi::to_cycle_string(p->value, include_fixed_points != 0));
  });
}

belyi_status belyi_perm_cycle_type(belyi_context* ctx, const belyi_perm* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = dup(belyi::cycle_type(p->value).to_string());
  });
}

// ---- maps

belyi_status belyi_map_parse(belyi_context* ctx, const char* text, belyi_map** out) {
  return guarded(ctx, [&] {
    require(text && out, "null argument");
    *out = new belyi_map{belyi::MapExpr::parse(text)};
  });
}

belyi_status belyi_map_full_chain(belyi_context* ctx, int i, int j, int k, belyi_map** out) {
  return guarded(ctx, [&] {
    require(out, "null argument");
    *out = new belyi_map{belyi::MapExpr::full_chain(belyi::Triple(i, j, k))};
  });
}

void belyi_map_destroy(belyi_map* m) { delete m; }

size_t belyi_map_degree(const belyi_map* m) { return m ? m->value.degree() : 0; }

belyi_status belyi_map_to_string(belyi_context* ctx, const belyi_map* m, char** out) {
  return guarded(ctx, [&] {
    require(m && out, "null argument");
    *out = dup(m->value.to_string());
  });
}

belyi_status belyi_map_monodromy(belyi_context* ctx, const belyi_map* m, belyi_perm** g0,
                                 belyi_perm** g1) {
  return guarded(ctx, [&] {
    require(m && g0 && g1, "null argument");
    belyi::MonodromyPair pair = belyi::monodromy(m->value, ctx->config);
    auto* a = new belyi_perm{std::move(pair.g0)};
    *g1 = new belyi_perm{std::move(pair.g1)};
    *g0 = a;
  });
}

// ---- constellations

belyi_status belyi_constellation_create(belyi_context* ctx, const belyi_perm* g0,
                                        const belyi_perm* g1, belyi_constellation** out) {
  return guarded(ctx, [&] {
    require(g0 && g1 && out, "null argument");
    *out = new belyi_constellation{belyi::Constellation(g0->value, g1->value)};
  });
}

void belyi_constellation_destroy(belyi_constellation* c) { delete c; }

belyi_status belyi_constellation_genus(belyi_context* ctx, const belyi_constellation* c,
                                       int* out) {
  return guarded(ctx, [&] {
    require(c && out, "null argument");
    *out = belyi::genus(c->value);
  });
}

belyi_status belyi_constellation_isomorphic(belyi_context* ctx, const belyi_constellation* a,
                                            const belyi_constellation* b, int* out) {
  return guarded(ctx, [&] {
    require(a && b && out, "null argument");
    *out = belyi::isomorphic(a->value, b->value) ? 1 : 0;
  });
}

belyi_status belyi_constellation_json(belyi_context* ctx, const belyi_constellation* c,
                                      char** out) {
  return guarded(ctx, [&] {
    require(c && out, "null argument");
    *out = dup(belyi::dessin_json(belyi::invariants(c->value)).dump());
  });
}

// ---- commands

belyi_status belyi_cmd_roots(belyi_context* ctx, char** json) {
  return guarded(ctx, [&] {
    require(json, "null argument");
    ctx->config.validate();
    *json = dup(belyi::roots_json(belyi::roots_of_f(ctx->config.root_options())).dump());
  });
}

belyi_status belyi_cmd_monodromy(belyi_context* ctx, const char* map, int check_stability,
                                 char** json) {
  return guarded(ctx, [&] {
    require(map && json, "null argument");
    const belyi::MapExpr e = belyi::MapExpr::parse(map);
    const belyi::MonodromyPair pair = belyi::monodromy(e, ctx->config);
    std::optional<bool> stable;
    if (check_stability) stable = belyi::verify_stability(e, pair, ctx->config);
    *json = dup(belyi::monodromy_json(e, pair, stable, ctx->config).dump());
  });
}

belyi_status belyi_cmd_dessin(belyi_context* ctx, int i, int j, int k, char** json) {
  return guarded(ctx, [&] {
    require(json, "null argument");
    const belyi::Triple t(i, j, k);
    const belyi::MapExpr e = belyi::MapExpr::full_chain(t);
    const belyi::MonodromyPair pair = belyi::monodromy(e, ctx->config);
    belyi::Json doc = belyi::dessin_json(belyi::invariants(belyi::Constellation(pair.g0, pair.g1)));
    doc["triple"] = {t.i(), t.j(), t.k()};
    doc["map"] = e.to_string();
    *json = dup(doc.dump());
  });
}

belyi_status belyi_cmd_orbit(belyi_context* ctx, int i, int j, int k, const char* subgroup,
                             char** json) {
  return guarded(ctx, [&] {
    require(subgroup && json, "null argument");
    const auto sub = belyi::SubgroupSpec::parse(subgroup);
    *json = dup(belyi::orbit_json(belyi::orbit_dessins(sub, belyi::Triple(i, j, k), ctx->config)).dump());
  });
}

belyi_status belyi_cmd_evidence(belyi_context* ctx, uint64_t max_prime, char** json) {
  belyi_status st = guarded(ctx, [&] {
    require(json, "null argument");
    const belyi::EvidenceCertificate cert = belyi::scan_s12_evidence(max_prime);
    *json = dup(belyi::evidence_json(cert).dump());
    if (!cert.complete()) {
      std::string names;
      for (const auto& m : cert.missing()) names += (names.empty() ? "" : ", ") + m;
      throw belyi::Error(belyi::ErrorCode::EvidenceIncomplete, "missing " + names);
    }
  });
  return st;
}

belyi_status belyi_cmd_a5(belyi_context* ctx, char** json) {
  return guarded(ctx, [&] {
    require(json, "null argument");
    *json = dup(belyi::a5_json(belyi::verify_a5()).dump());
  });
}

belyi_status belyi_cmd_render(belyi_context* ctx, const char* map, int samples_per_edge,
                              char** svg, char** stats_json) {
  return guarded(ctx, [&] {
    require(map && svg && stats_json, "null argument");
    belyi::RenderPlan plan;
    if (samples_per_edge > 0) plan.samples_per_edge = samples_per_edge;
    const belyi::MapExpr e = belyi::MapExpr::parse(map);
    belyi::RenderResult r = belyi::render_graph(e, plan, ctx->config);
    belyi::Json stats = belyi::render_json(r.stats);
    stats["map"] = e.to_string();
    char* s = dup(r.svg);
    try {
      *stats_json = dup(stats.dump());
    } catch (...) {
      std::free(s);
      throw;
    }
    *svg = s;
  });
}

}  // extern "C"
