// Command-line front end over the C interface.

#include <belyi/belyi.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 2, kNumeric = 3, kIncomplete = 4 };

bool pretty = false;

int exit_for(belyi_status st) {
  switch (st) {
    case BELYI_OK: return kOk;
    case BELYI_EVIDENCE_INCOMPLETE: return kIncomplete;
    case BELYI_INVALID_ARGUMENT:
    case BELYI_DEGREE_MISMATCH:
    case BELYI_POINT_OUT_OF_RANGE:
    case BELYI_SYNTAX:
    case BELYI_BAD_TRIPLE:
    case BELYI_MISPLACED_PRIM:
    case BELYI_EMPTY:
    case BELYI_BAD_WORD:
    case BELYI_NOT_PRIME:
    case BELYI_NOT_BELYI:
      return kUsage;
    default:
      return kNumeric;
  }
}

void emit(const char* json) {
  // Documents from the library are compact; re-indent on request.
  if (pretty) std::cout << ordered_json::parse(json).dump(2) << '\n';
  else std::cout << json << '\n';
}

void usage_error(const std::string& code, const std::string& message) {
  std::cerr << ordered_json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

int report_failure(belyi_context* ctx, belyi_status st) {
  const char* err = belyi_context_last_error_json(ctx);
  if (err && *err) std::cerr << err << '\n';
  else usage_error(belyi_status_name(st), belyi_context_last_error(ctx));
  return exit_for(st);
}

// Prints the document (if any), frees it and maps the status to an exit code.
int finish(belyi_context* ctx, belyi_status st, char* json) {
  if (json) {
    emit(json);
    belyi_string_free(json);
  }
  return st == BELYI_OK ? kOk : report_failure(ctx, st);
}

struct TripleArg {
  int v[3] = {0, 0, 0};
};

bool parse_triple(const std::string& text, TripleArg& t) {
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  if (!(in >> t.v[0] >> c1 >> t.v[1] >> c2 >> t.v[2]) || c1 != ',' || c2 != ',') return false;
  in >> std::ws;
  return in.eof();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belyi maps on the elliptic curves y^2 = (x - r_i)(x - r_j)(x - r_k): "
               "monodromy, dessins, Galois orbits and drawings"};
  app.require_subcommand(1);

  std::string config_path;
  double seed_offset = 0;
  app.add_flag("--json-pretty", pretty, "Indent JSON output");
  app.add_option("--config", config_path, "Tracking configuration as a JSON file");
  auto* seed_opt = app.add_option("--seed-offset", seed_offset,
                                  "Start angle (radians) of the polynomial root finder");

  auto* roots = app.add_subcommand("roots", "The 12 labelled roots of f");

  std::string map_text;
  bool stability = false;
  auto* mono = app.add_subcommand("monodromy", "Monodromy pair of a covering chain");
  mono->add_option("--map", map_text, "Chain such as \"b(1,1).b(10,1).f.pi(2,7,11)\"")->required();
  mono->add_flag("--stability", stability, "Recompute under a perturbed loop and report agreement");

  std::string triple_text;
  auto* dessin = app.add_subcommand("dessin", "Dessin invariants of the full chain over a triple");
  dessin->add_option("--triple", triple_text, "Root labels, e.g. 2,7,11")->required();

  std::string subgroup = "a";
  auto* orbit = app.add_subcommand("orbit", "Galois orbit of a triple with its dessins");
  orbit->add_option("--triple", triple_text, "Root labels, e.g. 2,7,11")->required();
  orbit->add_option("--subgroup", subgroup, "Generator words over a, b, A, B, comma separated")
      ->capture_default_str();

  std::uint64_t max_prime = 2000;
  auto* evidence = app.add_subcommand("evidence", "Factorization witnesses for the Galois group of f");
  evidence->add_option("--max-prime", max_prime, "Largest prime scanned")->capture_default_str();

  std::string out_path;
  int samples = 0;
  auto* render = app.add_subcommand("render", "Draw the lifted graph as SVG");
  render->add_option("--map", map_text, "Covering chain")->required();
  render->add_option("--out", out_path, "SVG output file")->required();
  render->add_option("--samples", samples, "Polyline points per edge (>= 8)");

  auto* a5 = app.add_subcommand("a5", "Check the A5 generators and relations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    usage_error("USAGE", e.what());
    return kUsage;
  }

  belyi_context* ctx = nullptr;
  if (belyi_context_create(&ctx) != BELYI_OK) {
    usage_error("INTERNAL", "could not create a library context");
    return kNumeric;
  }
  struct Guard {
    belyi_context* c;
    ~Guard() { belyi_context_destroy(c); }
  } guard{ctx};

  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      usage_error("INVALID_ARGUMENT", "cannot read config file " + config_path);
      return kUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (belyi_status st = belyi_context_set_config_json(ctx, buf.str().c_str()); st != BELYI_OK)
      return report_failure(ctx, st);
  }
  if (seed_opt->count() > 0) {
    if (belyi_status st = belyi_context_set_root_offset(ctx, seed_offset); st != BELYI_OK)
      return report_failure(ctx, st);
  }

  TripleArg t;
  if ((dessin->parsed() || orbit->parsed()) && !parse_triple(triple_text, t)) {
    usage_error("BAD_TRIPLE", "expected three comma separated labels, got '" + triple_text + "'");
    return kUsage;
  }

  char* json = nullptr;
  belyi_status st = BELYI_OK;
  if (roots->parsed()) st = belyi_cmd_roots(ctx, &json);
  else if (mono->parsed()) st = belyi_cmd_monodromy(ctx, map_text.c_str(), stability ? 1 : 0, &json);
  else if (dessin->parsed()) st = belyi_cmd_dessin(ctx, t.v[0], t.v[1], t.v[2], &json);
  else if (orbit->parsed()) st = belyi_cmd_orbit(ctx, t.v[0], t.v[1], t.v[2], subgroup.c_str(), &json);
  else if (evidence->parsed()) st = belyi_cmd_evidence(ctx, max_prime, &json);
  else if (a5->parsed()) st = belyi_cmd_a5(ctx, &json);
  if (!render->parsed()) return finish(ctx, st, json);

  {
    char* svg = nullptr;
    st = belyi_cmd_render(ctx, map_text.c_str(), samples, &svg, &json);
    if (st != BELYI_OK) return report_failure(ctx, st);
    std::ofstream out(out_path, std::ios::binary);
    out << svg;
    belyi_string_free(svg);
    if (!out) {
      belyi_string_free(json);
      usage_error("INVALID_ARGUMENT", "cannot write " + out_path);
      return kUsage;
    }
    ordered_json doc = ordered_json::parse(json);
    belyi_string_free(json);
    doc["out"] = out_path;
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << '\n';
    return kOk;
  }
}
