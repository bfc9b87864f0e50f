#include "belyi/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace belyi {

double round15(double v) {
  if (!std::isfinite(v) || v == 0) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

Json complex_json(cplx z) { return {{"re", round15(z.real())}, {"im", round15(z.imag())}}; }

Json config_json(const TrackingConfig& c) {
  return {{"newton_tol", round15(c.newton_tol)},
          {"max_newton_iters", c.max_newton_iters},
          {"initial_step", round15(c.initial_step)},
          {"min_step", round15(c.min_step)},
          {"match_tol", round15(c.match_tol)},
          {"separation_factor", round15(c.separation_factor)},
          {"root_angle_offset", round15(c.root_angle_offset)}};
}

TrackingConfig config_from_json(const Json& j, TrackingConfig c) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "tracking config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    auto number = [&]() {
      if (!value.is_number())
        throw Error(ErrorCode::InvalidArgument, "config key '" + key + "' must be a number");
      return value.get<double>();
    };
    if (key == "newton_tol") c.newton_tol = number();
    else if (key == "max_newton_iters") {
      if (!value.is_number_integer())
        throw Error(ErrorCode::InvalidArgument, "config key 'max_newton_iters' must be an integer");
      c.max_newton_iters = value.get<int>();
    }
    else if (key == "initial_step") c.initial_step = number();
    else if (key == "min_step") c.min_step = number();
    else if (key == "match_tol") c.match_tol = number();
    else if (key == "separation_factor") c.separation_factor = number();
    else if (key == "root_angle_offset") c.root_angle_offset = number();
    else throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
  }
  c.validate();
  return c;
}

Json roots_json(const LabeledRoots& roots) {
  Json arr = Json::array();
  cplx sum = 0, prod = 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    sum += roots.roots[i];
    prod *= roots.roots[i];
    arr.push_back({{"label", i + 1},
                   {"re", round15(roots.roots[i].real())},
                   {"im", round15(roots.roots[i].imag())},
                   {"residual", round15(roots.residuals[i])}});
  }
  return {{"roots", arr},
          {"sum", complex_json(sum)},
          {"product", complex_json(prod)},
          {"min_argument_gap", round15(roots.min_argument_gap())}};
}

namespace {

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"prime", w->prime}, {"pattern", w->pattern}};
}

}  // namespace

Json evidence_json(const EvidenceCertificate& cert) {
  return {{"witness_transitive", witness_json(cert.transitive)},
          {"witness_11cycle", witness_json(cert.long_cycle)},
          {"witness_transposition", witness_json(cert.transposition)},
          {"primes_scanned", cert.primes_scanned},
          {"max_prime", cert.max_prime},
          {"complete", cert.complete()},
          {"missing", cert.missing()}};
}

Json monodromy_json(const MapExpr& e, const MonodromyPair& pair, std::optional<bool> stability,
                    const TrackingConfig& cfg) {
  Json j = {{"map", e.to_string()},
            {"degree", e.degree()},
            {"g0", to_cycle_string(pair.g0)},
            {"g1", to_cycle_string(pair.g1)},
            {"ginf", to_cycle_string(pair.ginf())},
            {"cycle_types",
             {{"g0", cycle_type(pair.g0).to_string()},
              {"g1", cycle_type(pair.g1).to_string()},
              {"ginf", cycle_type(pair.ginf()).to_string()}}}};
  j["stability"] = stability ? Json(*stability) : Json(nullptr);
  j["config_echo"] = config_json(cfg);
  return j;
}

Json passport_json(const Passport& p) {
  return {{"black", p.black.parts}, {"white", p.white.parts}, {"faces", p.faces.parts}};
}

Json dessin_json(const DessinInvariants& inv) {
  return {{"degree", inv.degree},
          {"genus", inv.genus},
          {"black_count", inv.black_count},
          {"white_count", inv.white_count},
          {"face_count", inv.face_count},
          {"passport", passport_json(inv.passport)},
          {"clean", inv.clean},
          {"bouquets", inv.bouquets ? Json(inv.bouquets->parts) : Json(nullptr)},
          {"canonical_hash", inv.canonical_hash}};
}

namespace {

Json triple_json(const Triple& t) { return Json::array({t.i(), t.j(), t.k()}); }

}  // namespace

Json orbit_json(const OrbitReport& r) {
  Json orbit = Json::array(), passports = Json::array(), genus = Json::array(),
       hashes = Json::array(), classes = Json::array();
  for (const auto& e : r.entries) {
    orbit.push_back(triple_json(e.triple));
    passports.push_back(passport_json(e.invariants.passport));
    genus.push_back(e.invariants.genus);
    hashes.push_back(e.invariants.canonical_hash);
  }
  for (const auto& cls : r.iso_classes) {
    Json c = Json::array();
    for (const auto& t : cls) c.push_back(triple_json(t));
    classes.push_back(c);
  }
  return {{"subgroup", r.subgroup},
          {"base_triple", triple_json(r.base)},
          {"orbit", orbit},
          {"passports", passports},
          {"genus", genus},
          {"canonical_hashes", hashes},
          {"iso_classes", classes},
          {"shared_passport", r.shared_passport}};
}

Json a5_json(const A5Check& c) {
  const auto& g = generators_a5();
  return {{"a", to_cycle_string(g.a, false)},
          {"b", to_cycle_string(g.b, false)},
          {"ab", c.product},
          {"relations_hold", c.relations_hold},
          {"order", c.order}};
}

Json render_json(const RenderStats& s) {
  return {{"arcs", s.arcs},
          {"black_dots", s.black.size()},
          {"white_dots", s.white.size()},
          {"sheets", s.sheets},
          {"black_valencies", s.black_valencies()},
          {"white_valencies", s.white_valencies()},
          {"max_endpoint_error", round15(s.max_endpoint_error)}};
}

Json error_json(ErrorCode code, const std::string& message, std::optional<std::size_t> position) {
  Json err = {{"code", std::string(to_string(code))}, {"message", message}};
  if (position) err["position"] = *position;
  return {{"error", err}};
}

}  // namespace belyi
