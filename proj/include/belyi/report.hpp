#pragma once

// JSON documents for every command. Floating values are rounded to 15
// significant digits before serialization.

#include <optional>
#include <string>

#include "json.hpp"

#include "belyi/covering.hpp"
#include "belyi/dessin.hpp"
#include "belyi/error.hpp"
#include "belyi/finite_field.hpp"
#include "belyi/galois.hpp"
#include "belyi/monodromy.hpp"
#include "belyi/render.hpp"

namespace belyi {

using Json = nlohmann::ordered_json;

double round15(double v);
Json complex_json(cplx z);

Json config_json(const TrackingConfig& cfg);
// Unknown keys or wrongly typed values throw InvalidArgument; absent keys
// keep the defaults of `base`.
TrackingConfig config_from_json(const Json& j, TrackingConfig base = {});

Json roots_json(const LabeledRoots& roots);
Json evidence_json(const EvidenceCertificate& cert);
Json monodromy_json(const MapExpr& e, const MonodromyPair& pair, std::optional<bool> stability,
                    const TrackingConfig& cfg);
Json dessin_json(const DessinInvariants& inv);
Json passport_json(const Passport& p);
Json orbit_json(const OrbitReport& report);
Json a5_json(const A5Check& check);
Json render_json(const RenderStats& stats);
Json error_json(ErrorCode code, const std::string& message,
                std::optional<std::size_t> position = std::nullopt);

}  // namespace belyi
