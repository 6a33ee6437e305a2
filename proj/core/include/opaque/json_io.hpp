#pragma once

#include <json.hpp>
#include <string>

#include "opaque/convexify.hpp"
#include "opaque/stability.hpp"
#include "opaque/weak_barrier.hpp"

namespace opaque {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Schemas (fields in canonical order):
//   polytope: {"dim": 2|3, "vertices": [[x, y(, z)], ...]}
//   ball:     {"center": [...], "radius": r}
//   measure:  {"dim": n, "atoms": [{"u": [...], "w": w}, ...], "even": bool}
//   barrier:  {"dim": 2, "segments": [[[x,y],[x,y]], ...]} or
//             {"dim": 3, "triangles": [[[...],[...],[...]], ...]}
Json to_json(const Polytope& P);
Json to_json(const Ball& b);
Json to_json(const DirectionalMeasure& mu);
Json to_json(const Barrier& B);
Json to_json(const CertifiedBool& cb);
Json to_json(const McReport& mc);
Json to_json(const StabilityReport& rep);
Json to_json(const CylinderReport& rep);
Json to_json(const MinkowskiSolution& sol);

Polytope polytope_from_json(const Json& j);  // facets recomputed on load
Ball ball_from_json(const Json& j);
DirectionalMeasure measure_from_json(const Json& j);
Barrier barrier_from_json(const Json& j);

std::string beta_table_csv(const StabilityReport& rep);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace opaque
