#pragma once

#include <json.hpp>

#include "swapalg/bridges.hpp"
#include "swapalg/surface.hpp"

namespace swapalg {

using Json = nlohmann::ordered_json;

Json to_json(const PolygonTriangulation& t);
PolygonTriangulation triangulation_from_json(const Json& j);

Json to_json(const Quiver& q);

Json to_json(const PoissonHomReport& r);
Json to_json(const MainPropReport& r);
Json to_json(const SurfaceReport& r);
Json to_json(const PoissonLieReport& r);
Json to_json(const GrassmannReport& r);

// k x n x n rational-string matrices
Json to_json(const FlagConfig& cfg);
FlagConfig flags_from_json(const Json& j);

SurfaceTriangulation surface_from_json(const Json& j);

// keyed by vertex labels
Json coords_to_json(const std::map<CoordVertex, Rational>& coords);

}  // namespace swapalg
