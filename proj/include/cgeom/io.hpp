#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "cgeom/measure.hpp"
#include "cgeom/polytope.hpp"
#include "cgeom/projection.hpp"

namespace cgeom::io {

using json = nlohmann::json;
using Body = std::variant<Polytope, Zonotope>;

/// Accepts {"type": "polytope", "dim", "vertices"}, {"type": "zonotope",
/// "dim", "generators"} and {"type": "box", "halfwidths"}. Extra keys are
/// ignored. Throws GeometryError on malformed input.
Body body_from_json(const json& j);
DiscreteSphericalMeasure measure_from_json(const json& j);

json to_json(const Polytope& p);
json to_json(const Zonotope& z);
json to_json(const Body& b);
json to_json(const DiscreteSphericalMeasure& mu);

json read_json(const std::string& path);
/// Writes `j` to `path`, or to `out` when path is empty. Doubles are printed
/// in shortest round-trip form, so reading the file back is bit-exact.
void write_json(const json& j, const std::string& path, std::ostream& out);

/// ASCII OFF mesh (n = 3).
std::string to_off(const Polytope& p);

/// Width along the last coordinate axis.
double height(const Polytope& p);

}  // namespace cgeom::io
