#include "cgeom/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cgeom/shapes.hpp"

namespace cgeom::io {
namespace {

Vec vec_from_json(const json& j, int dim) {
  if (!j.is_array()) throw GeometryError("expected a coordinate array");
  if (dim >= 0 && static_cast<int>(j.size()) != dim) throw GeometryError("coordinate count does not match dim");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number()) throw GeometryError("coordinate is not a number");
    v[static_cast<Eigen::Index>(k)] = j[k].get<double>();
  }
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v[k]);
  return a;
}

std::vector<Vec> points_from_json(const json& j, const char* key, int dim) {
  if (!j.contains(key) || !j[key].is_array() || j[key].empty()) {
    throw GeometryError(std::string("missing or empty \"") + key + "\"");
  }
  std::vector<Vec> pts;
  for (const json& p : j[key]) pts.push_back(vec_from_json(p, dim));
  return pts;
}

int dim_from_json(const json& j) {
  if (!j.contains("dim")) return -1;
  if (!j["dim"].is_number_integer()) throw GeometryError("\"dim\" must be an integer");
  return j["dim"].get<int>();
}

}  // namespace

Body body_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw GeometryError("body file needs a \"type\"");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "polytope") {
    return Polytope::from_vertices(points_from_json(j, "vertices", dim_from_json(j)));
  }
  if (type == "zonotope") {
    return Zonotope(points_from_json(j, "generators", dim_from_json(j)));
  }
  if (type == "box") {
    if (!j.contains("halfwidths")) throw GeometryError("box needs \"halfwidths\"");
    const Vec hw = vec_from_json(j["halfwidths"], -1);
    if (hw.size() < 2) throw DegenerateBody();
    return shapes::box(hw);
  }
  throw GeometryError("unknown body type \"" + type + "\"");
}

DiscreteSphericalMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw InvalidMeasure("measure file needs \"atoms\"");
  }
  int dim = dim_from_json(j);
  std::vector<Atom> atoms;
  for (const json& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("u") || !a.contains("w") || !a["w"].is_number()) {
      throw InvalidMeasure("atom needs \"u\" and numeric \"w\"");
    }
    Vec u = vec_from_json(a["u"], dim);
    if (dim < 0) dim = static_cast<int>(u.size());
    atoms.push_back({std::move(u), a["w"].get<double>()});
  }
  if (dim < 1) throw InvalidMeasure("measure dimension unknown");
  return DiscreteSphericalMeasure(dim, std::move(atoms));
}

json to_json(const Polytope& p) {
  json j;
  j["type"] = "polytope";
  j["dim"] = p.dim();
  j["vertices"] = json::array();
  for (const Vec& v : p.vertices()) j["vertices"].push_back(vec_to_json(v));
  j["facets"] = json::array();
  for (const Facet& f : p.facets()) {
    j["facets"].push_back({{"normal", vec_to_json(f.normal)}, {"offset", f.offset}, {"area", f.area}});
  }
  j["volume"] = p.volume();
  return j;
}

json to_json(const Zonotope& z) {
  json j;
  j["type"] = "zonotope";
  j["dim"] = z.dim();
  j["generators"] = json::array();
  for (const Vec& v : z.generators()) j["generators"].push_back(vec_to_json(v));
  return j;
}

json to_json(const Body& b) {
  return std::visit([](const auto& x) { return to_json(x); }, b);
}

json to_json(const DiscreteSphericalMeasure& mu) {
  json j;
  j["dim"] = mu.dim();
  j["atoms"] = json::array();
  for (const Atom& a : mu.atoms()) j["atoms"].push_back({{"u", vec_to_json(a.u)}, {"w", a.w}});
  return j;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw GeometryError(path + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw GeometryError("cannot write " + path);
  file << text;
}

std::string to_off(const Polytope& p) {
  if (p.dim() != 3) throw GeometryError("OFF export needs n = 3");
  std::ostringstream s;
  s << std::setprecision(17);
  s << "OFF\n" << p.vertices().size() << ' ' << p.facets().size() << " 0\n";
  for (const Vec& v : p.vertices()) s << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const Facet& f : p.facets()) {
    s << f.cycle.size();
    for (int v : f.cycle) s << ' ' << v;
    s << '\n';
  }
  return s.str();
}

double height(const Polytope& p) {
  const Vec e = Vec::Unit(p.dim(), p.dim() - 1);
  return p.support(e) + p.support(-e);
}

}  // namespace cgeom::io
