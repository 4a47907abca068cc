#include "vitali/instance_io.hpp"

#include <fstream>

namespace vitali {

using nlohmann::json;

namespace {

Scalar scalar_field(const json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string scalar");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json instance_to_json(const Collection& c, const json& meta) {
  json cubes = json::array();
  for (const auto& cube : c) {
    json center = json::array();
    for (const auto& x : cube.center()) center.push_back(to_string(x));
    cubes.push_back({{"center", std::move(center)}, {"radius", to_string(cube.radius())}});
  }
  json out = {{"dim", c.dim()}, {"cubes", std::move(cubes)}};
  if (!meta.is_null()) out["meta"] = meta;
  return out;
}

Collection instance_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw FormatError("instance needs an integer dim >= 1");
  if (!j.contains("cubes") || !j["cubes"].is_array()) throw FormatError("instance needs a cubes array");
  auto dim = j["dim"].get<std::size_t>();
  Collection c(dim);
  std::size_t index = 0;
  for (const auto& entry : j["cubes"]) {
    std::string where = "cube " + std::to_string(index++);
    if (!entry.is_object() || !entry.contains("center") || !entry.contains("radius"))
      throw FormatError(where + " needs center and radius");
    const auto& center_json = entry["center"];
    if (!center_json.is_array() || center_json.size() != dim)
      throw FormatError(where + ": center must have " + std::to_string(dim) + " coordinates");
    std::vector<Scalar> center;
    for (const auto& x : center_json) center.push_back(scalar_field(x, (where + " center").c_str()));
    Scalar radius = scalar_field(entry["radius"], (where + " radius").c_str());
    if (radius <= 0) throw FormatError(where + ": radius must be positive");
    c.push_back(Cube(std::move(center), std::move(radius)));
  }
  return c;
}

json gen_spec_to_json(const GenSpec& spec) {
  json j = {{"kind", to_string(spec.kind)}, {"dim", spec.dim}};
  switch (spec.kind) {
    case GenSpec::Kind::cell:
      break;
    case GenSpec::Kind::dyadic:
      j["levels"] = spec.levels;
      break;
    case GenSpec::Kind::random:
      j["seed"] = spec.seed;
      j["count"] = spec.count;
      j["law"] = spec.law.kind == RadiusLaw::Kind::uniform ? "uniform" : "loguniform";
      j["a"] = to_string(spec.law.a);
      j["b"] = to_string(spec.law.b);
      break;
    case GenSpec::Kind::lacunary: {
      j["seed"] = spec.seed;
      j["per_window"] = spec.per_window;
      if (spec.lacunary) {
        j["lambda"] = to_string(spec.lacunary->lambda);
        j["mu"] = to_string(spec.lacunary->mu);
        json windows = json::array();
        for (const auto& w : spec.lacunary->windows)
          windows.push_back({to_string(w.lo), to_string(w.hi)});
        j["windows"] = std::move(windows);
      }
      break;
    }
  }
  return j;
}

json selection_to_json(const SelectionRecord& rec) {
  return {{"algo", rec.algo},
          {"indices", rec.selection.indices},
          {"achieved_ratio", to_string(rec.selection.achieved_ratio)},
          {"certified_bound", to_string(rec.selection.certified_bound)},
          {"params", rec.params}};
}

SelectionRecord selection_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("selection must be a JSON object");
  if (!j.contains("indices") || !j["indices"].is_array())
    throw FormatError("selection needs an indices array");
  SelectionRecord rec;
  for (const auto& i : j["indices"]) {
    if (!i.is_number_unsigned()) throw FormatError("selection indices must be non-negative integers");
    rec.selection.indices.push_back(i.get<std::size_t>());
  }
  if (!j.contains("achieved_ratio") || !j.contains("certified_bound"))
    throw FormatError("selection needs achieved_ratio and certified_bound");
  rec.selection.achieved_ratio = scalar_field(j["achieved_ratio"], "achieved_ratio");
  rec.selection.certified_bound = scalar_field(j["certified_bound"], "certified_bound");
  if (j.contains("algo") && j["algo"].is_string()) rec.algo = j["algo"].get<std::string>();
  if (j.contains("params")) rec.params = j["params"];
  return rec;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace vitali
