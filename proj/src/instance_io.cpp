#include <cmath>
#include <fstream>
#include <sstream>

#include "rofw/harness.hpp"

namespace rofw {
namespace {

// Integral values are written as JSON integers so integer cost data stays exact.
Json real_to_json(double value) {
  if (std::isfinite(value) && std::floor(value) == value && std::abs(value) < 9007199254740992.0) {
    return Json(static_cast<std::int64_t>(value));
  }
  return Json(value);
}

double real_from_json(const Json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    std::istringstream in(text);
    in.imbue(std::locale::classic());
    double value = 0.0;
    in >> value;
    if (!in || !in.eof()) throw InstanceError(std::string(what) + ": bad decimal '" + text + "'");
    return value;
  }
  throw InstanceError(std::string(what) + ": expected a number");
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(real_to_json(v(i)));
  return arr;
}

Vector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InstanceError(std::string(what) + ": expected an array");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = real_from_json(j[i], what);
  return v;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InstanceError(std::string("instance: missing field '") + key + "'");
  }
  return j.at(key);
}

Json uncertainty_to_json(const UncertaintySet& set) {
  Json u;
  if (const auto* box = std::get_if<Box>(&set)) {
    u["type"] = "box";
    u["lower"] = vector_to_json(box->lower());
    u["upper"] = vector_to_json(box->upper());
  } else if (const auto* budget = std::get_if<Budgeted>(&set)) {
    u["type"] = "budgeted";
    u["c_lower"] = vector_to_json(budget->c_lower());
    u["d"] = vector_to_json(budget->d());
    u["gamma"] = real_to_json(budget->gamma());
  } else {
    const auto& hull = std::get<ScenarioHull>(set);
    u["type"] = "scenarios";
    Json rows = Json::array();
    for (Index s = 0; s < hull.num_scenarios(); ++s) rows.push_back(vector_to_json(hull.scenarios().col(s)));
    u["scenarios"] = rows;
  }
  return u;
}

UncertaintySet uncertainty_from_json(const Json& u) {
  const std::string type = field(u, "type").get<std::string>();
  if (type == "box") {
    return Box(vector_from_json(field(u, "lower"), "box.lower"), vector_from_json(field(u, "upper"), "box.upper"));
  }
  if (type == "budgeted") {
    return Budgeted(vector_from_json(field(u, "c_lower"), "budgeted.c_lower"),
                    vector_from_json(field(u, "d"), "budgeted.d"), real_from_json(field(u, "gamma"), "gamma"));
  }
  if (type == "scenarios") {
    const Json& rows = field(u, "scenarios");
    if (!rows.is_array() || rows.empty()) throw InstanceError("scenarios: need a nonempty array");
    const Vector first = vector_from_json(rows[0], "scenario");
    Matrix C(first.size(), static_cast<Index>(rows.size()));
    for (std::size_t s = 0; s < rows.size(); ++s) {
      const Vector c = vector_from_json(rows[s], "scenario");
      if (c.size() != first.size()) throw InstanceError("scenarios: inconsistent lengths");
      C.col(static_cast<Index>(s)) = c;
    }
    return ScenarioHull(C);
  }
  throw InstanceError("uncertainty: unknown type '" + type + "'");
}

}  // namespace

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Mst:
      return "mst";
    case InstanceKind::Tsp:
      return "tsp";
    case InstanceKind::VertexList:
      return "vertex_list";
  }
  return "unknown";
}

InstanceKind parse_instance_kind(const std::string& name) {
  if (name == "mst") return InstanceKind::Mst;
  if (name == "tsp") return InstanceKind::Tsp;
  if (name == "vertex_list") return InstanceKind::VertexList;
  throw InstanceError("unknown instance kind '" + name + "'");
}

Index InstanceFile::dimension() const {
  if (kind == InstanceKind::VertexList) return vertices.empty() ? 0 : vertices.front().size();
  return graph ? graph->dimension() : 0;
}

Json instance_to_json(const InstanceFile& instance) {
  Json j;
  j["version"] = instance.version;
  j["kind"] = to_string(instance.kind);
  j["name"] = instance.name;
  if (instance.seed) j["seed"] = *instance.seed;
  if (instance.graph) {
    Json edges = Json::array();
    for (const auto& [u, v] : instance.graph->edges) edges.push_back({u, v});
    j["graph"] = {{"num_vertices", instance.graph->num_vertices}, {"edges", edges}};
  }
  if (!instance.vertices.empty()) {
    Json points = Json::array();
    for (const Vector& v : instance.vertices) points.push_back(vector_to_json(v));
    j["vertices"] = points;
  }
  if (!instance.uncertainty) throw InstanceError("instance: missing uncertainty set");
  j["uncertainty"] = uncertainty_to_json(*instance.uncertainty);
  if (instance.constants) {
    j["constants"] = {{"D", real_to_json(instance.constants->D)},
                      {"M", real_to_json(instance.constants->M)},
                      {"M_max", real_to_json(instance.constants->M_max)}};
  }
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  try {
    InstanceFile out;
    out.version = field(j, "version").get<int>();
    if (out.version != kInstanceSchemaVersion) {
      throw InstanceError("instance: unsupported schema version " + std::to_string(out.version));
    }
    out.kind = parse_instance_kind(field(j, "kind").get<std::string>());
    out.name = j.value("name", std::string("instance"));
    if (j.contains("seed")) out.seed = j.at("seed").get<std::uint64_t>();
    if (out.kind == InstanceKind::VertexList) {
      const Json& points = field(j, "vertices");
      if (!points.is_array() || points.empty()) throw InstanceError("vertices: need a nonempty array");
      for (const Json& p : points) out.vertices.push_back(vector_from_json(p, "vertex"));
    } else {
      const Json& g = field(j, "graph");
      GraphInstance graph;
      graph.num_vertices = field(g, "num_vertices").get<int>();
      for (const Json& e : field(g, "edges")) {
        if (!e.is_array() || e.size() != 2) throw InstanceError("graph: edges must be [u, v] pairs");
        graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      graph.validate();
      out.graph = std::move(graph);
    }
    out.uncertainty = uncertainty_from_json(field(j, "uncertainty"));
    if (j.contains("constants")) {
      const Json& c = j.at("constants");
      out.constants = GeometricConstants{real_from_json(field(c, "D"), "D"), real_from_json(field(c, "M"), "M"),
                                         real_from_json(field(c, "M_max"), "M_max")};
    }
    if (dimension(*out.uncertainty) != out.dimension()) {
      throw InstanceError("instance: uncertainty dimension does not match the feasible region");
    }
    return out;
  } catch (const Json::exception& e) {
    throw InstanceError(std::string("instance: malformed JSON field: ") + e.what());
  }
}

std::string dump_instance(const InstanceFile& instance) { return instance_to_json(instance).dump(2) + "\n"; }

InstanceFile read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InstanceError("instance " + path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_instance(const std::filesystem::path& path, const InstanceFile& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InstanceError("cannot write instance file " + path.string());
  out << dump_instance(instance);
}

ProblemInstance make_problem(const InstanceFile& instance) {
  if (!instance.uncertainty) throw InstanceError("instance: missing uncertainty set");
  std::shared_ptr<const LinearOracle> lmo;
  switch (instance.kind) {
    case InstanceKind::Mst:
      if (!instance.graph) throw InstanceError("instance: mst needs a graph");
      lmo = std::make_shared<MstOracle>(*instance.graph);
      break;
    case InstanceKind::Tsp:
      if (!instance.graph) throw InstanceError("instance: tsp needs a graph");
      lmo = std::make_shared<TspOracle>(*instance.graph);
      break;
    case InstanceKind::VertexList:
      lmo = std::make_shared<VertexListOracle>(instance.vertices);
      break;
  }
  std::optional<double> diameter;
  if (instance.constants && instance.constants->D > 0.0) diameter = instance.constants->D;
  return ProblemInstance(instance.name, lmo, *instance.uncertainty, diameter, instance.constants);
}

}  // namespace rofw
