#include "klmedian/io.hpp"

#include "klmedian/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace klmedian {

namespace {

using nlohmann::json;

json curve_to_json(const PolygonalCurve& c) {
  json verts = json::array();
  for (const auto& v : c.vertices) verts.push_back(v.coords);
  return verts;
}

PolygonalCurve curve_from_json(const json& verts, std::size_t d, const std::string& where) {
  if (!verts.is_array() || verts.empty())
    throw io_error(where + ": vertices must be a non-empty array");
  std::vector<Point> points;
  points.reserve(verts.size());
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != d)
      throw io_error(where + ": vertex dimension mismatch");
    Point p;
    for (const auto& x : v) {
      if (!x.is_number()) throw io_error(where + ": vertex coordinate is not a number");
      p.coords.push_back(x.get<double>());
    }
    if (!is_finite(p)) throw io_error(where + ": vertex coordinate is not finite");
    points.push_back(std::move(p));
  }
  return PolygonalCurve(std::move(points));
}

json parse_line(const std::string& line, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw io_error("line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

Dataset read_dataset(std::istream& in) {
  Dataset ds;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::set<int> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const json rec = parse_line(line, line_no);
    if (!rec.is_object())
      throw io_error("line " + std::to_string(line_no) + ": record must be an object");
    if (!have_header) {
      if (!rec.contains("d") || !rec["d"].is_number_unsigned() || rec["d"] == 0)
        throw io_error("line " + std::to_string(line_no) +
                       ": header must carry a positive dimension d");
      ds.d = rec["d"].get<std::size_t>();
      if (rec.contains("name")) ds.name = rec["name"].get<std::string>();
      have_header = true;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    if (!rec.contains("id") || !rec["id"].is_number_integer())
      throw io_error(where + ": record needs an integer id");
    if (!rec.contains("vertices")) throw io_error(where + ": record needs vertices");
    const int id = rec["id"].get<int>();
    if (!seen_ids.insert(id).second) throw io_error(where + ": duplicate id " + std::to_string(id));
    ds.curves.curves.push_back(curve_from_json(rec["vertices"], ds.d, where));
    ds.curves.ids.push_back(id);
  }
  if (!have_header) throw io_error("dataset has no header record");
  return ds;
}

Dataset read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return read_dataset(in);
}

void write_dataset(const Dataset& ds, std::ostream& out) {
  json header{{"d", ds.d}};
  if (!ds.name.empty()) header["name"] = ds.name;
  out << header.dump() << "\n";
  for (std::size_t i = 0; i < ds.curves.size(); ++i) {
    json rec{{"id", ds.curves.ids[i]}, {"vertices", curve_to_json(ds.curves[i])}};
    out << rec.dump() << "\n";
  }
}

void write_dataset_file(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  write_dataset(ds, out);
  if (!out) throw io_error("failed writing " + path);
}

GeneratedInstance generate_instance(const GenerateSpec& spec) {
  if (spec.k == 0 || spec.n == 0 || spec.m == 0 || spec.d == 0)
    throw parameter_error("generate_instance: k, n, m, d must be positive");
  if (spec.radius < 0.0) throw parameter_error("generate_instance: radius must be non-negative");

  RngStream root(spec.seed);
  RngStream base_rng = root.child(1);
  RngStream perturb_rng = root.child(2);

  GeneratedInstance inst;
  inst.dataset.d = spec.d;
  inst.dataset.name = spec.name;
  for (std::size_t c = 0; c < spec.k; ++c) {
    std::vector<Point> verts(spec.m);
    for (auto& v : verts) {
      v.coords.resize(spec.d);
      for (auto& x : v.coords) x = base_rng.uniform_real(0.0, 1.0);
    }
    inst.base_curves.emplace_back(std::move(verts));
  }
  for (std::size_t i = 0; i < spec.n; ++i) {
    const std::size_t base = i % spec.k;
    PolygonalCurve c = inst.base_curves[base];
    if (spec.radius > 0.0)
      for (auto& v : c.vertices)
        for (auto& x : v.coords) x += perturb_rng.uniform_real(-spec.radius, spec.radius);
    inst.dataset.curves.curves.push_back(std::move(c));
    inst.dataset.curves.ids.push_back(static_cast<int>(i));
    inst.planted_assignment.push_back(base);
  }
  inst.planted_bound =
      static_cast<double>(spec.n) * spec.radius * std::sqrt(static_cast<double>(spec.d));
  return inst;
}

std::string sidecar_json(const GeneratedInstance& inst) {
  json base = json::array();
  for (const auto& c : inst.base_curves) base.push_back(curve_to_json(c));
  const json j{{"base_curves", base},
               {"planted_assignment", inst.planted_assignment},
               {"planted_bound", inst.planted_bound}};
  return j.dump(2);
}

std::string report_json(const RunReport& r) {
  json centers = json::array();
  for (const auto& c : r.centers) centers.push_back(curve_to_json(c));
  const json j{
      {"input", {{"n", r.n}, {"m", r.m}, {"d", r.d}}},
      {"params",
       {{"k", r.k},
        {"l", r.l},
        {"beta", r.beta},
        {"delta", r.delta},
        {"epsilon", r.epsilon},
        {"seed", r.seed},
        {"scale", r.scale},
        {"max_grid_points", r.max_grid_points},
        {"max_candidates", r.max_candidates},
        {"algorithm", r.algorithm}}},
      {"centers", centers},
      {"assignment", r.assignment},
      {"total_cost", r.total_cost},
      {"per_cluster_cost", r.per_cluster_cost},
      {"wall_time_seconds", r.wall_time_seconds},
      {"diagnostics",
       {{"recursive_calls", r.diagnostics.recursive_calls},
        {"plugin_calls", r.diagnostics.plugin_calls},
        {"candidates_generated", r.diagnostics.candidates_generated},
        {"max_depth", r.diagnostics.max_depth},
        {"truncated", r.diagnostics.truncated}}}};
  return j.dump(2);
}

RunReport parse_report(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw io_error(std::string("report: ") + e.what());
  }
  RunReport r;
  try {
    r.n = j.at("input").at("n").get<std::size_t>();
    r.m = j.at("input").at("m").get<std::size_t>();
    r.d = j.at("input").at("d").get<std::size_t>();
    const auto& p = j.at("params");
    r.k = p.at("k").get<std::size_t>();
    r.l = p.at("l").get<std::size_t>();
    r.beta = p.at("beta").get<double>();
    r.delta = p.at("delta").get<double>();
    r.epsilon = p.at("epsilon").get<double>();
    r.seed = p.at("seed").get<std::uint64_t>();
    r.scale = p.at("scale").get<double>();
    r.max_grid_points = p.at("max_grid_points").get<std::uint64_t>();
    r.max_candidates = p.at("max_candidates").get<std::uint64_t>();
    r.algorithm = p.at("algorithm").get<std::string>();
    for (const auto& c : j.at("centers")) r.centers.push_back(curve_from_json(c, r.d, "centers"));
    r.assignment = j.at("assignment").get<std::vector<std::size_t>>();
    r.total_cost = j.at("total_cost").get<double>();
    r.per_cluster_cost = j.at("per_cluster_cost").get<std::vector<double>>();
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    const auto& diag = j.at("diagnostics");
    r.diagnostics.recursive_calls = diag.at("recursive_calls").get<std::size_t>();
    r.diagnostics.plugin_calls = diag.at("plugin_calls").get<std::size_t>();
    r.diagnostics.candidates_generated = diag.at("candidates_generated").get<std::size_t>();
    r.diagnostics.max_depth = diag.at("max_depth").get<std::size_t>();
    r.diagnostics.truncated = diag.at("truncated").get<bool>();
  } catch (const json::exception& e) {
    throw io_error(std::string("report: ") + e.what());
  }
  return r;
}

std::vector<PolygonalCurve> parse_centers(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw io_error(std::string("centers: ") + e.what());
  }
  const json& centers = j.is_object() && j.contains("centers") ? j["centers"] : j;
  if (!centers.is_array()) throw io_error("centers: expected an array of curves");
  std::vector<PolygonalCurve> out;
  for (const auto& c : centers) {
    if (!c.is_array() || c.empty() || !c[0].is_array())
      throw io_error("centers: expected vertex lists");
    out.push_back(curve_from_json(c, c[0].size(), "centers"));
  }
  return out;
}

}  // namespace klmedian
