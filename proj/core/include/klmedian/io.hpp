#ifndef KLMEDIAN_IO_HPP
#define KLMEDIAN_IO_HPP

#include "klmedian/kmedian.hpp"

#include <iosfwd>
#include <string>

namespace klmedian {

// Thrown on unreadable files or malformed records; messages carry the line
// number where applicable.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Newline-delimited JSON: a header object {"d": ..., "name": ...} followed by
// one record {"id": ..., "vertices": [[...], ...]} per curve. All records
// share the header dimension; ids are unique.
struct Dataset {
  std::size_t d = 0;
  std::string name;
  CurveSet curves;
};

Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);
void write_dataset(const Dataset& ds, std::ostream& out);
void write_dataset_file(const Dataset& ds, const std::string& path);

struct GenerateSpec {
  std::size_t k = 1;      // planted clusters
  std::size_t n = 1;      // curves to emit
  std::size_t m = 2;      // vertices per curve
  std::size_t d = 2;
  double radius = 0.0;    // per-coordinate perturbation, uniform in [-radius, radius]
  std::uint64_t seed = 0;
  std::string name;
};

struct GeneratedInstance {
  Dataset dataset;
  std::vector<PolygonalCurve> base_curves;
  std::vector<std::size_t> planted_assignment;  // base index per curve
  double planted_bound = 0.0;                   // n * radius * sqrt(d)
};

// Base curves with vertices uniform in the unit box; curve i perturbs base
// i mod k. Deterministic in the seed.
GeneratedInstance generate_instance(const GenerateSpec& spec);

// Sidecar describing the planted ground truth (base curves, assignment,
// cost upper bound).
std::string sidecar_json(const GeneratedInstance& inst);

struct RunReport {
  std::size_t n = 0, m = 0, d = 0;
  std::size_t k = 0, l = 0;
  double beta = 0.0, delta = 0.0, epsilon = 0.0;
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::uint64_t max_grid_points = 0, max_candidates = 0;
  std::string algorithm;
  std::vector<PolygonalCurve> centers;
  std::vector<std::size_t> assignment;
  double total_cost = 0.0;
  std::vector<double> per_cluster_cost;
  double wall_time_seconds = 0.0;
  ClusteringDiagnostics diagnostics;
};

std::string report_json(const RunReport& report);
RunReport parse_report(std::istream& in);

// Centers of a report file; used by the eval command.
std::vector<PolygonalCurve> parse_centers(std::istream& in);

}  // namespace klmedian

#endif
