#include <klmedian/io.hpp>
#include <klmedian/oracle.hpp>
#include <klmedian/simplify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace klmedian;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
  std::uint64_t seed = 1;
  double scale = 1.0;
  std::uint64_t caps_grid = 100'000;
  std::uint64_t caps_candidates = 100'000;
  std::size_t threads = 1;
  double tolerance = 1e-12;
};

FrechetConfig frechet_config(const CommonOpts& opts) {
  return FrechetConfig{opts.tolerance, 1e-9};
}

std::size_t curve_index(const Dataset& ds, int id) {
  for (std::size_t i = 0; i < ds.curves.size(); ++i)
    if (ds.curves.ids[i] == id) return i;
  throw parameter_error("no curve with id " + std::to_string(id));
}

int cmd_generate(const std::string& output, const GenerateSpec& spec) {
  const GeneratedInstance inst = generate_instance(spec);
  write_dataset_file(inst.dataset, output);
  std::ofstream sidecar(output + ".truth.json");
  if (!sidecar) throw io_error("cannot open " + output + ".truth.json for writing");
  sidecar << sidecar_json(inst) << "\n";
  std::cout << "wrote " << inst.dataset.curves.size() << " curves to " << output
            << " (planted bound " << inst.planted_bound << ")\n";
  return kExitOk;
}

int cmd_cluster(const std::string& input, const std::string& output, std::size_t k, std::size_t l,
                double epsilon, double delta, const std::string& algorithm,
                const CommonOpts& opts) {
  const Dataset ds = read_dataset_file(input);
  if (ds.curves.empty()) throw parameter_error("dataset has no curves");
  const auto start = std::chrono::steady_clock::now();

  RunReport report;
  report.n = ds.curves.size();
  report.m = ds.curves.max_complexity();
  report.d = ds.d;
  report.k = k;
  report.l = l;
  report.delta = delta;
  report.epsilon = epsilon;
  report.seed = opts.seed;
  report.scale = opts.scale;
  report.max_grid_points = opts.caps_grid;
  report.max_candidates = opts.caps_candidates;
  report.algorithm = algorithm;

  const SampleScale scale{opts.scale};
  const EnumerationCaps caps{opts.caps_grid, opts.caps_candidates};
  const FrechetConfig cfg = frechet_config(opts);
  RngStream rng(opts.seed);

  if (algorithm == "simple" || algorithm == "advanced") {
    ClusterParams params;
    params.k = k;
    params.l = l;
    params.delta = delta;
    params.epsilon = epsilon;
    params.algorithm = algorithm == "advanced" ? PluginKind::kAdvanced : PluginKind::kSimple;
    params.scale = scale;
    params.caps = caps;
    params.frechet = cfg;
    params.threads = opts.threads;
    report.beta = cluster_beta(k, epsilon, params.algorithm);
    ClusteringResult result = cluster(ds.curves, params, rng);
    report.centers = std::move(result.centers);
    report.assignment = std::move(result.assignment);
    report.total_cost = result.total_cost;
    report.diagnostics = result.diagnostics;
  } else if (algorithm == "median5" || algorithm == "median34") {
    if (k != 1) throw parameter_error(algorithm + " computes a single center; use --k 1");
    PolygonalCurve center;
    if (algorithm == "median5") {
      Median5Result r = median5(ds.curves, delta, epsilon, l, scale, caps, cfg, rng);
      center = std::move(r.curve);
      report.diagnostics.truncated = r.truncated;
    } else {
      center = median34(ds.curves, SeedParams{delta, l, scale, cfg}, rng);
    }
    report.centers = {std::move(center)};
    report.assignment.assign(ds.curves.size(), 0);
    report.total_cost = clustering_cost(ds.curves, report.centers, cfg, opts.threads);
  } else {
    throw parameter_error("unknown algorithm: " + algorithm);
  }

  report.per_cluster_cost.assign(report.centers.size(), 0.0);
  for (std::size_t i = 0; i < ds.curves.size(); ++i)
    report.per_cluster_cost[report.assignment[i]] +=
        frechet_distance(ds.curves[i], report.centers[report.assignment[i]], cfg);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string text = report_json(report);
  if (output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(output);
    if (!out) throw io_error("cannot open " + output + " for writing");
    out << text << "\n";
  }
  if (report.diagnostics.truncated)
    std::cerr << "WARNING: enumeration caps truncated the candidate search; "
                 "the approximation guarantee does not apply to this run\n";
  return kExitOk;
}

int cmd_dist(const std::string& input, int id_a, int id_b, const CommonOpts& opts) {
  const Dataset ds = read_dataset_file(input);
  const double d = frechet_distance(ds.curves[curve_index(ds, id_a)],
                                    ds.curves[curve_index(ds, id_b)], frechet_config(opts));
  std::cout.precision(17);
  std::cout << d << "\n";
  return kExitOk;
}

int cmd_simplify(const std::string& input, int id, std::size_t l, const CommonOpts& opts) {
  const Dataset ds = read_dataset_file(input);
  const SimplificationResult r =
      simplify(ds.curves[curve_index(ds, id)], l, frechet_config(opts));
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : r.curve.vertices) verts.push_back(v.coords);
  const nlohmann::json j{{"vertices", verts}, {"indices", r.indices}, {"error", r.error}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& input, const std::string& centers_path, const CommonOpts& opts) {
  const Dataset ds = read_dataset_file(input);
  std::ifstream cf(centers_path);
  if (!cf) throw io_error("cannot open " + centers_path);
  const auto centers = parse_centers(cf);
  const FrechetConfig cfg = frechet_config(opts);
  const double total = clustering_cost(ds.curves, centers, cfg, opts.threads);
  const auto assignment = assign_to_centers(ds.curves, centers, cfg);
  std::vector<double> per_cluster(centers.size(), 0.0);
  for (std::size_t i = 0; i < ds.curves.size(); ++i)
    per_cluster[assignment[i]] += frechet_distance(ds.curves[i], centers[assignment[i]], cfg);
  const nlohmann::json j{{"total_cost", total}, {"per_cluster_cost", per_cluster}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

PolygonalCurve random_curve(RngStream& rng, std::size_t m, std::size_t d) {
  std::vector<Point> verts(m);
  for (auto& v : verts) {
    v.coords.resize(d);
    for (auto& x : v.coords) x = rng.uniform_real(0.0, 1.0);
  }
  return normalize_curve(verts);
}

int cmd_verify(std::uint64_t seed, std::size_t count) {
  RngStream root(seed);
  const FrechetConfig cfg;
  std::size_t checks = 0, failures = 0;
  auto record = [&](bool ok, const char* what) {
    ++checks;
    if (!ok) {
      ++failures;
      std::cout << "FAIL " << what << "\n";
    }
  };

  // Discrete-Frechet sandwich after densification.
  RngStream sandwich_rng = root.child(1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto a = random_curve(sandwich_rng, 2 + sandwich_rng.uniform_index(9), 2);
    const auto b = random_curve(sandwich_rng, 2 + sandwich_rng.uniform_index(9), 2);
    const double h = 0.01;
    const double df = frechet_distance(a, b, cfg);
    const double dd = discrete_frechet(densify(a, h), densify(b, h));
    record(dd >= df - 1e-6 && dd <= df + h + 1e-6, "sandwich");
  }

  // Single-curve shortcutting post-conditions.
  RngStream shortcut_rng = root.child(2);
  for (std::size_t i = 0; i < count; ++i) {
    auto sigma = random_curve(shortcut_rng, 2 + shortcut_rng.uniform_index(7), 2);
    const auto tau = random_curve(shortcut_rng, 2 + shortcut_rng.uniform_index(7), 2);
    const double r = frechet_distance(sigma, tau, cfg);
    const auto sp = simple_shortcut(sigma, tau, cfg);
    bool in_balls = true;
    for (const auto& v : sp.vertices) {
      bool ok = false;
      for (const auto& w : tau.vertices) ok = ok || distance(v, w) <= r + 1e-6;
      in_balls = in_balls && ok;
    }
    record(sp.complexity() <= 2 * sigma.complexity() - 2, "shortcut complexity");
    record(in_balls, "shortcut vertices in balls");
    record(frechet_distance(sp, tau, cfg) <= r + 1e-6, "shortcut distance");
  }

  // Grid-median sanity: exact recovery of an on-grid singleton, and
  // refinement monotonicity.
  RngStream grid_rng = root.child(3);
  {
    const PolygonalCurve c({Point{0.0, 0.0}, Point{0.5, 0.5}});
    CurveSet single;
    single.add(c);
    GridSearchSpec spec{Point{0.0, 0.0}, Point{1.0, 1.0}, 0.25, 2, 1'000'000};
    const auto r = brute_force_median(single, 2, spec, cfg);
    record(r.cost <= 1e-9, "grid median exact recovery");
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(count, 5); ++i) {
    CurveSet t;
    for (int c = 0; c < 3; ++c) t.add(random_curve(grid_rng, 2, 2));
    GridSearchSpec coarse{Point{0.0, 0.0}, Point{1.0, 1.0}, 0.5, 2, 1'000'000};
    GridSearchSpec fine = coarse;
    fine.resolution = 0.25;
    const auto rc = brute_force_median(t, 2, coarse, cfg);
    const auto rf = brute_force_median(t, 2, fine, cfg);
    record(rf.cost <= rc.cost + 1e-9, "grid median refinement monotonicity");
  }

  std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << (checks - failures) << "/" << checks
            << " checks)\n";
  return failures == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(k,l)-median clustering of polygonal curves under the Frechet distance"};
  app.require_subcommand(1);

  CommonOpts opts;
  GenerateSpec gen;
  std::string input, output, centers_path, algorithm = "simple";
  std::size_t k = 1, l = 2;
  double epsilon = 0.1, delta = 0.1;
  int id_a = 0, id_b = 0;
  std::size_t verify_count = 50;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opts.seed, "random seed");
    cmd->add_option("--scale", opts.scale, "multiplier on sample-size formulas (1 = faithful)");
    cmd->add_option("--caps-grid", opts.caps_grid, "max grid points per cover/pool");
    cmd->add_option("--caps-candidates", opts.caps_candidates, "max candidates enumerated");
    cmd->add_option("--threads", opts.threads, "worker thread count");
    cmd->add_option("--tolerance", opts.tolerance, "absolute distance tolerance");
  };

  auto* cgen = app.add_subcommand("generate", "emit a planted-cluster dataset");
  cgen->add_option("--k", gen.k, "planted clusters");
  cgen->add_option("--n", gen.n, "number of curves")->required();
  cgen->add_option("--m", gen.m, "vertices per curve");
  cgen->add_option("--d", gen.d, "dimension");
  cgen->add_option("--radius", gen.radius, "perturbation radius");
  cgen->add_option("--seed", gen.seed, "random seed");
  cgen->add_option("--name", gen.name, "dataset name");
  cgen->add_option("--output", output, "output path")->required();

  auto* cclu = app.add_subcommand("cluster", "run (k,l)-median clustering");
  cclu->add_option("--input", input, "dataset path")->required();
  cclu->add_option("--output", output, "report path (stdout if omitted)");
  cclu->add_option("--k", k, "number of centers");
  cclu->add_option("--l", l, "center complexity");
  cclu->add_option("--epsilon", epsilon, "approximation parameter");
  cclu->add_option("--delta", delta, "failure probability");
  cclu->add_option("--algorithm", algorithm, "simple|advanced|median5|median34")
      ->check(CLI::IsMember({"simple", "advanced", "median5", "median34"}));
  add_common(cclu);

  auto* cdist = app.add_subcommand("dist", "Frechet distance between two curves");
  cdist->add_option("--input", input, "dataset path")->required();
  cdist->add_option("--id-a", id_a, "first curve id")->required();
  cdist->add_option("--id-b", id_b, "second curve id")->required();
  add_common(cdist);

  auto* csim = app.add_subcommand("simplify", "l-simplification of a curve");
  csim->add_option("--input", input, "dataset path")->required();
  csim->add_option("--id", id_a, "curve id")->required();
  csim->add_option("--l", l, "target complexity");
  add_common(csim);

  auto* ceval = app.add_subcommand("eval", "recompute cost of centers over a dataset");
  ceval->add_option("--input", input, "dataset path")->required();
  ceval->add_option("--centers", centers_path, "report or centers file")->required();
  add_common(ceval);

  auto* cver = app.add_subcommand("verify", "run the oracle verification suites");
  cver->add_option("--seed", opts.seed, "random seed");
  cver->add_option("--count", verify_count, "checks per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cgen->parsed()) return cmd_generate(output, gen);
    if (cclu->parsed()) return cmd_cluster(input, output, k, l, epsilon, delta, algorithm, opts);
    if (cdist->parsed()) return cmd_dist(input, id_a, id_b, opts);
    if (csim->parsed()) return cmd_simplify(input, id_a, l, opts);
    if (ceval->parsed()) return cmd_eval(input, centers_path, opts);
    if (cver->parsed()) return cmd_verify(opts.seed, verify_count);
  } catch (const parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
