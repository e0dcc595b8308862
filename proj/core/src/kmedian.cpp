#include "klmedian/kmedian.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>

namespace klmedian {

namespace {

// Distance to the nearest center for every curve. Writes go to distinct
// indices, so the result is independent of the thread count.
std::vector<double> min_center_distances(const CurveSet& t,
                                         const std::vector<PolygonalCurve>& centers,
                                         const FrechetConfig& cfg, std::size_t threads) {
  std::vector<double> dist(t.size(), std::numeric_limits<double>::infinity());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& c : centers) dist[i] = std::min(dist[i], frechet_distance(t[i], c, cfg));
  };
  if (threads <= 1 || t.size() < 2) {
    work(0, t.size());
  } else {
    const std::size_t nt = std::min<std::size_t>(threads, t.size());
    std::vector<std::thread> pool;
    const std::size_t chunk = (t.size() + nt - 1) / nt;
    for (std::size_t i = 0; i < nt; ++i)
      pool.emplace_back(work, i * chunk, std::min(t.size(), (i + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  return dist;
}

struct Recursion {
  const KMedianParams& params;
  ClusteringDiagnostics& diag;

  std::vector<PolygonalCurve> run(const CurveSet& t, std::vector<PolygonalCurve> centers,
                                  std::size_t kappa, const RngStream& rng, std::size_t depth) {
    ++diag.recursive_calls;
    diag.max_depth = std::max(diag.max_depth, depth);
    if (kappa == 0) return centers;
    if (kappa >= t.size()) {
      for (const auto& c : t.curves) centers.push_back(c);
      return centers;
    }

    std::vector<std::vector<PolygonalCurve>> solutions;
    if (!centers.empty()) {
      auto [kept, pruned] = prune_partition(t, centers, params.frechet, params.threads);
      (void)pruned;
      solutions.push_back(run(kept, centers, kappa, rng.child(0), depth + 1));
    }

    RngStream plugin_rng = rng.child(1);
    const CandidateSet k_set =
        params.plugin(t, params.beta, params.delta / static_cast<double>(params.k),
                      params.epsilon, plugin_rng);
    ++diag.plugin_calls;
    diag.candidates_generated += k_set.size();
    diag.truncated = diag.truncated || k_set.truncated;

    for (std::size_t i = 0; i < k_set.size(); ++i) {
      std::vector<PolygonalCurve> extended = centers;
      extended.push_back(k_set.curves[i]);
      solutions.push_back(run(t, std::move(extended), kappa - 1, rng.child(2 + i), depth + 1));
    }

    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < solutions.size(); ++i) {
      const double c = clustering_cost(t, solutions[i], params.frechet, params.threads);
      if (c < best_cost) {
        best_cost = c;
        best = i;
      }
    }
    return std::move(solutions[best]);
  }
};

}  // namespace

double clustering_cost(const CurveSet& t, const std::vector<PolygonalCurve>& centers,
                       const FrechetConfig& cfg, std::size_t threads) {
  if (centers.empty()) throw parameter_error("clustering_cost: no centers");
  const auto dist = min_center_distances(t, centers, cfg, threads);
  return std::accumulate(dist.begin(), dist.end(), 0.0);
}

std::vector<std::size_t> assign_to_centers(const CurveSet& t,
                                           const std::vector<PolygonalCurve>& centers,
                                           const FrechetConfig& cfg) {
  if (centers.empty()) throw parameter_error("assign_to_centers: no centers");
  std::vector<std::size_t> assignment(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const double d = frechet_distance(t[i], centers[j], cfg);
      if (d < best) {
        best = d;
        assignment[i] = j;
      }
    }
  }
  return assignment;
}

std::pair<CurveSet, CurveSet> prune_partition(const CurveSet& t,
                                              const std::vector<PolygonalCurve>& centers,
                                              const FrechetConfig& cfg, std::size_t threads) {
  if (centers.empty()) throw parameter_error("prune_partition: no centers");
  const auto dist = min_center_distances(t, centers, cfg, threads);
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return t.ids[a] < t.ids[b];
  });
  const std::size_t prune_count = t.size() / 2;
  std::vector<bool> pruned_mask(t.size(), false);
  for (std::size_t i = 0; i < prune_count; ++i) pruned_mask[order[i]] = true;

  CurveSet kept, pruned;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto& dst = pruned_mask[i] ? pruned : kept;
    dst.curves.push_back(t[i]);
    dst.ids.push_back(t.ids[i]);
  }
  return {std::move(kept), std::move(pruned)};
}

std::vector<PolygonalCurve> kmedian(const CurveSet& t, const KMedianParams& params,
                                    RngStream& rng, ClusteringDiagnostics* diag) {
  if (t.empty()) throw parameter_error("kmedian: empty curve set");
  if (params.k == 0) throw parameter_error("kmedian: k must be positive");
  if (!params.plugin) throw parameter_error("kmedian: missing candidate plugin");
  if (params.beta <= 2.0 * static_cast<double>(params.k))
    throw parameter_error("kmedian: beta must exceed 2k");
  if (!(params.delta > 0.0 && params.delta < 1.0))
    throw parameter_error("kmedian: delta must be in (0,1)");

  ClusteringDiagnostics local;
  Recursion rec{params, diag ? *diag : local};
  return rec.run(t, {}, params.k, rng, 0);
}

double cluster_beta(std::size_t k, double epsilon, PluginKind algorithm) {
  const double kd = static_cast<double>(k);
  return algorithm == PluginKind::kAdvanced ? 12.0 * kd * kd / epsilon + 2.0 * kd
                                            : 20.0 * kd * kd / epsilon + 2.0 * kd;
}

double cluster_plugin_epsilon(double epsilon, PluginKind algorithm) {
  return algorithm == PluginKind::kAdvanced ? epsilon / 3.0 : epsilon / 5.0;
}

ClusteringResult cluster(const CurveSet& t, const ClusterParams& params, RngStream& rng) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw parameter_error("cluster: epsilon must be in (0,1)");
  if (params.algorithm == PluginKind::kAdvanced && params.epsilon > 0.158)
    throw parameter_error("cluster: advanced plugin requires epsilon in (0, 0.158]");
  if (params.k == 0) throw parameter_error("cluster: k must be positive");
  if (params.l < 2) throw parameter_error("cluster: l must be at least 2");

  const bool advanced = params.algorithm == PluginKind::kAdvanced;
  const double beta = cluster_beta(params.k, params.epsilon, params.algorithm);
  const double plugin_eps = cluster_plugin_epsilon(params.epsilon, params.algorithm);

  KMedianParams kp;
  kp.k = params.k;
  kp.beta = beta;
  kp.delta = params.delta;
  kp.epsilon = plugin_eps;
  kp.frechet = params.frechet;
  kp.threads = params.threads;
  kp.plugin = [&params, advanced](const CurveSet& input, double b, double d, double e,
                                  RngStream& r) {
    CandidateParams cp;
    cp.beta = b;
    cp.delta = d;
    cp.epsilon = e;
    cp.l = params.l;
    cp.scale = params.scale;
    cp.caps = params.caps;
    cp.frechet = params.frechet;
    return advanced ? candidates_advanced(input, cp, r) : candidates_simple(input, cp, r);
  };

  ClusteringResult result;
  result.centers = kmedian(t, kp, rng, &result.diagnostics);
  result.assignment = assign_to_centers(t, result.centers, params.frechet);
  result.total_cost = clustering_cost(t, result.centers, params.frechet, params.threads);
  return result;
}

}  // namespace klmedian
