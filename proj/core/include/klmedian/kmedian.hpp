#ifndef KLMEDIAN_KMEDIAN_HPP
#define KLMEDIAN_KMEDIAN_HPP

#include "klmedian/candidates.hpp"

#include <functional>

namespace klmedian {

// Problem-specific candidate generator: given a curve set and the parameters
// (beta, delta, epsilon), returns candidate 1-median centers.
using CandidatePlugin = std::function<CandidateSet(const CurveSet&, double beta, double delta,
                                                   double epsilon, RngStream&)>;

struct ClusteringDiagnostics {
  std::size_t recursive_calls = 0;
  std::size_t plugin_calls = 0;
  std::size_t candidates_generated = 0;
  std::size_t max_depth = 0;
  bool truncated = false;  // any plugin call hit a cap
};

struct ClusteringResult {
  std::vector<PolygonalCurve> centers;
  std::vector<std::size_t> assignment;  // per input curve, index of its nearest center
  double total_cost = 0.0;
  ClusteringDiagnostics diagnostics;
};

// Sum over t of the distance to the nearest center. threads > 1 distributes
// the per-curve distances; the summation order is fixed, so the result does
// not depend on the thread count.
double clustering_cost(const CurveSet& t, const std::vector<PolygonalCurve>& centers,
                       const FrechetConfig& cfg = {}, std::size_t threads = 1);

// Nearest-center index per curve; ties go to the lowest center index.
std::vector<std::size_t> assign_to_centers(const CurveSet& t,
                                           const std::vector<PolygonalCurve>& centers,
                                           const FrechetConfig& cfg = {});

// Splits t into (kept, pruned): pruned holds the floor(|t|/2) curves with the
// smallest distance to their nearest center, ties broken by id ascending.
// Both halves keep their original ids.
std::pair<CurveSet, CurveSet> prune_partition(const CurveSet& t,
                                              const std::vector<PolygonalCurve>& centers,
                                              const FrechetConfig& cfg = {},
                                              std::size_t threads = 1);

struct KMedianParams {
  std::size_t k = 1;
  double beta = 1.0;    // must exceed 2k for the approximation guarantee
  double delta = 0.1;
  double epsilon = 0.1; // passed through to the plugin
  CandidatePlugin plugin;
  FrechetConfig frechet;
  std::size_t threads = 1;
};

// Recursive k-median scheme. Alternates a pruning phase (recurse on the half
// of the input farthest from the centers found so far) with a candidate phase
// (recurse per plugin candidate with one fewer center to find, plugin failure
// probability delta/k), and keeps the center set of lowest cost on the
// current input.
std::vector<PolygonalCurve> kmedian(const CurveSet& t, const KMedianParams& params,
                                    RngStream& rng, ClusteringDiagnostics* diag = nullptr);

enum class PluginKind { kSimple, kAdvanced };

struct ClusterParams {
  std::size_t k = 1;
  std::size_t l = 2;
  double delta = 0.1;
  double epsilon = 0.1; // advanced requires (0, 0.158]
  PluginKind algorithm = PluginKind::kSimple;
  SampleScale scale;
  EnumerationCaps caps;
  FrechetConfig frechet;
  std::size_t threads = 1;
};

// Smallest-cluster parameter derived from (k, epsilon): 20k^2/eps + 2k for
// the simple plugin, 12k^2/eps + 2k for the advanced one.
double cluster_beta(std::size_t k, double epsilon, PluginKind algorithm);
// Epsilon handed to the plugin: eps/5 (simple) or eps/3 (advanced).
double cluster_plugin_epsilon(double epsilon, PluginKind algorithm);

// End-to-end (k,l)-median clustering. Derives beta and the plugin epsilon
// from (k, epsilon): simple uses beta = 20k^2/eps + 2k with eps/5, target
// factor (3+eps); advanced uses beta = 12k^2/eps + 2k with eps/3, target
// factor (1+eps). Centers have at most 2l-2 vertices unless the base case
// returned input curves verbatim.
ClusteringResult cluster(const CurveSet& t, const ClusterParams& params, RngStream& rng);

}  // namespace klmedian

#endif
