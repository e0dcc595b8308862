#ifndef KLMEDIAN_CANDIDATES_HPP
#define KLMEDIAN_CANDIDATES_HPP

#include "klmedian/median_seed.hpp"

#include <functional>

namespace klmedian {

struct EnumerationCaps {
  std::uint64_t max_grid_points = 10'000'000;
  std::uint64_t max_candidates = 10'000'000;
};

struct CandidateParams {
  double beta = 1.0;    // inverse smallest cluster fraction, >= 1
  double delta = 0.1;   // failure probability, in (0,1)
  double epsilon = 0.1; // approximation parameter; advanced requires (0, 0.158]
  std::size_t l = 2;
  SampleScale scale;
  EnumerationCaps caps;
  FrechetConfig frechet;
};

enum class CandidateOrigin { kSeedMedian, kGridEnumeration };

struct CandidateSet {
  std::vector<PolygonalCurve> curves;  // each with at most 2l-2 vertices
  std::vector<CandidateOrigin> provenance;
  bool truncated = false;          // a cap stopped grid building or enumeration
  bool l2_log_adjusted = false;    // advanced sample-size log term clamped at l == 2
  std::size_t subsets_processed = 0;

  void add(PolygonalCurve c, CandidateOrigin origin) {
    curves.push_back(std::move(c));
    provenance.push_back(origin);
  }
  std::size_t size() const { return curves.size(); }
  bool empty() const { return curves.empty(); }
};

// Sample-size and grid-parameter arithmetic of the algorithm boxes, exposed
// so tests can pin them against hand-evaluated values.
std::size_t simple_candidates_sample_size(double beta, double delta, double eps_prime);
std::size_t advanced_candidates_sample_size(double beta, double delta, double eps_prime,
                                            std::size_t l);
std::size_t subset_sample_size(std::size_t sample_size, double beta);
std::size_t median5_candidate_sample_size(double delta, double eps_prime);
std::size_t median5_eval_sample_size(double delta, double eps_prime);

// Ball radius and grid cell width used around curve vertices, derived from
// the cost estimate delta_cost of the subset seed median.
struct GridParams {
  double radius = 0.0;
  double width = 0.0;
};
GridParams simple_grid_params(double delta, double n, std::size_t sample_size, double eps_prime,
                              double delta_cost, std::size_t d);
GridParams advanced_grid_params(double delta, double n, std::size_t sample_size, double eps_prime,
                                double delta_cost, std::size_t d, std::size_t l);
GridParams median5_grid_params(double eps_prime, double delta_cost, double n, std::size_t d);

// All curves over the point set with 1..max_vertices vertices, distinct
// consecutive points, normalized and deduplicated post-normalization, in
// lexicographic order over point indices. The sink returns false to stop;
// enumeration also stops after max_emit curves. Returns false if stopped
// before completion.
bool enumerate_curves(const std::vector<Point>& points, std::size_t max_vertices,
                      std::uint64_t max_emit,
                      const std::function<bool(const PolygonalCurve&)>& sink);

// Materializing convenience wrapper honoring caps.max_candidates.
std::pair<std::vector<PolygonalCurve>, bool> enumerate_curves(const std::vector<Point>& points,
                                                              std::size_t max_vertices,
                                                              const EnumerationCaps& caps);

// Candidates by simple shortcutting: per subset of the sample, a seed median
// plus all short curves over per-curve grid pools. W.p. >= 1 - delta the
// result contains a (3+epsilon)-approximate (1,l)-median with <= 2l-2
// vertices for every T' of fraction >= 1/beta.
CandidateSet candidates_simple(const CurveSet& t, const CandidateParams& params, RngStream& rng);

// Candidates by advanced shortcutting: one grid pool shared across the whole
// subset, wider balls. Target factor (1+epsilon), epsilon in (0, 0.158].
CandidateSet candidates_advanced(const CurveSet& t, const CandidateParams& params, RngStream& rng);

struct Median5Result {
  PolygonalCurve curve;
  double cost = 0.0;
  bool truncated = false;
};

// Standalone (5+epsilon)-approximate (1,l)-median by simple shortcutting:
// one grid pool around a well-evaluated sampled curve, best enumerated curve
// by full-input cost. Falls back to the seed median when caps leave the
// enumeration empty (reported via truncated).
Median5Result median5(const CurveSet& t, double delta, double epsilon, std::size_t l,
                      const SampleScale& scale, const EnumerationCaps& caps,
                      const FrechetConfig& cfg, RngStream& rng);

}  // namespace klmedian

#endif
