#include "klmedian/median_seed.hpp"

#include "klmedian/simplify.hpp"

#include <cmath>
#include <limits>

namespace klmedian {

std::size_t seed_candidate_sample_size(double delta) {
  return static_cast<std::size_t>(std::ceil(2.0 * (std::log(2.0) - std::log(delta))));
}

std::size_t seed_eval_sample_size(double delta) {
  const double inner = std::ceil(4.0 * std::log(2.0) - std::log(delta));
  return static_cast<std::size_t>(std::ceil(-64.0 * (std::log(delta) - std::log(inner))));
}

CurveSet sample_uniform(const CurveSet& t, std::size_t count, RngStream& rng) {
  if (t.empty()) throw parameter_error("sample_uniform: empty curve set");
  if (count == 0) throw parameter_error("sample_uniform: count must be positive");
  CurveSet s;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t idx = static_cast<std::size_t>(rng.uniform_index(t.size()));
    s.add(t[idx]);
  }
  return s;
}

double cost_single(const CurveSet& t, const PolygonalCurve& center, const FrechetConfig& cfg) {
  double sum = 0.0;
  for (const auto& tau : t.curves) sum += frechet_distance(center, tau, cfg);
  return sum;
}

std::size_t best_by_sample_index(const CurveSet& candidates, const CurveSet& w,
                                 const FrechetConfig& cfg) {
  if (candidates.empty() || w.empty()) throw parameter_error("best_by_sample: empty input");
  std::size_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double c = cost_single(w, candidates[i], cfg);
    if (c < best_cost) {
      best_cost = c;
      best = i;
    }
  }
  return best;
}

PolygonalCurve best_by_sample(const CurveSet& candidates, const CurveSet& w,
                              const FrechetConfig& cfg) {
  return candidates[best_by_sample_index(candidates, w, cfg)];
}

PolygonalCurve median34(const CurveSet& t, const SeedParams& params, RngStream& rng) {
  if (t.empty()) throw parameter_error("median34: empty curve set");
  if (!(params.delta > 0.0 && params.delta < 1.0))
    throw parameter_error("median34: delta must be in (0,1)");
  if (params.l < 2) throw parameter_error("median34: l must be at least 2");

  RngStream rng_s = rng.child(1);
  RngStream rng_w = rng.child(2);
  const std::size_t ns = params.scale.apply(seed_candidate_sample_size(params.delta));
  const std::size_t nw = params.scale.apply(seed_eval_sample_size(params.delta));

  CurveSet s = sample_uniform(t, ns, rng_s);
  CurveSet simplified;
  for (const auto& c : s.curves) simplified.add(simplify(c, params.l, params.frechet).curve);
  CurveSet w = sample_uniform(t, nw, rng_w);
  return best_by_sample(simplified, w, params.frechet);
}

}  // namespace klmedian
