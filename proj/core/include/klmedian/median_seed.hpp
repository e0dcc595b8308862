#ifndef KLMEDIAN_MEDIAN_SEED_HPP
#define KLMEDIAN_MEDIAN_SEED_HPP

#include "klmedian/frechet.hpp"
#include "klmedian/geometry.hpp"
#include "klmedian/rng.hpp"

#include <cstdint>

namespace klmedian {

// Multiplier on every sample-size formula. Faithful mode pins the factor to
// 1; test mode may shrink samples (floored at 1) for desk-scale runs.
struct SampleScale {
  double factor = 1.0;
  bool faithful() const { return factor == 1.0; }

  std::size_t apply(std::size_t formula_value) const {
    const double scaled = std::ceil(static_cast<double>(formula_value) * factor);
    return scaled < 1.0 ? 1 : static_cast<std::size_t>(scaled);
  }
};

struct SeedParams {
  double delta = 0.1;  // failure probability, in (0,1)
  std::size_t l = 2;   // target center complexity, >= 2
  SampleScale scale;
  FrechetConfig frechet;
};

// Candidate-sample size: ceil(2 (ln 2 - ln delta)).
std::size_t seed_candidate_sample_size(double delta);
// Evaluation-sample size: ceil(-64 (ln delta - ln ceil(4 ln 2 - ln delta))).
std::size_t seed_eval_sample_size(double delta);

// `count` i.i.d. uniform draws from t, with replacement.
CurveSet sample_uniform(const CurveSet& t, std::size_t count, RngStream& rng);

// Sum of Frechet distances from the center to every curve of t.
double cost_single(const CurveSet& t, const PolygonalCurve& center,
                   const FrechetConfig& cfg = {});

// Candidate minimizing cost(w, .); ties go to the lowest candidate index.
std::size_t best_by_sample_index(const CurveSet& candidates, const CurveSet& w,
                                 const FrechetConfig& cfg = {});
PolygonalCurve best_by_sample(const CurveSet& candidates, const CurveSet& w,
                              const FrechetConfig& cfg = {});

// 34-approximate (1,l)-median: sample, simplify each sampled curve to l
// vertices, evaluate the simplifications against a second sample. The result
// always has at most l vertices; with probability >= 1 - delta its cost is
// within factor 34 of the optimal (1,l)-median.
PolygonalCurve median34(const CurveSet& t, const SeedParams& params, RngStream& rng);

}  // namespace klmedian

#endif
