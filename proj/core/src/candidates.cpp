#include "klmedian/candidates.hpp"

#include "klmedian/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace klmedian {

namespace {

void validate_common(const CurveSet& t, const CandidateParams& p) {
  if (t.empty()) throw parameter_error("candidates: empty curve set");
  if (p.beta < 1.0) throw parameter_error("candidates: beta must be at least 1");
  if (!(p.delta > 0.0 && p.delta < 1.0)) throw parameter_error("candidates: delta must be in (0,1)");
  if (!(p.epsilon > 0.0)) throw parameter_error("candidates: epsilon must be positive");
  if (p.l < 2) throw parameter_error("candidates: l must be at least 2");
  if (p.caps.max_grid_points == 0 || p.caps.max_candidates == 0)
    throw parameter_error("candidates: caps must be positive");
}

// Lexicographic iteration over the size-r index subsets of {0, ..., n-1}.
struct CombinationIterator {
  std::vector<std::size_t> indices;
  std::size_t n;
  bool done = false;

  CombinationIterator(std::size_t n_, std::size_t r) : n(n_) {
    indices.resize(r);
    for (std::size_t i = 0; i < r; ++i) indices[i] = i;
    done = r > n;
  }

  void advance() {
    const std::size_t r = indices.size();
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (indices[i] != i + n - r) {
        ++indices[i];
        for (std::size_t j = i + 1; j < r; ++j) indices[j] = indices[j - 1] + 1;
        return;
      }
    }
    done = true;
  }
};

// Accumulates grid points into a pool, bounded by max_points. Returns false
// once the pool is saturated.
bool pool_cover_ball(std::set<Point>& pool, const Ball& ball, double cell_width,
                     std::uint64_t max_points, bool& truncated) {
  std::vector<Point> pts;
  try {
    pts = cover_ball(ball, cell_width, max_points);
  } catch (const resource_error&) {
    truncated = true;
    return true;  // ball skipped, pool itself still usable
  }
  for (auto& p : pts) {
    if (pool.size() >= max_points) {
      truncated = true;
      return false;
    }
    pool.insert(std::move(p));
  }
  return true;
}

// Enumerates short curves over the pool into the candidate set, bounded by
// the remaining candidate budget.
void emit_pool_curves(const std::set<Point>& pool, std::size_t l, std::uint64_t max_candidates,
                      CandidateSet& out) {
  if (pool.empty()) return;
  const std::vector<Point> points(pool.begin(), pool.end());
  const std::uint64_t remaining =
      out.size() >= max_candidates ? 0 : max_candidates - out.size();
  const bool complete =
      enumerate_curves(points, 2 * l - 2, remaining, [&](const PolygonalCurve& c) {
        out.add(c, CandidateOrigin::kGridEnumeration);
        return true;
      });
  if (!complete) out.truncated = true;
}

}  // namespace

std::size_t simple_candidates_sample_size(double beta, double delta, double eps_prime) {
  return static_cast<std::size_t>(
      std::ceil(-8.0 * beta / eps_prime * (std::log(delta) - std::log(4.0))));
}

std::size_t advanced_candidates_sample_size(double beta, double delta, double eps_prime,
                                            std::size_t l) {
  // The log term degenerates at l == 2 (2l-4 == 0); it is clamped to ln(4).
  const double k = std::max<double>(static_cast<double>(2 * l) - 4.0, 1.0);
  return static_cast<std::size_t>(
      std::ceil(-8.0 * beta * static_cast<double>(l) / eps_prime *
                (std::log(delta) - std::log(4.0 * k))));
}

std::size_t subset_sample_size(std::size_t sample_size, double beta) {
  const auto r = static_cast<std::size_t>(
      std::ceil(static_cast<double>(sample_size) / (2.0 * beta)));
  return std::clamp<std::size_t>(r, 1, sample_size);
}

std::size_t median5_candidate_sample_size(double delta, double eps_prime) {
  return static_cast<std::size_t>(
      std::ceil(-2.0 / eps_prime * (std::log(delta) - std::log(4.0))));
}

std::size_t median5_eval_sample_size(double delta, double eps_prime) {
  const double inner =
      std::ceil(-8.0 / eps_prime * (std::log(delta) - std::log(4.0)));
  return static_cast<std::size_t>(
      std::ceil(-64.0 / (eps_prime * eps_prime) * (std::log(delta) - std::log(inner))));
}

GridParams simple_grid_params(double delta, double n, std::size_t sample_size, double eps_prime,
                              double delta_cost, std::size_t d) {
  const double delta_l = delta * n / (2.0 * static_cast<double>(sample_size)) * delta_cost / 34.0;
  const double delta_u = delta_cost / eps_prime;
  return {(1.0 + eps_prime) * delta_u,
          2.0 * eps_prime / (n * std::sqrt(static_cast<double>(d))) * delta_l};
}

GridParams advanced_grid_params(double delta, double n, std::size_t sample_size, double eps_prime,
                                double delta_cost, std::size_t d, std::size_t l) {
  const double delta_l =
      2.0 * delta * n / (4.0 * static_cast<double>(sample_size)) * delta_cost / 34.0;
  const double delta_u = delta_cost / eps_prime;
  return {4.0 * static_cast<double>(l) / eps_prime * delta_u,
          2.0 * eps_prime / (n * std::sqrt(static_cast<double>(d))) * delta_l};
}

GridParams median5_grid_params(double eps_prime, double delta_cost, double n, std::size_t d) {
  return {(3.0 + 4.0 * eps_prime) / n * 34.0 * delta_cost,
          2.0 * eps_prime * delta_cost / (n * std::sqrt(static_cast<double>(d)))};
}

bool enumerate_curves(const std::vector<Point>& points, std::size_t max_vertices,
                      std::uint64_t max_emit,
                      const std::function<bool(const PolygonalCurve&)>& sink) {
  if (points.empty() || max_vertices == 0) return true;
  std::set<PolygonalCurve> seen;
  std::uint64_t emitted = 0;
  std::vector<std::size_t> idx;
  std::vector<Point> verts;
  for (std::size_t len = 1; len <= max_vertices; ++len) {
    idx.assign(len, 0);
    while (true) {
      verts.clear();
      bool valid = true;
      for (std::size_t i = 0; i < len; ++i) {
        if (i > 0 && points[idx[i]] == points[idx[i - 1]]) {
          valid = false;
          break;
        }
        verts.push_back(points[idx[i]]);
      }
      if (valid) {
        PolygonalCurve c = normalize_curve(verts);
        if (seen.insert(c).second) {
          if (emitted >= max_emit) return false;
          ++emitted;
          if (!sink(c)) return false;
        }
      }
      // odometer over index tuples, most significant digit first
      std::size_t pos = len;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < points.size()) break;
        idx[pos] = 0;
        if (pos == 0) goto next_length;
      }
    }
  next_length:;
  }
  return true;
}

std::pair<std::vector<PolygonalCurve>, bool> enumerate_curves(const std::vector<Point>& points,
                                                              std::size_t max_vertices,
                                                              const EnumerationCaps& caps) {
  std::vector<PolygonalCurve> out;
  const bool complete =
      enumerate_curves(points, max_vertices, caps.max_candidates, [&](const PolygonalCurve& c) {
        out.push_back(c);
        return true;
      });
  return {std::move(out), !complete};
}

CandidateSet candidates_simple(const CurveSet& t, const CandidateParams& params, RngStream& rng) {
  validate_common(t, params);
  const double eps_prime = params.epsilon / 3.0;
  const double n = static_cast<double>(t.size());
  const std::size_t d = t[0].dim();

  const std::size_t sample_size =
      params.scale.apply(simple_candidates_sample_size(params.beta, params.delta, eps_prime));
  RngStream rng_sample = rng.child(1);
  const CurveSet s_all = sample_uniform(t, sample_size, rng_sample);
  const std::size_t r = subset_sample_size(s_all.size(), params.beta);

  const RngStream subsets_root = rng.child(2);
  CandidateSet out;
  std::size_t subset_idx = 0;
  for (CombinationIterator it(s_all.size(), r); !it.done; it.advance(), ++subset_idx) {
    if (out.size() >= params.caps.max_candidates) {
      out.truncated = true;
      break;
    }
    CurveSet subset;
    for (std::size_t i : it.indices) subset.add(s_all[i]);

    RngStream sub_rng = subsets_root.child(subset_idx);
    const SeedParams seed{params.delta / 4.0, params.l, params.scale, params.frechet};
    const PolygonalCurve c = median34(subset, seed, sub_rng);
    out.add(c, CandidateOrigin::kSeedMedian);
    ++out.subsets_processed;

    const double delta_cost = cost_single(subset, c, params.frechet);
    const auto [radius, width] =
        simple_grid_params(params.delta, n, s_all.size(), eps_prime, delta_cost, d);

    for (const auto& s : subset.curves) {
      std::set<Point> pool;
      for (const auto& v : s.vertices) {
        if (delta_cost == 0.0) {
          pool.insert(v);
          continue;
        }
        if (!pool_cover_ball(pool, Ball{v, radius}, width, params.caps.max_grid_points,
                             out.truncated))
          break;
      }
      emit_pool_curves(pool, params.l, params.caps.max_candidates, out);
      if (out.truncated && out.size() >= params.caps.max_candidates) return out;
    }
  }
  return out;
}

CandidateSet candidates_advanced(const CurveSet& t, const CandidateParams& params, RngStream& rng) {
  validate_common(t, params);
  if (params.epsilon > 0.158)
    throw parameter_error("candidates_advanced: epsilon must be in (0, 0.158]");
  const double eps_prime = params.epsilon / 6.0;
  const double n = static_cast<double>(t.size());
  const std::size_t d = t[0].dim();

  const std::size_t sample_size = params.scale.apply(
      advanced_candidates_sample_size(params.beta, params.delta, eps_prime, params.l));
  RngStream rng_sample = rng.child(1);
  const CurveSet s_all = sample_uniform(t, sample_size, rng_sample);
  const std::size_t r = subset_sample_size(s_all.size(), params.beta);

  const RngStream subsets_root = rng.child(2);
  CandidateSet out;
  out.l2_log_adjusted = params.l == 2;
  std::size_t subset_idx = 0;
  for (CombinationIterator it(s_all.size(), r); !it.done; it.advance(), ++subset_idx) {
    if (out.size() >= params.caps.max_candidates) {
      out.truncated = true;
      break;
    }
    CurveSet subset;
    for (std::size_t i : it.indices) subset.add(s_all[i]);

    RngStream sub_rng = subsets_root.child(subset_idx);
    const SeedParams seed{params.delta / 4.0, params.l, params.scale, params.frechet};
    const PolygonalCurve c = median34(subset, seed, sub_rng);
    out.add(c, CandidateOrigin::kSeedMedian);
    ++out.subsets_processed;

    const double delta_cost = cost_single(subset, c, params.frechet);
    const auto [radius, width] =
        advanced_grid_params(params.delta, n, s_all.size(), eps_prime, delta_cost, d, params.l);

    // One pool shared across the whole subset.
    std::set<Point> pool;
    bool saturated = false;
    for (const auto& s : subset.curves) {
      for (const auto& v : s.vertices) {
        if (delta_cost == 0.0) {
          pool.insert(v);
          continue;
        }
        if (!pool_cover_ball(pool, Ball{v, radius}, width, params.caps.max_grid_points,
                             out.truncated)) {
          saturated = true;
          break;
        }
      }
      if (saturated) break;
    }
    emit_pool_curves(pool, params.l, params.caps.max_candidates, out);
    if (out.truncated && out.size() >= params.caps.max_candidates) return out;
  }
  return out;
}

Median5Result median5(const CurveSet& t, double delta, double epsilon, std::size_t l,
                      const SampleScale& scale, const EnumerationCaps& caps,
                      const FrechetConfig& cfg, RngStream& rng) {
  if (t.empty()) throw parameter_error("median5: empty curve set");
  if (!(delta > 0.0 && delta < 1.0)) throw parameter_error("median5: delta must be in (0,1)");
  if (!(epsilon > 0.0)) throw parameter_error("median5: epsilon must be positive");
  if (l < 2) throw parameter_error("median5: l must be at least 2");

  const double eps_prime = epsilon / 9.0;
  const double n = static_cast<double>(t.size());
  const std::size_t d = t[0].dim();

  RngStream rng_seed = rng.child(1);
  const SeedParams seed{delta / 2.0, l, scale, cfg};
  const PolygonalCurve c_hat = median34(t, seed, rng_seed);
  const double delta_cost = cost_single(t, c_hat, cfg) / 34.0;

  RngStream rng_s = rng.child(2);
  RngStream rng_w = rng.child(3);
  const CurveSet s = sample_uniform(t, scale.apply(median5_candidate_sample_size(delta, eps_prime)),
                                    rng_s);
  const CurveSet w = sample_uniform(t, scale.apply(median5_eval_sample_size(delta, eps_prime)),
                                    rng_w);
  const PolygonalCurve c = best_by_sample(s, w, cfg);

  const auto [radius, width] = median5_grid_params(eps_prime, delta_cost, n, d);

  Median5Result result;
  std::set<Point> pool;
  for (const auto& v : c.vertices) {
    if (delta_cost == 0.0) {
      pool.insert(v);
      continue;
    }
    if (!pool_cover_ball(pool, Ball{v, radius}, width, caps.max_grid_points, result.truncated))
      break;
  }

  PolygonalCurve best;
  double best_cost = std::numeric_limits<double>::infinity();
  if (!pool.empty()) {
    const std::vector<Point> points(pool.begin(), pool.end());
    const bool complete =
        enumerate_curves(points, 2 * l - 2, caps.max_candidates, [&](const PolygonalCurve& cand) {
          const double cost = cost_single(t, cand, cfg);
          if (cost < best_cost) {
            best_cost = cost;
            best = cand;
          }
          return true;
        });
    if (!complete) result.truncated = true;
  }
  if (best.empty()) {
    // Caps left nothing to evaluate; fall back to the seed median.
    result.truncated = true;
    best = c_hat;
    best_cost = cost_single(t, c_hat, cfg);
  }
  result.curve = std::move(best);
  result.cost = best_cost;
  return result;
}

}  // namespace klmedian
