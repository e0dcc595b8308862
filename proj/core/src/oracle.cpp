#include "klmedian/oracle.hpp"

#include "klmedian/median_seed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace klmedian {

namespace {

// Parameter interval of the closed ball along the segment a -> b, clipped to
// [0, 1]. Empty optional when the segment misses the ball.
std::optional<std::pair<double, double>> segment_ball_interval(const Point& a, const Point& b,
                                                              const Point& center, double r) {
  const Point u = b - a;
  const Point w = a - center;
  double uu = 0.0, wu = 0.0, ww = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    uu += u[i] * u[i];
    wu += w[i] * u[i];
    ww += w[i] * w[i];
  }
  if (uu == 0.0) {
    if (ww <= r * r) return std::make_pair(0.0, 1.0);
    return std::nullopt;
  }
  // ||w + s u||^2 <= r^2
  const double disc = wu * wu - uu * (ww - r * r);
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double lo = std::max(0.0, (-wu - sq) / uu);
  const double hi = std::min(1.0, (-wu + sq) / uu);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

}  // namespace

double discrete_frechet(const PolygonalCurve& a, const PolygonalCurve& b) {
  if (a.empty() || b.empty()) throw parameter_error("discrete_frechet: empty curve");
  const std::size_t na = a.complexity(), nb = b.complexity();
  std::vector<double> prev(nb), cur(nb);
  for (std::size_t j = 0; j < nb; ++j) {
    const double d = distance(a.vertices[0], b.vertices[j]);
    prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
  }
  for (std::size_t i = 1; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const double d = distance(a.vertices[i], b.vertices[j]);
      double best = prev[j];
      if (j > 0) best = std::min(best, std::min(prev[j - 1], cur[j - 1]));
      cur[j] = std::max(best, d);
    }
    std::swap(prev, cur);
  }
  return prev[nb - 1];
}

PolygonalCurve densify(const PolygonalCurve& c, double h) {
  if (c.empty()) throw parameter_error("densify: empty curve");
  if (!(h > 0.0)) throw parameter_error("densify: h must be positive");
  std::vector<Point> out{c.vertices[0]};
  for (std::size_t i = 1; i < c.complexity(); ++i) {
    const Point& a = c.vertices[i - 1];
    const Point& b = c.vertices[i];
    const double len = distance(a, b);
    const auto pieces = static_cast<std::size_t>(std::ceil(len / h));
    for (std::size_t p = 1; p < pieces; ++p)
      out.push_back(lerp(a, b, static_cast<double>(p) / static_cast<double>(pieces)));
    out.push_back(b);
  }
  return PolygonalCurve(std::move(out));
}

BruteForceMedianResult brute_force_median(const CurveSet& t, std::size_t l,
                                          const GridSearchSpec& spec,
                                          const FrechetConfig& cfg) {
  if (t.empty()) throw parameter_error("brute_force_median: empty curve set");
  if (!(spec.resolution > 0.0)) throw parameter_error("brute_force_median: resolution must be positive");
  const std::size_t max_v = l > 0 ? l : spec.max_vertices;
  if (max_v == 0) throw parameter_error("brute_force_median: l must be positive");
  const std::size_t d = spec.box_lo.dim();
  if (d == 0 || spec.box_hi.dim() != d)
    throw parameter_error("brute_force_median: invalid bounding box");

  // Grid coordinates per dimension, box_lo to (at least) box_hi inclusive.
  std::vector<std::vector<double>> axes(d);
  std::uint64_t grid_size = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (spec.box_hi[i] < spec.box_lo[i])
      throw parameter_error("brute_force_median: degenerate bounding box");
    for (double x = spec.box_lo[i];; x += spec.resolution) {
      axes[i].push_back(x);
      if (x >= spec.box_hi[i]) break;
    }
    if (grid_size > spec.max_grid_points / axes[i].size() + 1)
      throw resource_error("brute_force_median: grid exceeds max_grid_points");
    grid_size *= axes[i].size();
    if (grid_size > spec.max_grid_points)
      throw resource_error("brute_force_median: grid exceeds max_grid_points");
  }
  std::vector<Point> grid;
  grid.reserve(grid_size);
  std::vector<std::size_t> idx(d, 0);
  bool done = false;
  while (!done) {
    Point p;
    p.coords.resize(d);
    for (std::size_t i = 0; i < d; ++i) p.coords[i] = axes[i][idx[i]];
    grid.push_back(std::move(p));
    done = true;
    for (std::size_t pos = d; pos-- > 0;) {
      if (++idx[pos] < axes[pos].size()) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
  }

  // Sum of first-vertex distances lower-bounds the cost of any curve
  // starting at that grid point.
  std::vector<double> start_lb(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double s = 0.0;
    for (const auto& tau : t.curves) s += distance(grid[g], tau.front());
    start_lb[g] = s;
  }

  BruteForceMedianResult result;
  result.cost = std::numeric_limits<double>::infinity();

  std::vector<Point> verts;
  auto evaluate = [&]() {
    // Cheap endpoint bound before the full distance computation.
    double lb = 0.0;
    for (const auto& tau : t.curves)
      lb += std::max(distance(verts.front(), tau.front()), distance(verts.back(), tau.back()));
    if (lb >= result.cost) return;
    const PolygonalCurve cand(verts);
    double cost = 0.0;
    for (const auto& tau : t.curves) {
      cost += frechet_distance(cand, tau, cfg);
      if (cost >= result.cost) return;
    }
    result.cost = cost;
    result.curve = cand;
  };

  // Depth-first over vertex sequences in lexicographic grid order.
  auto extend = [&](auto&& self, std::size_t depth) -> void {
    evaluate();
    if (depth == max_v) return;
    const Point last = verts.back();
    for (const auto& g : grid) {
      if (g == last) continue;
      verts.push_back(g);
      self(self, depth + 1);
      verts.pop_back();
    }
  };
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (start_lb[g] >= result.cost) continue;
    verts.assign(1, grid[g]);
    extend(extend, 1);
  }

  result.additive_error = static_cast<double>(t.size()) * std::sqrt(static_cast<double>(d)) *
                          spec.resolution;
  return result;
}

PolygonalCurve simple_shortcut(const PolygonalCurve& sigma, const PolygonalCurve& tau,
                               const FrechetConfig& cfg) {
  if (sigma.empty() || tau.empty()) throw parameter_error("simple_shortcut: empty curve");
  if (sigma.complexity() < 2) throw parameter_error("simple_shortcut: sigma needs >= 2 vertices");
  const double d = frechet_distance(sigma, tau, cfg);
  const double r = d + std::max(cfg.abs_tol, cfg.rel_tol * d);

  auto in_some_ball = [&](const Point& p) {
    for (const auto& v : tau.vertices)
      if (distance(p, v) <= r) return true;
    return false;
  };

  std::vector<Point> cur = sigma.vertices;
  // Each pass removes one outside vertex; the cap guards against numeric
  // dead ends at ball boundaries.
  for (std::size_t pass = 0; pass < 2 * sigma.complexity(); ++pass) {
    std::size_t outside = 0;
    bool found = false;
    for (std::size_t i = 1; i + 1 < cur.size(); ++i) {
      if (!in_some_ball(cur[i])) {
        outside = i;
        found = true;
        break;
      }
    }
    if (!found) break;

    const PolygonalCurve cur_curve{std::vector<Point>(cur)};
    std::vector<double> matching;
    try {
      matching = frechet_matching(cur_curve, tau, r);
    } catch (const parameter_error&) {
      break;  // numeric slack pushed the distance past r
    }
    const double p = matching[outside];
    const std::size_t j = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(p))),
                                   tau.complexity() >= 2 ? tau.complexity() - 2 : 0);
    const Point& ball_before = tau.vertices[j];
    const Point& ball_after = tau.vertices[std::min(j + 1, tau.complexity() - 1)];

    // Latest point before the vertex inside the preceding ball.
    std::size_t exit_edge = 0;
    double exit_s = 0.0;
    bool have_exit = false;
    for (std::size_t e = outside; e-- > 0;) {
      const auto iv = segment_ball_interval(cur[e], cur[e + 1], ball_before, r);
      if (iv) {
        exit_edge = e;
        exit_s = iv->second;
        have_exit = true;
        break;
      }
    }
    // Earliest point after the vertex inside the following ball.
    std::size_t entry_edge = 0;
    double entry_s = 0.0;
    bool have_entry = false;
    for (std::size_t e = outside; e + 1 < cur.size(); ++e) {
      const auto iv = segment_ball_interval(cur[e], cur[e + 1], ball_after, r);
      if (iv) {
        entry_edge = e;
        entry_s = iv->first;
        have_entry = true;
        break;
      }
    }
    if (!have_exit || !have_entry) break;  // numeric dead end, keep the vertex

    const Point exit_pt = lerp(cur[exit_edge], cur[exit_edge + 1], exit_s);
    const Point entry_pt = lerp(cur[entry_edge], cur[entry_edge + 1], entry_s);

    std::vector<Point> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(exit_edge) + 1);
    next.push_back(exit_pt);
    next.push_back(entry_pt);
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(entry_edge) + 1, cur.end());
    cur = normalize_curve(next).vertices;
  }
  return normalize_curve(cur);
}

}  // namespace klmedian
