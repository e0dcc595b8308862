#include "klmedian/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace klmedian {

namespace {

struct Iv {
  double lo = 1.0;
  double hi = 0.0;  // lo > hi means empty
  bool empty() const { return lo > hi; }
};

// Parameter interval of {t in [0,1] : |u + t(v-u) - p| <= r} on segment uv.
Iv free_interval(const Point& p, const Point& u, const Point& v, double r) {
  const std::size_t d = p.dim();
  double a2 = 0.0, b1 = 0.0, c0 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double di = v[i] - u[i];
    const double wi = u[i] - p[i];
    a2 += di * di;
    b1 += wi * di;
    c0 += wi * wi;
  }
  c0 -= r * r;
  if (a2 == 0.0) return c0 <= 0.0 ? Iv{0.0, 1.0} : Iv{};
  const double disc = b1 * b1 - a2 * c0;
  if (disc < 0.0) return Iv{};
  const double sq = std::sqrt(disc);
  double lo = (-b1 - sq) / a2;
  double hi = (-b1 + sq) / a2;
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (lo > hi) return Iv{};
  return Iv{lo, hi};
}

// Max distance from point p to curve c (attained at a vertex).
double max_distance_to_point(const Point& p, const PolygonalCurve& c) {
  double m = 0.0;
  for (const auto& v : c.vertices) m = std::max(m, distance(p, v));
  return m;
}

// Reachable intervals on every vertex line of `a` in the free-space diagram
// of (a, b) at radius r. Line i, entry j holds the reachable part of
// {a-vertex i} x {b-edge j}. Returns an empty vector if the start is blocked.
std::vector<std::vector<Iv>> reach_table(const PolygonalCurve& a, const PolygonalCurve& b,
                                         double r) {
  const std::size_t na = a.complexity() - 1;
  const std::size_t nb = b.complexity() - 1;
  const auto& A = a.vertices;
  const auto& B = b.vertices;

  if (distance(A[0], B[0]) > r) return {};

  std::vector<std::vector<Iv>> lines(na + 1, std::vector<Iv>(nb));

  // Vertex line 0: climb the left boundary through free space.
  bool open = true;
  for (std::size_t j = 0; j < nb; ++j) {
    Iv f = free_interval(A[0], B[j], B[j + 1], r);
    if (open && !f.empty() && f.lo <= 0.0)
      lines[0][j] = Iv{0.0, f.hi};
    else
      lines[0][j] = Iv{};
    open = !lines[0][j].empty() && lines[0][j].hi >= 1.0;
  }

  // Bottom boundary chain: reachable part of {a-edge i} x {b-vertex 0}.
  std::vector<Iv> bottom(na);
  bool bopen = true;
  for (std::size_t i = 0; i < na; ++i) {
    Iv f = free_interval(B[0], A[i], A[i + 1], r);
    if (bopen && !f.empty() && f.lo <= 0.0)
      bottom[i] = Iv{0.0, f.hi};
    else
      bottom[i] = Iv{};
    bopen = !bottom[i].empty() && bottom[i].hi >= 1.0;
  }

  for (std::size_t i = 0; i < na; ++i) {
    Iv br = bottom[i];  // bottom boundary of cell (i, j), starting at j = 0
    for (std::size_t j = 0; j < nb; ++j) {
      const Iv& left = lines[i][j];
      // Right boundary of cell (i, j) = vertex line i+1, edge j.
      Iv f = free_interval(A[i + 1], B[j], B[j + 1], r);
      Iv right{};
      if (!br.empty())
        right = f;
      else if (!left.empty() && !f.empty()) {
        right = Iv{std::max(f.lo, left.lo), f.hi};
        if (right.lo > right.hi) right = Iv{};
      }
      lines[i + 1][j] = right;
      // Top boundary of cell (i, j) = bottom of cell (i, j+1).
      Iv g = free_interval(B[j + 1], A[i], A[i + 1], r);
      Iv top{};
      if (!left.empty())
        top = g;
      else if (!br.empty() && !g.empty()) {
        top = Iv{std::max(g.lo, br.lo), g.hi};
        if (top.lo > top.hi) top = Iv{};
      }
      br = top;
    }
  }
  return lines;
}

bool decide_general(const PolygonalCurve& a, const PolygonalCurve& b, double r) {
  auto lines = reach_table(a, b, r);
  if (lines.empty()) return false;
  const Iv& last = lines.back().back();
  return !last.empty() && last.hi >= 1.0;
}

PolygonalCurve reversed(const PolygonalCurve& c) {
  PolygonalCurve r = c;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

}  // namespace

bool decide_frechet(const PolygonalCurve& a, const PolygonalCurve& b, double r) {
  if (a.empty() || b.empty()) throw parameter_error("decide_frechet: empty curve");
  if (r < 0.0) throw parameter_error("decide_frechet: negative radius");
  if (a.complexity() == 1) return max_distance_to_point(a.front(), b) <= r;
  if (b.complexity() == 1) return max_distance_to_point(b.front(), a) <= r;
  return decide_general(a, b, r);
}

double frechet_distance(const PolygonalCurve& a, const PolygonalCurve& b,
                        const FrechetConfig& cfg) {
  if (a.empty() || b.empty()) throw parameter_error("frechet_distance: empty curve");
  if (!(cfg.abs_tol > 0.0) && !(cfg.rel_tol > 0.0))
    throw parameter_error("frechet_distance: tolerances must not both be zero");
  if (a.complexity() == 1) return max_distance_to_point(a.front(), b);
  if (b.complexity() == 1) return max_distance_to_point(b.front(), a);

  double lo = std::max(distance(a.front(), b.front()), distance(a.back(), b.back()));
  if (decide_frechet(a, b, lo)) return lo;
  double hi = 0.0;
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) hi = std::max(hi, distance(u, v));

  while (hi - lo > std::max(cfg.abs_tol, cfg.rel_tol * lo)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // no representable midpoint left
    if (decide_frechet(a, b, mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> frechet_matching(const PolygonalCurve& a, const PolygonalCurve& b,
                                     double r) {
  if (a.empty() || b.empty()) throw parameter_error("frechet_matching: empty curve");
  const std::size_t p = a.complexity();
  const std::size_t nb = b.complexity() - 1;
  if (b.complexity() == 1) return std::vector<double>(p, 0.0);
  if (p == 1) return {0.0};

  auto fwd = reach_table(a, b, r);
  auto bwd = reach_table(reversed(a), reversed(b), r);
  if (fwd.empty() || bwd.empty())
    throw parameter_error("frechet_matching: radius below the Frechet distance");

  // For each vertex of a, the lowest b-parameter that lies on some full
  // monotone path: reachable from the start and co-reachable from the end.
  std::vector<double> out(p);
  out[0] = 0.0;
  out[p - 1] = static_cast<double>(nb);
  for (std::size_t i = 1; i + 1 < p; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < nb; ++j) {
      const Iv& f = fwd[i][j];
      if (f.empty()) continue;
      // Backward table line for a-vertex i is p-1-i; b-edge j reversed is
      // nb-1-j with parameter flipped.
      const Iv& g = bwd[p - 1 - i][nb - 1 - j];
      if (g.empty()) continue;
      const double lo = std::max(f.lo, 1.0 - g.hi);
      const double hi = std::min(f.hi, 1.0 - g.lo);
      if (lo <= hi) best = std::min(best, static_cast<double>(j) + lo);
    }
    if (!std::isfinite(best))
      throw parameter_error("frechet_matching: no feasible crossing found");
    // Exact-arithmetic lowest crossings are monotone; clamp away floating
    // point dips so the witness is monotone by construction.
    out[i] = std::max(best, out[i - 1]);
  }
  return out;
}

}  // namespace klmedian
