#ifndef KLMEDIAN_ORACLE_HPP
#define KLMEDIAN_ORACLE_HPP

#include "klmedian/frechet.hpp"
#include "klmedian/geometry.hpp"

namespace klmedian {

// Discrete Frechet distance over the vertex sequences. Upper-bounds the
// continuous distance; exceeds it by at most the longer edge length of
// either curve.
double discrete_frechet(const PolygonalCurve& a, const PolygonalCurve& b);

// Copy of the curve with extra vertices so that no edge is longer than h.
// The trace is unchanged.
PolygonalCurve densify(const PolygonalCurve& c, double h);

struct GridSearchSpec {
  Point box_lo;
  Point box_hi;
  double resolution = 0.1;
  std::size_t max_vertices = 2;  // used when the caller passes l = 0
  std::uint64_t max_grid_points = 1'000'000;
};

struct BruteForceMedianResult {
  PolygonalCurve curve;
  double cost = 0.0;
  // The continuous optimum is at least cost - additive_error.
  double additive_error = 0.0;
};

// Exhaustive search over all curves with up to l vertices on the grid of the
// given resolution inside the box. Returns the best curve by cost(t, .), an
// upper bound on the continuous optimum; additive_error = n * sqrt(d) *
// resolution bounds how far the grid restriction can overshoot.
// Branch-and-bound: a partial curve is pruned when the sum of first-vertex
// distances already exceeds the incumbent.
BruteForceMedianResult brute_force_median(const CurveSet& t, std::size_t l,
                                          const GridSearchSpec& spec,
                                          const FrechetConfig& cfg = {});

// Constructive single-curve shortcutting at radius r = d_F(sigma, tau) + tol:
// repeatedly replaces a vertex of sigma lying outside every ball B(v_j^tau, r)
// by the exit point of the preceding ball and the entry point of the
// following ball along sigma. The result has at most 2|sigma| - 2 vertices,
// every vertex in some ball, and distance to tau at most r.
PolygonalCurve simple_shortcut(const PolygonalCurve& sigma, const PolygonalCurve& tau,
                               const FrechetConfig& cfg = {});

}  // namespace klmedian

#endif
