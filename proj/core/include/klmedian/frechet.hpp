#ifndef KLMEDIAN_FRECHET_HPP
#define KLMEDIAN_FRECHET_HPP

#include "klmedian/geometry.hpp"

namespace klmedian {

// Tolerances for the bisection-based distance computation. At least one of
// the two must be strictly positive.
struct FrechetConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;

  // Default tolerances scaled to a dataset extent (bounding-box diameter).
  static FrechetConfig for_extent(double diameter) {
    return FrechetConfig{1e-9 * std::max(diameter, 0.0) + 1e-15, 1e-9};
  }
};

// Decides d_F(a, b) <= r via monotone reachability through the free-space
// diagram (Alt-Godau). Comparisons are closed, so boundary cases are true.
bool decide_frechet(const PolygonalCurve& a, const PolygonalCurve& b, double r);

// Continuous Frechet distance, bracketed by bisection over decide_frechet.
// The result v satisfies |v - d_F(a,b)| <= max(abs_tol, rel_tol * d_F(a,b)).
double frechet_distance(const PolygonalCurve& a, const PolygonalCurve& b,
                        const FrechetConfig& cfg = {});

// A monotone matching witnessing d_F(a,b) <= r, reported as the parameter on
// b matched to each vertex of a (the lowest feasible free-space path).
// Parameters are in b's edge scale: value j + s means edge j at fraction s.
// Requires decide_frechet(a, b, r) to hold.
std::vector<double> frechet_matching(const PolygonalCurve& a, const PolygonalCurve& b,
                                     double r);

}  // namespace klmedian

#endif
