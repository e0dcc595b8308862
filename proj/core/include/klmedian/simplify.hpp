#ifndef KLMEDIAN_SIMPLIFY_HPP
#define KLMEDIAN_SIMPLIFY_HPP

#include "klmedian/frechet.hpp"
#include "klmedian/geometry.hpp"

namespace klmedian {

struct SimplificationResult {
  PolygonalCurve curve;              // at most l vertices, a subsequence of the input
  std::vector<std::size_t> indices;  // input indices of the kept vertices
  double error = 0.0;                // Frechet distance to the input
};

// 4-approximate minimum-error l-simplification: Imai-Iri shortcut graph over
// the input vertices, feasibility decided per shortcut with the free-space
// decision procedure, binary search over the pairwise vertex distances.
// The first and last vertex are always kept.
SimplificationResult simplify(const PolygonalCurve& t, std::size_t l,
                              const FrechetConfig& cfg = {});

}  // namespace klmedian

#endif
