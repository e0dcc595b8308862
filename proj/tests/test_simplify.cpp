#include <klmedian/simplify.hpp>

#include <doctest.h>

#include <limits>

#include "test_helpers.hpp"

using namespace klmedian;

namespace {

// Minimum d_F(t, sigma) over all vertex subsequences sigma of t with at most
// l vertices that keep the endpoints.
double vertex_restricted_optimum(const PolygonalCurve& t, std::size_t l,
                                 const FrechetConfig& cfg = {}) {
  const std::size_t m = t.complexity();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> picked{0};
  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (picked.back() == m - 1) {
      if (picked.size() <= l) {
        std::vector<Point> verts;
        for (std::size_t i : picked) verts.push_back(t.vertices[i]);
        best = std::min(best, frechet_distance(t, PolygonalCurve(verts), cfg));
      }
      return;
    }
    if (picked.size() >= l) return;
    for (std::size_t i = next; i < m; ++i) {
      picked.push_back(i);
      self(self, i + 1);
      picked.pop_back();
    }
  };
  recurse(recurse, 1);
  return best;
}

}  // namespace

TEST_CASE("simplify identity and collinear cases") {
  const PolygonalCurve collinear({Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}});
  const auto r = simplify(collinear, 2);
  CHECK(r.curve == PolygonalCurve({Point{0, 0}, Point{3, 0}}));
  CHECK(r.error <= 1e-9);

  const PolygonalCurve short_curve({Point{0, 0}, Point{1, 1}});
  const auto id = simplify(short_curve, 4);
  CHECK(id.curve == short_curve);
  CHECK(id.error == 0.0);
  CHECK(id.indices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("simplify rejects invalid parameters") {
  const PolygonalCurve c({Point{0, 0}, Point{1, 0}});
  CHECK_THROWS_AS(simplify(c, 1), parameter_error);
  CHECK_THROWS_AS(simplify(PolygonalCurve{}, 2), parameter_error);
}

TEST_CASE("simplify zigzag to a segment") {
  const PolygonalCurve zig({Point{0, 0}, Point{1, 1}, Point{2, 0}, Point{3, 1}, Point{4, 0}});
  const auto r = simplify(zig, 2);
  CHECK(r.curve == PolygonalCurve({Point{0, 0}, Point{4, 0}}));
  CHECK(r.error == doctest::Approx(1.0).epsilon(1e-9));
  // The optimal unrestricted 2-vertex error is 0.5, so the ratio is 2 <= 4.
}

TEST_CASE("simplify output is a vertex subsequence with consistent error") {
  RngStream rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto t = testing::random_curve(rng, 3 + rng.uniform_index(6), 2);
    if (t.complexity() < 3) continue;
    const std::size_t l = 2 + rng.uniform_index(t.complexity() - 2);
    const auto r = simplify(t, l);
    CHECK(r.curve.complexity() <= l);
    REQUIRE(r.indices.size() == r.curve.complexity());
    CHECK(r.indices.front() == 0);
    CHECK(r.indices.back() == t.complexity() - 1);
    for (std::size_t v = 0; v < r.indices.size(); ++v) {
      if (v > 0) CHECK(r.indices[v] > r.indices[v - 1]);
      CHECK(r.curve.vertices[v] == t.vertices[r.indices[v]]);
    }
    CHECK(r.error == doctest::Approx(frechet_distance(t, r.curve)).epsilon(1e-9));
  }
}

TEST_CASE("simplify within factor 4 of the vertex-restricted optimum") {
  RngStream rng(32);
  for (int i = 0; i < 40; ++i) {
    const auto t = testing::random_curve(rng, 4 + rng.uniform_index(5), 2);
    if (t.complexity() < 4) continue;
    const std::size_t l = 3;
    const auto r = simplify(t, l);
    const double opt = vertex_restricted_optimum(t, l);
    CHECK(r.error <= 4.0 * opt + 1e-6);
  }
}

TEST_CASE("simplify is deterministic") {
  RngStream rng(33);
  const auto t = testing::random_curve(rng, 8, 2);
  const auto r1 = simplify(t, 3);
  const auto r2 = simplify(t, 3);
  CHECK(r1.curve == r2.curve);
  CHECK(r1.indices == r2.indices);
}
