#include <klmedian/frechet.hpp>
#include <klmedian/geometry.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

#include "test_helpers.hpp"

using namespace klmedian;

TEST_CASE("grid_snap floors componentwise") {
  CHECK(grid_snap(Point{1.5, 2.7}, 1.0) == Point{1.0, 2.0});
  CHECK(grid_snap(Point{1.3, -0.2}, 0.5) == Point{1.0, -0.5});
  CHECK(grid_snap(Point{3.0, 4.0}, 1.0) == Point{3.0, 4.0});
}

TEST_CASE("grid_snap rejects non-positive width") {
  CHECK_THROWS_AS(grid_snap(Point{1.0}, 0.0), parameter_error);
  CHECK_THROWS_AS(grid_snap(Point{1.0}, -1.0), parameter_error);
}

TEST_CASE("grid_snap properties on random points") {
  RngStream rng(11);
  for (int i = 0; i < 200; ++i) {
    const Point p = testing::random_point(rng, 3, -5.0, 5.0);
    const double r = rng.uniform_real(0.01, 2.0);
    const Point q = grid_snap(p, r);
    CHECK(grid_snap(q, r) == q);
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(p[c] - q[c] >= 0.0);
      CHECK(p[c] - q[c] < r);
    }
    CHECK(distance(p, q) <= std::sqrt(3.0) * r + 1e-12);
  }
}

TEST_CASE("cover_ball small examples") {
  auto pts = cover_ball(Ball{Point{0.5, 0.5}, 0.4}, 1.0);
  CHECK(pts == std::vector<Point>{Point{0.0, 0.0}});

  pts = cover_ball(Ball{Point{0.0, 0.0}, 0.1}, 1.0);
  const std::set<Point> got(pts.begin(), pts.end());
  const std::set<Point> want{Point{0.0, 0.0}, Point{-1.0, 0.0}, Point{0.0, -1.0},
                             Point{-1.0, -1.0}};
  CHECK(got == want);
}

TEST_CASE("cover_ball unit disk at width 1") {
  const auto pts = cover_ball(Ball{Point{0.0, 0.0}, 1.0}, 1.0);
  const std::set<Point> got(pts.begin(), pts.end());
  const std::set<Point> want{Point{-2.0, -1.0}, Point{-2.0, 0.0}, Point{-1.0, -2.0},
                             Point{-1.0, -1.0}, Point{-1.0, 0.0}, Point{-1.0, 1.0},
                             Point{0.0, -2.0},  Point{0.0, -1.0}, Point{0.0, 0.0},
                             Point{0.0, 1.0},   Point{1.0, -1.0}, Point{1.0, 0.0}};
  CHECK(got == want);
}

TEST_CASE("cover_ball contains the snapped center and covers the ball") {
  RngStream rng(12);
  for (int i = 0; i < 50; ++i) {
    const Point c = testing::random_point(rng, 2, -2.0, 2.0);
    const double r = rng.uniform_real(0.05, 0.8);
    const double w = rng.uniform_real(0.1, 0.5);
    const auto pts = cover_ball(Ball{c, r}, w);
    CHECK(std::find(pts.begin(), pts.end(), grid_snap(c, w)) != pts.end());
    // Random ball points are within sqrt(d) * w of some grid point.
    for (int s = 0; s < 20; ++s) {
      Point p = c;
      for (auto& x : p.coords) x += rng.uniform_real(-r, r) / std::sqrt(2.0);
      double best = 1e30;
      for (const auto& g : pts) best = std::min(best, distance(p, g));
      CHECK(best <= std::sqrt(2.0) * w + 1e-12);
    }
  }
}

TEST_CASE("cover_ball enforces the cell cap") {
  CHECK_THROWS_AS(cover_ball(Ball{Point{0.0, 0.0}, 1000.0}, 0.001, 1000), resource_error);
}

TEST_CASE("normalize_curve removes degeneracies only") {
  CHECK(normalize_curve({Point{0, 0}, Point{1, 0}, Point{2, 0}}) ==
        PolygonalCurve({Point{0, 0}, Point{2, 0}}));
  CHECK(normalize_curve({Point{0, 0}, Point{0, 0}, Point{1, 1}}) ==
        PolygonalCurve({Point{0, 0}, Point{1, 1}}));
  CHECK(normalize_curve({Point{0, 0}, Point{1, 1}, Point{2, 0}}) ==
        PolygonalCurve({Point{0, 0}, Point{1, 1}, Point{2, 0}}));
  // A spike doubles back; removing it would change the trace.
  CHECK(normalize_curve({Point{0, 0}, Point{1, 0}, Point{0, 0}}) ==
        PolygonalCurve({Point{0, 0}, Point{1, 0}, Point{0, 0}}));
}

TEST_CASE("normalize_curve rejects empty input") {
  CHECK_THROWS_AS(normalize_curve({}), parameter_error);
}

TEST_CASE("normalize_curve idempotent with zero distance to input") {
  RngStream rng(13);
  for (int i = 0; i < 100; ++i) {
    std::vector<Point> verts;
    const std::size_t m = 1 + rng.uniform_index(6);
    for (std::size_t v = 0; v < m; ++v) {
      // Coarse grid coordinates make degeneracies likely.
      verts.push_back(Point{static_cast<double>(rng.uniform_index(3)),
                            static_cast<double>(rng.uniform_index(3))});
    }
    const PolygonalCurve n1 = normalize_curve(verts);
    CHECK(normalize_curve(n1.vertices) == n1);
    CHECK(frechet_distance(PolygonalCurve(verts), n1) <= 1e-9);
  }
}

TEST_CASE("bounding box diameter") {
  CurveSet t;
  t.add(PolygonalCurve({Point{0.0, 0.0}, Point{1.0, 0.0}}));
  t.add(PolygonalCurve({Point{0.0, 3.0}}));
  const auto [lo, hi] = bounding_box(t);
  CHECK(lo == Point{0.0, 0.0});
  CHECK(hi == Point{1.0, 3.0});
  CHECK(bounding_box_diameter(t) == doctest::Approx(std::sqrt(10.0)));
}
