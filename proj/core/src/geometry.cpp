#include "klmedian/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace klmedian {

double squared_distance(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    double d = a.coords[i] - b.coords[i];
    s += d * d;
  }
  return s;
}

double distance(const Point& a, const Point& b) { return std::sqrt(squared_distance(a, b)); }

double norm(const Point& a) {
  double s = 0.0;
  for (double c : a.coords) s += c * c;
  return std::sqrt(s);
}

bool is_finite(const Point& p) {
  for (double c : p.coords)
    if (!std::isfinite(c)) return false;
  return true;
}

Point operator+(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Point operator*(double s, const Point& a) {
  Point r = a;
  for (double& c : r.coords) c *= s;
  return r;
}

Point lerp(const Point& a, const Point& b, double t) {
  Point r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    r.coords[i] = a.coords[i] + t * (b.coords[i] - a.coords[i]);
  return r;
}

std::size_t CurveSet::max_complexity() const {
  std::size_t m = 0;
  for (const auto& c : curves) m = std::max(m, c.complexity());
  return m;
}

Point grid_snap(const Point& p, double r) {
  if (!(r > 0.0)) throw parameter_error("grid_snap: cell width must be positive");
  if (!is_finite(p)) throw parameter_error("grid_snap: point must be finite");
  Point q = p;
  for (double& c : q.coords) {
    // floor(c / r) can land one cell off in floating point; correct against
    // the representable cell boundaries so snapping is idempotent.
    double k = std::floor(c / r);
    while ((k + 1.0) * r <= c) k += 1.0;
    while (k * r > c) k -= 1.0;
    c = k * r;
  }
  return q;
}

std::vector<Point> cover_ball(const Ball& b, double cell_width, std::uint64_t max_cells) {
  if (!(cell_width > 0.0)) throw parameter_error("cover_ball: cell width must be positive");
  if (b.radius < 0.0) throw parameter_error("cover_ball: negative radius");
  const std::size_t d = b.center.dim();

  // Candidate cell index range per axis, then filter by distance from the
  // center to the closed cell box.
  std::vector<long long> lo(d), hi(d);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    // Widened by one cell on each side: a cell box can touch the ball even
    // when its own corner lies outside the naive index range. The distance
    // filter below discards non-intersecting cells.
    lo[i] = static_cast<long long>(std::floor((b.center[i] - b.radius) / cell_width)) - 1;
    hi[i] = static_cast<long long>(std::floor((b.center[i] + b.radius) / cell_width)) + 1;
    std::uint64_t span = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    if (span != 0 && count > max_cells / span)
      throw resource_error("cover_ball: grid exceeds cell cap");
    count *= span;
  }
  if (count > max_cells) throw resource_error("cover_ball: grid exceeds cell cap");

  std::vector<Point> result;
  std::vector<long long> idx(lo);
  const double r2 = b.radius * b.radius;
  while (true) {
    double dist2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double g = static_cast<double>(idx[i]) * cell_width;
      double c = b.center[i];
      if (c < g)
        dist2 += (g - c) * (g - c);
      else if (c > g + cell_width)
        dist2 += (c - g - cell_width) * (c - g - cell_width);
    }
    if (dist2 <= r2) {
      Point p;
      p.coords.resize(d);
      for (std::size_t i = 0; i < d; ++i) p.coords[i] = static_cast<double>(idx[i]) * cell_width;
      result.push_back(std::move(p));
    }
    std::size_t axis = 0;
    while (axis < d && idx[axis] == hi[axis]) {
      idx[axis] = lo[axis];
      ++axis;
    }
    if (axis == d) break;
    ++idx[axis];
  }
  return result;
}

namespace {

// v on the segment [a,b], up to a relative tolerance.
bool on_segment(const Point& a, const Point& v, const Point& b) {
  const double ab = distance(a, b);
  const double av = distance(a, v);
  const double vb = distance(v, b);
  const double scale = std::max(1.0, ab);
  return av + vb - ab <= 1e-12 * scale;
}

}  // namespace

PolygonalCurve normalize_curve(const std::vector<Point>& vertices) {
  if (vertices.empty()) throw parameter_error("normalize_curve: empty vertex list");
  for (const auto& v : vertices)
    if (!is_finite(v)) throw parameter_error("normalize_curve: non-finite vertex");

  std::vector<Point> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) {
    if (!out.empty() && squared_distance(out.back(), v) == 0.0) continue;
    out.push_back(v);
  }
  // Remove interior vertices lying on the segment between their neighbors.
  // Spikes (a,b,a) are kept: removing b would change the traced point set.
  std::size_t i = 1;
  while (i + 1 < out.size()) {
    if (on_segment(out[i - 1], out[i], out[i + 1]))
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return PolygonalCurve(std::move(out));
}

std::pair<Point, Point> bounding_box(const CurveSet& t) {
  if (t.empty()) throw parameter_error("bounding_box: empty curve set");
  const std::size_t d = t[0].dim();
  Point lo, hi;
  lo.coords.assign(d, std::numeric_limits<double>::infinity());
  hi.coords.assign(d, -std::numeric_limits<double>::infinity());
  for (const auto& c : t.curves)
    for (const auto& v : c.vertices)
      for (std::size_t i = 0; i < d; ++i) {
        lo.coords[i] = std::min(lo.coords[i], v[i]);
        hi.coords[i] = std::max(hi.coords[i], v[i]);
      }
  return {lo, hi};
}

double bounding_box_diameter(const CurveSet& t) {
  auto [lo, hi] = bounding_box(t);
  return distance(lo, hi);
}

}  // namespace klmedian
