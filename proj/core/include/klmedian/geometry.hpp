#ifndef KLMEDIAN_GEOMETRY_HPP
#define KLMEDIAN_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace klmedian {

// Thrown on invalid arguments (empty curves, non-positive radii, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration would exceed a configured cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point in R^d. The dimension is a runtime value, fixed per dataset.
struct Point {
  std::vector<double> coords;

  Point() = default;
  Point(std::initializer_list<double> c) : coords(c) {}
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }

  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator<(const Point& o) const { return coords < o.coords; }
};

double squared_distance(const Point& a, const Point& b);
double distance(const Point& a, const Point& b);
double norm(const Point& a);
bool is_finite(const Point& p);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);

// Point at parameter t in [0,1] on the segment from a to b.
Point lerp(const Point& a, const Point& b, double t);

// A piecewise-linear curve given by its vertex sequence. A single vertex is
// allowed and denotes a constant curve.
struct PolygonalCurve {
  std::vector<Point> vertices;

  PolygonalCurve() = default;
  explicit PolygonalCurve(std::vector<Point> v) : vertices(std::move(v)) {}

  std::size_t complexity() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().dim(); }
  const Point& front() const { return vertices.front(); }
  const Point& back() const { return vertices.back(); }

  bool operator==(const PolygonalCurve& o) const { return vertices == o.vertices; }
  bool operator<(const PolygonalCurve& o) const { return vertices < o.vertices; }
};

// A finite multiset of curves with stable integer ids. Duplicates are
// permitted; sampling is with replacement.
struct CurveSet {
  std::vector<PolygonalCurve> curves;
  std::vector<int> ids;

  CurveSet() = default;
  explicit CurveSet(std::vector<PolygonalCurve> cs) : curves(std::move(cs)) {
    ids.resize(curves.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  }

  std::size_t size() const { return curves.size(); }
  bool empty() const { return curves.empty(); }
  const PolygonalCurve& operator[](std::size_t i) const { return curves[i]; }

  void add(PolygonalCurve c) {
    ids.push_back(curves.empty() ? 0 : ids.back() + 1);
    curves.push_back(std::move(c));
  }

  // Maximum complexity over the set.
  std::size_t max_complexity() const;
};

struct Ball {
  Point center;
  double radius = 0.0;
};

// The r-grid-point of p: componentwise floor(p_i / r) * r.
Point grid_snap(const Point& p, double r);

// Grid points of all cells whose (closed) cell box intersects the ball.
// Every point of the ball is within sqrt(d) * cell_width of a returned point.
// Throws resource_error if the cell count would exceed max_cells.
std::vector<Point> cover_ball(const Ball& b, double cell_width,
                              std::uint64_t max_cells = 10'000'000);

// Drops zero-length edges and interior vertices that lie on the segment
// between their neighbors. The returned curve traces the same point set.
PolygonalCurve normalize_curve(const std::vector<Point>& vertices);

// Axis-aligned bounding box of a curve set; returns {min corner, max corner}.
std::pair<Point, Point> bounding_box(const CurveSet& t);
double bounding_box_diameter(const CurveSet& t);

}  // namespace klmedian

#endif
