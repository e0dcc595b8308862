#include "klmedian/simplify.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace klmedian {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

class ShortcutGraph {
 public:
  explicit ShortcutGraph(const PolygonalCurve& t) : t_(t), m_(t.complexity()) {}

  // Is the shortcut v_i -> v_j within radius r of the subcurve t[i..j]?
  bool edge(std::size_t i, std::size_t j, double r) {
    auto& known = bounds_[{i, j}];
    if (r >= known.min_true) return true;
    if (r <= known.max_false) return false;
    PolygonalCurve seg({t_.vertices[i], t_.vertices[j]});
    PolygonalCurve sub(std::vector<Point>(t_.vertices.begin() + static_cast<std::ptrdiff_t>(i),
                                          t_.vertices.begin() + static_cast<std::ptrdiff_t>(j) + 1));
    const bool ok = decide_frechet(seg, sub, r);
    if (ok)
      known.min_true = std::min(known.min_true, r);
    else
      known.max_false = std::max(known.max_false, r);
    return ok;
  }

  // Minimum shortcut-edge count from vertex 0 to every vertex at radius r.
  std::vector<std::size_t> hops_from_start(double r) { return bfs(r, /*from_start=*/true); }
  // Minimum shortcut-edge count from every vertex to the last one.
  std::vector<std::size_t> hops_to_end(double r) { return bfs(r, /*from_start=*/false); }

 private:
  std::vector<std::size_t> bfs(double r, bool from_start) {
    std::vector<std::size_t> dist(m_, kUnreachable);
    std::deque<std::size_t> queue;
    const std::size_t source = from_start ? 0 : m_ - 1;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < m_; ++v) {
        if (dist[v] != kUnreachable) continue;
        const bool has = from_start ? (v > u && edge(u, v, r)) : (v < u && edge(v, u, r));
        if (has) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }

  struct Bounds {
    double max_false = -std::numeric_limits<double>::infinity();
    double min_true = std::numeric_limits<double>::infinity();
  };

  const PolygonalCurve& t_;
  std::size_t m_;
  std::map<std::pair<std::size_t, std::size_t>, Bounds> bounds_;
};

}  // namespace

SimplificationResult simplify(const PolygonalCurve& t, std::size_t l, const FrechetConfig& cfg) {
  if (l < 2) throw parameter_error("simplify: l must be at least 2");
  if (t.empty()) throw parameter_error("simplify: empty curve");
  const std::size_t m = t.complexity();
  if (m <= l) {
    SimplificationResult r;
    r.curve = t;
    r.indices.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.indices[i] = i;
    r.error = 0.0;
    return r;
  }

  std::vector<double> radii{0.0};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) radii.push_back(distance(t.vertices[i], t.vertices[j]));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  ShortcutGraph graph(t);
  const std::size_t max_edges = l - 1;
  auto feasible = [&](double r) {
    auto dist = graph.hops_from_start(r);
    return dist[m - 1] != kUnreachable && dist[m - 1] <= max_edges;
  };

  // Smallest feasible candidate radius. The largest radius (diameter pair)
  // always admits the 1-edge path.
  std::size_t lo = 0, hi = radii.size() - 1;
  if (!feasible(radii[lo])) {
    while (lo + 1 < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (feasible(radii[mid]))
        hi = mid;
      else
        lo = mid;
    }
    lo = hi;
  }
  const double radius = radii[lo];

  // Fewest edges first, then the lexicographically smallest index sequence.
  auto to_end = graph.hops_to_end(radius);
  SimplificationResult result;
  std::size_t cur = 0;
  std::size_t remaining = to_end[0];
  result.indices.push_back(0);
  while (cur != m - 1) {
    for (std::size_t v = cur + 1; v < m; ++v) {
      if (to_end[v] != kUnreachable && to_end[v] + 1 == remaining && graph.edge(cur, v, radius)) {
        result.indices.push_back(v);
        cur = v;
        --remaining;
        break;
      }
    }
  }
  std::vector<Point> verts;
  verts.reserve(result.indices.size());
  for (std::size_t idx : result.indices) verts.push_back(t.vertices[idx]);
  result.curve = PolygonalCurve(std::move(verts));
  result.error = frechet_distance(t, result.curve, cfg);
  return result;
}

}  // namespace klmedian
