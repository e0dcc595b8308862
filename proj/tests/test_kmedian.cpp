#include <klmedian/kmedian.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "test_helpers.hpp"

using namespace klmedian;

namespace {

// Plugin returning a fixed candidate list, ignoring the parameters.
CandidatePlugin fixed_plugin(std::vector<PolygonalCurve> candidates) {
  return [candidates = std::move(candidates)](const CurveSet&, double, double, double,
                                              RngStream&) {
    CandidateSet out;
    for (const auto& c : candidates) out.add(c, CandidateOrigin::kSeedMedian);
    return out;
  };
}

}  // namespace

TEST_CASE("clustering_cost basics") {
  CurveSet t;
  const PolygonalCurve a({Point{0, 0}, Point{1, 0}});
  const PolygonalCurve b({Point{0, 2}, Point{1, 2}});
  t.add(a);
  t.add(b);
  CHECK(clustering_cost(t, {a, b}) <= 1e-12);
  CHECK(clustering_cost(t, {a}) == doctest::Approx(frechet_distance(a, b)));
  CHECK_THROWS_AS(clustering_cost(t, {}), parameter_error);
}

TEST_CASE("clustering_cost independent of thread count") {
  RngStream rng(61);
  CurveSet t;
  for (int i = 0; i < 9; ++i) t.add(testing::random_curve(rng, 4, 2));
  const std::vector<PolygonalCurve> centers{testing::random_curve(rng, 2, 2),
                                            testing::random_curve(rng, 2, 2)};
  const double c1 = clustering_cost(t, centers, {}, 1);
  const double c4 = clustering_cost(t, centers, {}, 4);
  CHECK(c1 == c4);  // bitwise: fixed summation order
}

TEST_CASE("prune_partition sizes and tie rule") {
  const std::vector<PolygonalCurve> centers{PolygonalCurve({Point{0.0, 0.0}})};

  CurveSet one;
  one.add(PolygonalCurve({Point{5.0, 0.0}}));
  auto [kept1, pruned1] = prune_partition(one, centers);
  CHECK(pruned1.empty());
  CHECK(kept1.size() == 1);

  // Distances 1, 2, 3, 4: the two smallest go.
  CurveSet four;
  for (int i = 1; i <= 4; ++i)
    four.add(PolygonalCurve({Point{static_cast<double>(i), 0.0}}));
  auto [kept4, pruned4] = prune_partition(four, centers);
  CHECK(pruned4.ids == std::vector<int>{0, 1});
  CHECK(kept4.ids == std::vector<int>{2, 3});

  // All distances equal: lowest ids go.
  CurveSet equal;
  for (int i = 0; i < 5; ++i) equal.add(PolygonalCurve({Point{1.0, 0.0}}));
  auto [kept5, pruned5] = prune_partition(equal, centers);
  CHECK(pruned5.ids == std::vector<int>{0, 1});
  CHECK(kept5.ids == std::vector<int>{2, 3, 4});
}

TEST_CASE("prune_partition exhaustive over small distance permutations") {
  const std::vector<PolygonalCurve> centers{PolygonalCurve({Point{0.0, 0.0}})};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<double> dists(n);
    std::iota(dists.begin(), dists.end(), 1.0);
    do {
      CurveSet t;
      for (double x : dists) t.add(PolygonalCurve({Point{x, 0.0}}));
      auto [kept, pruned] = prune_partition(t, centers);
      CHECK(pruned.size() == n / 2);
      CHECK(kept.size() + pruned.size() == n);
      // Every pruned distance <= every kept distance.
      double max_pruned = 0.0, min_kept = 1e30;
      for (const auto& c : pruned.curves) max_pruned = std::max(max_pruned, c.vertices[0][0]);
      for (const auto& c : kept.curves) min_kept = std::min(min_kept, c.vertices[0][0]);
      if (!pruned.empty()) CHECK(max_pruned <= min_kept);
      // Original ids preserved and disjoint.
      std::vector<int> ids = pruned.ids;
      ids.insert(ids.end(), kept.ids.begin(), kept.ids.end());
      std::sort(ids.begin(), ids.end());
      for (std::size_t i = 0; i < n; ++i) CHECK(ids[i] == static_cast<int>(i));
    } while (std::next_permutation(dists.begin(), dists.end()));
  }
}

TEST_CASE("kmedian base cases") {
  CurveSet t;
  const PolygonalCurve a({Point{0, 0}, Point{1, 0}});
  const PolygonalCurve b({Point{0, 5}, Point{1, 5}});
  t.add(a);
  t.add(b);

  KMedianParams params;
  params.k = 2;
  params.beta = 10.0;
  params.delta = 0.5;
  params.plugin = fixed_plugin({a});

  // kappa >= |T| returns the input curves as centers.
  RngStream rng(62);
  const auto centers = kmedian(t, params, rng);
  REQUIRE(centers.size() == 2);
  CHECK(clustering_cost(t, centers) <= 1e-12);
}

TEST_CASE("kmedian validates parameters") {
  CurveSet t;
  t.add(PolygonalCurve({Point{0, 0}}));
  KMedianParams params;
  params.k = 2;
  params.beta = 4.0;  // beta <= 2k
  params.plugin = fixed_plugin({t[0]});
  RngStream rng(63);
  CHECK_THROWS_AS(kmedian(t, params, rng), parameter_error);
  params.beta = 10.0;
  params.plugin = nullptr;
  CHECK_THROWS_AS(kmedian(t, params, rng), parameter_error);
}

TEST_CASE("kmedian with oracle plugin on planted clusters meets the factor") {
  // Two well-separated planted clusters; the plugin offers both planted
  // centers, so the returned cost is within (1 + 4k^2/(beta-2k)) of planted.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RngStream data_rng(seed);
    auto c1 = testing::planted_instance(data_rng.child(1), 6, 2, 2, 0.05, 0.0, 1.0);
    auto c2 = testing::planted_instance(data_rng.child(2), 6, 2, 2, 0.05, 10.0, 11.0);
    CurveSet t;
    for (const auto& c : c1.curves.curves) t.add(c);
    for (const auto& c : c2.curves.curves) t.add(c);

    KMedianParams params;
    params.k = 2;
    params.beta = 10.0;
    params.delta = 0.5;
    params.plugin = fixed_plugin({c1.base, c2.base});

    RngStream rng(seed);
    ClusteringDiagnostics diag;
    const auto centers = kmedian(t, params, rng, &diag);
    REQUIRE(centers.size() <= 2);
    const double planted = c1.bound + c2.bound;
    CHECK(clustering_cost(t, centers) <= (1.0 + 16.0 / 6.0) * planted);
    CHECK(diag.recursive_calls > 1);  // pruning phase exercised
  }
}

TEST_CASE("kmedian deterministic with a deterministic plugin") {
  RngStream data_rng(64);
  CurveSet t;
  for (int i = 0; i < 6; ++i) t.add(testing::random_curve(data_rng, 3, 2));
  KMedianParams params;
  params.k = 2;
  params.beta = 10.0;
  params.plugin = fixed_plugin({t[0], t[3]});
  RngStream r1(9), r2(9);
  CHECK(kmedian(t, params, r1) == kmedian(t, params, r2));
}

TEST_CASE("cluster end to end on identical curves") {
  const PolygonalCurve sigma({Point{0, 0}, Point{1, 1}});
  CurveSet t;
  for (int i = 0; i < 5; ++i) t.add(sigma);
  ClusterParams params;
  params.k = 1;
  params.l = 2;
  params.epsilon = 0.5;
  params.delta = 0.5;
  params.scale = SampleScale{0.01};
  params.caps = EnumerationCaps{1000, 200};
  RngStream rng(65);
  const auto result = cluster(t, params, rng);
  REQUIRE(result.centers.size() == 1);
  CHECK(result.total_cost <= 1e-9);
  CHECK(result.assignment == std::vector<std::size_t>(5, 0));
}

TEST_CASE("cluster beta and plugin epsilon formulas") {
  CHECK(cluster_beta(2, 0.1, PluginKind::kSimple) == doctest::Approx(804.0));
  CHECK(cluster_beta(2, 0.1, PluginKind::kAdvanced) == doctest::Approx(484.0));
  CHECK(cluster_plugin_epsilon(0.1, PluginKind::kSimple) == doctest::Approx(0.02));
  CHECK(cluster_plugin_epsilon(0.15, PluginKind::kAdvanced) == doctest::Approx(0.05));
  // The derived beta always clears the 2k threshold the recursion requires.
  for (std::size_t k = 1; k <= 5; ++k)
    CHECK(cluster_beta(k, 0.9, PluginKind::kAdvanced) > 2.0 * static_cast<double>(k));
}

TEST_CASE("cluster validates epsilon ranges") {
  CurveSet t;
  t.add(PolygonalCurve({Point{0, 0}, Point{1, 0}}));
  ClusterParams params;
  params.epsilon = 1.5;
  RngStream rng(66);
  CHECK_THROWS_AS(cluster(t, params, rng), parameter_error);
  params.epsilon = 0.3;
  params.algorithm = PluginKind::kAdvanced;
  CHECK_THROWS_AS(cluster(t, params, rng), parameter_error);
}
