#include <klmedian/candidates.hpp>
#include <klmedian/median_seed.hpp>

#include <doctest.h>

#include "test_helpers.hpp"

using namespace klmedian;

namespace {
const SampleScale kTestScale{0.02};
const EnumerationCaps kTestCaps{100'000, 100'000};

CandidateParams test_params(double beta, double epsilon, std::size_t l) {
  CandidateParams p;
  p.beta = beta;
  p.delta = 0.2;
  p.epsilon = epsilon;
  p.l = l;
  p.scale = kTestScale;
  p.caps = kTestCaps;
  return p;
}
}  // namespace

TEST_CASE("candidate sample size formulas") {
  // epsilon = 0.3, so eps' = 0.1; -8 * 2 / 0.1 * (ln 0.5 - ln 4) = 332.71 -> 333
  CHECK(simple_candidates_sample_size(2.0, 0.5, 0.1) == 333);
  // advanced with l = 3: -8 * 2 * 3 / 0.1 * (ln 0.5 - ln 8) = 1330.84 -> 1331
  CHECK(advanced_candidates_sample_size(2.0, 0.5, 0.1, 3) == 1331);
  // advanced with l = 2 clamps 2l-4 to 1, so the log term is ln 4:
  // -8 * 1 * 2 / 0.1 * (ln 0.5 - ln 4) = 332.71 -> 333
  CHECK(advanced_candidates_sample_size(1.0, 0.5, 0.1, 2) == 333);
  CHECK(subset_sample_size(333, 2.0) == 84);
  CHECK(subset_sample_size(4, 100.0) == 1);
  // median5 at delta = 0.5, eps' = 0.1
  CHECK(median5_candidate_sample_size(0.5, 0.1) == 42);
  // inner ceil(-80 (ln 0.5 - ln 4)) = ceil(166.36) = 167
  CHECK(median5_eval_sample_size(0.5, 0.1) ==
        static_cast<std::size_t>(std::ceil(-6400.0 * (std::log(0.5) - std::log(167.0)))));
}

TEST_CASE("grid parameter arithmetic") {
  // simple: delta=0.2, n=4, |S|=10, eps'=0.1, Delta=34, d=4
  // Delta_l = (0.2*4/20)*(34/34) = 0.04; Delta_u = 340
  // radius = 1.1*340 = 374; width = (0.2/(4*2))*0.04 = 0.001
  const auto s = simple_grid_params(0.2, 4.0, 10, 0.1, 34.0, 4);
  CHECK(s.radius == doctest::Approx(374.0));
  CHECK(s.width == doctest::Approx(0.001));
  // advanced, l=3: Delta_l = (2*0.2*4/40)*(34/34) = 0.04
  // radius = (12/0.1)*340 = 40800; width same shape as simple
  const auto a = advanced_grid_params(0.2, 4.0, 10, 0.1, 34.0, 4, 3);
  CHECK(a.radius == doctest::Approx(40800.0));
  CHECK(a.width == doctest::Approx(0.001));
  // median5: eps'=0.1, Delta=1, n=2, d=4
  // radius = (3.4/2)*34 = 57.8; width = 0.2/(2*2) = 0.05
  const auto m = median5_grid_params(0.1, 1.0, 2.0, 4);
  CHECK(m.radius == doctest::Approx(57.8));
  CHECK(m.width == doctest::Approx(0.05));
}

TEST_CASE("enumerate_curves over two points") {
  const std::vector<Point> pts{Point{0, 0}, Point{1, 0}};
  auto [curves, truncated] = enumerate_curves(pts, 2, kTestCaps);
  CHECK_FALSE(truncated);
  REQUIRE(curves.size() == 4);
  CHECK(curves[0] == PolygonalCurve({Point{0, 0}}));
  CHECK(curves[1] == PolygonalCurve({Point{1, 0}}));
  CHECK(curves[2] == PolygonalCurve({Point{0, 0}, Point{1, 0}}));
  CHECK(curves[3] == PolygonalCurve({Point{1, 0}, Point{0, 0}}));
}

TEST_CASE("enumerate_curves singleton and non-collinear triple") {
  auto [single, t1] = enumerate_curves({Point{2, 2}}, 5, kTestCaps);
  CHECK_FALSE(t1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == PolygonalCurve({Point{2, 2}}));

  const std::vector<Point> pts{Point{0, 0}, Point{1, 0}, Point{0, 1}};
  auto [curves, t2] = enumerate_curves(pts, 3, kTestCaps);
  CHECK_FALSE(t2);
  CHECK(curves.size() == 21);  // 3 + 6 + 12, no collinear collapses
}

TEST_CASE("enumerate_curves dedupes collinear sequences and honors caps") {
  // Three collinear points: a->c via b normalizes to a->c.
  const std::vector<Point> pts{Point{0, 0}, Point{1, 0}, Point{2, 0}};
  auto [curves, truncated] = enumerate_curves(pts, 3, kTestCaps);
  CHECK_FALSE(truncated);
  CHECK(curves.size() < 21);
  for (const auto& c : curves) CHECK(normalize_curve(c.vertices) == c);

  auto [capped, hit] = enumerate_curves(pts, 3, EnumerationCaps{100'000, 5});
  CHECK(hit);
  CHECK(capped.size() == 5);
}

TEST_CASE("candidates_simple on identical curves contains the curve") {
  const PolygonalCurve sigma({Point{0, 0}, Point{1, 1}});
  CurveSet t;
  for (int i = 0; i < 5; ++i) t.add(sigma);
  RngStream rng(51);
  const auto out = candidates_simple(t, test_params(1.0, 0.3, 2), rng);
  REQUIRE_FALSE(out.empty());
  bool found = false;
  for (const auto& c : out.curves) found = found || c == sigma;
  CHECK(found);
  // Delta = 0 short-circuit: pools are the curves' own vertices.
  CHECK(out.subsets_processed >= 1);
  for (std::size_t i = 0; i < out.size(); ++i)
    CHECK(out.curves[i].complexity() <= 2);
}

TEST_CASE("candidate invariants on random input") {
  RngStream data_rng(52);
  CurveSet t;
  for (int i = 0; i < 5; ++i) t.add(testing::random_curve(data_rng, 3, 2));
  const std::size_t l = 2;

  RngStream r1(7), r2(7);
  const auto a = candidates_simple(t, test_params(2.0, 0.3, l), r1);
  const auto b = candidates_simple(t, test_params(2.0, 0.3, l), r2);
  CHECK(a.curves == b.curves);  // deterministic
  REQUIRE(a.size() == a.provenance.size());
  CHECK(a.provenance[0] == CandidateOrigin::kSeedMedian);
  for (const auto& c : a.curves) {
    CHECK(c.complexity() >= 1);
    CHECK(c.complexity() <= 2 * l - 2);
    CHECK(normalize_curve(c.vertices) == c);
  }

  RngStream r3(7);
  const auto adv = candidates_advanced(t, test_params(2.0, 0.15, l), r3);
  REQUIRE_FALSE(adv.empty());
  CHECK(adv.l2_log_adjusted);
  for (const auto& c : adv.curves) CHECK(c.complexity() <= 2 * l - 2);
}

TEST_CASE("candidates_advanced rejects epsilon above 0.158") {
  CurveSet t;
  t.add(PolygonalCurve({Point{0, 0}, Point{1, 0}}));
  RngStream rng(53);
  CHECK_THROWS_AS(candidates_advanced(t, test_params(1.0, 0.3, 2), rng), parameter_error);
}

TEST_CASE("faithful grid constants trip the caps") {
  RngStream data_rng(54);
  CurveSet t;
  for (int i = 0; i < 4; ++i) t.add(testing::random_curve(data_rng, 2, 2));
  CandidateParams p = test_params(1.0, 0.15, 2);
  p.caps = EnumerationCaps{1000, 50};
  RngStream rng(55);
  const auto out = candidates_advanced(t, p, rng);
  CHECK(out.truncated);
  // Seed medians survive truncation.
  bool has_seed = false;
  for (const auto tag : out.provenance) has_seed = has_seed || tag == CandidateOrigin::kSeedMedian;
  CHECK(has_seed);
}

TEST_CASE("median5 on identical curves returns a zero-cost center") {
  const PolygonalCurve sigma({Point{0, 0}, Point{2, 1}});
  CurveSet t;
  for (int i = 0; i < 5; ++i) t.add(sigma);
  RngStream rng(56);
  const auto r = median5(t, 0.2, 0.5, 2, kTestScale, kTestCaps, {}, rng);
  CHECK(r.cost <= 1e-9);
  CHECK(frechet_distance(r.curve, sigma) <= 1e-9);
}

TEST_CASE("median5 planted bound and complexity") {
  RngStream data_rng(57);
  auto inst = testing::planted_instance(data_rng, 10, 2, 2, 0.05);
  RngStream rng(3);
  const auto r = median5(inst.curves, 0.2, 0.5, 2, kTestScale, kTestCaps, {}, rng);
  CHECK(r.curve.complexity() <= 2);
  CHECK(r.cost == doctest::Approx(cost_single(inst.curves, r.curve)).epsilon(1e-9));
  CHECK(r.cost <= 5.5 * inst.bound);
}

TEST_CASE("median5 falls back to the seed under starved caps") {
  RngStream data_rng(58);
  CurveSet t;
  for (int i = 0; i < 4; ++i) t.add(testing::random_curve(data_rng, 3, 2));
  RngStream rng(59);
  const auto r = median5(t, 0.2, 0.5, 2, kTestScale, EnumerationCaps{1, 1}, {}, rng);
  CHECK(r.truncated);
  CHECK_FALSE(r.curve.empty());
}
