#include "arcmotion/area.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

namespace arcmotion {
namespace {

SproutConfig<double> relaxed_config(int n) {
  SproutConfig<double> cfg;
  cfg.h = 1e-3;
  cfg.eps = 0.05;
  cfg.R = 1.227;
  cfg.n = n;
  cfg.precision = Precision::hardware();
  cfg.strict = false;
  return cfg;
}

ArcPose<double> unit_pose(double start_angle, double sweep) {
  DirectedArc<double> arc{Circle<double>{Point<double>{0.0, -1.0}, 1.0}, start_angle, sweep};
  return ArcPose<double>{arc};
}

MotionPlan<double> single_pivot_plan(double start_angle, double sweep, double angle) {
  ArcPose<double> from = unit_pose(start_angle, sweep);
  MotionPlan<double> plan;
  plan.steps.push_back(detail::make_pivot(from, from.start_point(), angle, StepRole::Alpha));
  plan.recompute_total();
  return plan;
}

TEST(SweptAreaMc, EndpointPivotMatchesTheChordWedge) {
  const double sweeps[3] = {-0.8, -1.2, -0.35};
  const double angles[3] = {0.35, 0.6, 0.2};
  for (int c = 0; c < 3; ++c) {
    MotionPlan<double> plan = single_pivot_plan(M_PI / 2.0 - 0.3 * c, sweeps[c], angles[c]);
    const double chord = plan.steps[0].start_pose.arc.chord_length();
    const double expect = chord * chord * angles[c] / 2.0;
    EXPECT_NEAR(plan.total_swept_bound, expect, 1e-14);

    const AreaEstimate<double> mc = monte_carlo_swept_area(plan, 1000000, 99);
    EXPECT_EQ(mc.method, AreaMethod::McUnion);
    EXPECT_TRUE(estimate_consistent(mc));
    EXPECT_EQ(mc.samples, 1000000);
    EXPECT_EQ(mc.seed, 99u);
    EXPECT_GT(mc.stderr_value, 0.0);
    EXPECT_NEAR(mc.value, expect, 4.0 * mc.stderr_value);
  }
}

TEST(SweptAreaMc, AnalyticSumDominatesTheSampledUnion) {
  const SproutScene<double> sc = build_scene(relaxed_config(2));
  const MotionPlan<double> plan = build_motion_plan(sc, 1.31);
  const AreaEstimate<double> analytic = swept_area_upper_bound(plan);
  EXPECT_EQ(analytic.method, AreaMethod::AnalyticSum);
  EXPECT_EQ(analytic.stderr_value, 0.0);
  EXPECT_TRUE(estimate_consistent(analytic));
  EXPECT_EQ(analytic.value, plan.total_swept_bound);

  const AreaEstimate<double> mc = monte_carlo_swept_area(plan, 400000, 5);
  EXPECT_TRUE(estimate_consistent(mc));
  EXPECT_LE(mc.value, analytic.value + 3.0 * mc.stderr_value);
}

TEST(SweptAreaMc, SlideTracksSweepNoMeasurableArea) {
  ArcPose<double> from = unit_pose(1.2, -0.9);
  MotionPlan<double> plan;
  plan.steps.push_back(detail::make_slide_to_angle(from, 1.5));
  plan.recompute_total();
  EXPECT_EQ(plan.total_swept_bound, 0.0);

  const AreaEstimate<double> mc = monte_carlo_swept_area(plan, 10000, 3);
  EXPECT_EQ(mc.value, 0.0);
  /* sampled estimates keep a conservative positive error bar even at zero hits */
  EXPECT_GT(mc.stderr_value, 0.0);
  EXPECT_TRUE(estimate_consistent(mc));
}

TEST(SweptAreaMc, DeterministicAcrossWorkerCounts) {
  MotionPlan<double> plan = single_pivot_plan(M_PI / 2.0, -0.8, 0.35);
  setenv("ARCMOTION_WORKERS", "1", 1);
  const AreaEstimate<double> one = monte_carlo_swept_area(plan, 200000, 11);
  setenv("ARCMOTION_WORKERS", "5", 1);
  const AreaEstimate<double> five = monte_carlo_swept_area(plan, 200000, 11);
  unsetenv("ARCMOTION_WORKERS");
  EXPECT_EQ(one.value, five.value);
  EXPECT_EQ(one.stderr_value, five.stderr_value);
}

TEST(SweptAreaMc, GatesRejectTinySampleCountsAndEmptyPlans) {
  MotionPlan<double> plan = single_pivot_plan(M_PI / 2.0, -0.8, 0.35);
  EXPECT_THROW(monte_carlo_swept_area(plan, 999, 1), Error);
  MotionPlan<double> empty;
  EXPECT_THROW(monte_carlo_swept_area(empty, 10000, 1), Error);

  const SproutScene<double> sc = build_scene(relaxed_config(1));
  EXPECT_THROW(tn_minus_delta_area(sc, 999, 1), Error);
}

/* regression values recorded from the pinned deterministic runs; an
 * independent exact-membership sampler agrees with them well within
 * statistical error, so drift beyond the window means a code change */
TEST(HornUnionArea, MatchesTheFrozenRegressionValues) {
  const SproutScene<double> sc2 = build_scene(relaxed_config(2));
  const AreaEstimate<double> a2 = tn_minus_delta_area(sc2, 400000, 42);
  EXPECT_EQ(a2.method, AreaMethod::McUnion);
  EXPECT_TRUE(estimate_consistent(a2));
  EXPECT_EQ(a2.samples, 400000);
  EXPECT_EQ(a2.seed, 42u);
  EXPECT_NEAR(a2.value, 3.64715977e-05, 1e-12);
  EXPECT_NEAR(a2.stderr_value, 8.37e-06, 2e-08);

  const SproutScene<double> sc4 = build_scene(relaxed_config(4));
  const AreaEstimate<double> a4 = tn_minus_delta_area(sc4, 2000000, 42);
  EXPECT_NEAR(a4.value, 2.18829066e-05, 1e-12);
}

TEST(HornUnionArea, ZeroLevelsYieldAnEmptyDifference) {
  const SproutScene<double> sc = build_scene(relaxed_config(0));
  const AreaEstimate<double> est = tn_minus_delta_area(sc, 5000, 9);
  EXPECT_EQ(est.value, 0.0);
  EXPECT_EQ(est.stderr_value, 0.0);
  EXPECT_EQ(est.method, AreaMethod::AnalyticSum);
  EXPECT_TRUE(estimate_consistent(est));
  EXPECT_EQ(est.seed, 9u);
}

TEST(HornUnionArea, MethodNamesAreStable) {
  EXPECT_STREQ(area_method_name(AreaMethod::AnalyticSum), "ANALYTIC_SUM");
  EXPECT_STREQ(area_method_name(AreaMethod::McUnion), "MC_UNION");
}

TEST(DecompositionBound, FormulaAndGateFollowTheConstants) {
  const SproutConfig<double> cfg = relaxed_config(12);
  const DecompositionBound<double> db = decomposition_bound(cfg);
  const LemmaConstants<double> lc = compute_constants(cfg.h, cfg.eps);
  EXPECT_EQ(db.c, lc.c);
  EXPECT_EQ(db.n0, lc.n0);
  const double log2n = std::log(12.0) / std::log(2.0);
  const double tail = M_PI * std::pow(2.0 * (log2n + 1.0) / 12.0, 2.0);
  EXPECT_NEAR(db.bound, 20000.0 * lc.c * lc.c / 12.0 + tail, 1e-6 * db.bound);
  /* the relaxed regime sits far below the admissible level count */
  EXPECT_FALSE(db.hypotheses_met);
  EXPECT_GT(std::max(10.0 * db.c, (1.0 + db.c) / db.v), 12.0);

  /* with coarse scales the constants shrink enough for the gate to open */
  SproutConfig<double> coarse = cfg;
  coarse.h = 1.0;
  coarse.eps = 0.3;
  coarse.n = 4000;
  const DecompositionBound<double> open = decomposition_bound(coarse);
  const double gate = std::max(10.0 * open.c, (1.0 + open.c) / open.v);
  EXPECT_EQ(open.hypotheses_met, 4000.0 > gate);
  EXPECT_TRUE(open.hypotheses_met);
  coarse.n = 1;
  const DecompositionBound<double> shut = decomposition_bound(coarse);
  EXPECT_FALSE(shut.hypotheses_met);
}

TEST(DecompositionBound, ZeroLevelsGiveZeroBoundAndUnmetHypotheses) {
  const DecompositionBound<double> db = decomposition_bound(relaxed_config(0));
  EXPECT_EQ(db.bound, 0.0);
  EXPECT_FALSE(db.hypotheses_met);
  EXPECT_GT(db.c, 0.0);
}

TEST(DecompositionBound, PieceBoundHalvesWithDepth) {
  const SproutConfig<double> cfg = relaxed_config(8);
  const LemmaConstants<double> lc = compute_constants(cfg.h, cfg.eps);
  EXPECT_NEAR(decomposition_piece_bound(cfg, 0), 10000.0 * lc.c * lc.c / 64.0,
              1e-6 * decomposition_piece_bound(cfg, 0));
  for (int i = 0; i < 6; ++i)
    EXPECT_DOUBLE_EQ(decomposition_piece_bound(cfg, i + 1), decomposition_piece_bound(cfg, i) / 2.0);
}

TEST(ConvergenceStudy, RowsCarryAreasBoundsAndTimings) {
  const std::vector<ConvergenceRow<double>> rows =
      convergence_study(relaxed_config(0), std::vector<int>{2, 3}, 50000, 7);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].n, 2);
  EXPECT_EQ(rows[1].n, 3);
  for (const auto &row : rows) {
    EXPECT_TRUE(row.construction_ok);
    EXPECT_TRUE(row.note.empty());
    EXPECT_EQ(row.area.samples, 50000);
    EXPECT_EQ(row.area.seed, 7u);
    EXPECT_GT(row.area.value, 0.0);
    EXPECT_GT(row.analytic_bound, 0.0);
    EXPECT_GT(row.runtime_seconds, 0.0);
  }
}

TEST(ConvergenceStudy, UnsortedLevelsAreRejected) {
  EXPECT_THROW(convergence_study(relaxed_config(0), std::vector<int>{4, 4}, 5000, 1), Error);
  EXPECT_THROW(convergence_study(relaxed_config(0), std::vector<int>{6, 2}, 5000, 1), Error);
}

TEST(ConvergenceStudy, FailedConstructionIsRecordedNotThrown) {
  SproutConfig<double> bad = relaxed_config(0);
  bad.h = 2.0; /* ring points escape the lune at any level count */
  const std::vector<ConvergenceRow<double>> rows =
      convergence_study(bad, std::vector<int>{1, 2}, 5000, 3);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto &row : rows) {
    EXPECT_FALSE(row.construction_ok);
    EXPECT_FALSE(row.note.empty());
    EXPECT_EQ(row.area.samples, 0);
    EXPECT_GE(row.runtime_seconds, 0.0);
  }
}

TEST(TouchedLength, AccumulatesSlidesAndPivotTraces) {
  ArcPose<double> from = unit_pose(1.2, -0.9);
  MotionPlan<double> plan;
  plan.steps.push_back(detail::make_slide_to_angle(from, 1.5));
  plan.steps.push_back(detail::make_pivot(plan.steps.back().end_pose,
                                          plan.steps.back().end_pose.start_point(), 0.35,
                                          StepRole::Beta));
  plan.recompute_total();
  const double chord = from.arc.chord_length();
  const double expect = (0.3 + 0.9) * 1.0 + (0.9 * 1.0 + chord * 0.35);
  EXPECT_NEAR(touched_curve_length(plan), expect, 1e-12);
}

}  // namespace
}  // namespace arcmotion
