#include <gtest/gtest.h>

#include <cmath>

#include "arcmotion/lemmas.hpp"
#include "arcmotion/prng.hpp"

using namespace arcmotion;

namespace {
const double kPi = 3.14159265358979323846;

Point<double> pt(double x, double y) { return Point<double>(x, y); }
const Circle<double> kUnit(Point<double>(0.0, 0.0), 1.0);
}  // namespace

TEST(RotateToContain, LandsTargetAndKeepsPivot) {
  const Point<double> Q = kUnit.point_at(0.0);
  const Point<double> P = pt(0.9 * std::cos(0.3), 0.9 * std::sin(0.3));
  auto [K2, alpha] = rotate_circle_to_contain(kUnit, Q, P, Sense::Positive);
  EXPECT_GT(alpha, 0.0);
  EXPECT_LT(alpha, kPi / 2.0);
  EXPECT_NEAR(dist(P, K2.center), 1.0, 1e-12);  /* P captured */
  EXPECT_NEAR(dist(Q, K2.center), 1.0, 1e-12);  /* Q still on the circle */
  /* the rotated center really is the rotation of the old center about Q */
  const Point<double> want = rotate_point(kUnit.center, Q, alpha);
  EXPECT_NEAR(dist(K2.center, want), 0.0, 1e-12);
}

TEST(RotateToContain, PointAlreadyOnCircleNeedsNoTurn) {
  const Point<double> Q = kUnit.point_at(0.0);
  const Point<double> P = kUnit.point_at(0.4);
  auto [K2, alpha] = rotate_circle_to_contain(kUnit, Q, P, Sense::Positive);
  EXPECT_NEAR(alpha, 0.0, 1e-6);
  EXPECT_NEAR(dist(K2.center, kUnit.center), 0.0, 1e-6);
}

TEST(RotateToContain, Guards) {
  const Point<double> Q = kUnit.point_at(0.0);
  EXPECT_THROW(rotate_circle_to_contain(kUnit, Q, Q, Sense::Positive), Error);
  EXPECT_THROW(rotate_circle_to_contain(kUnit, Q, pt(-1.5, 0.0), Sense::Positive), Error);
}

namespace {
/* capture configuration: Q on the unit circle, P at radial distance d
 * (inside or outside), at angular offset psi past Q (positive orientation) */
struct CaptureCase {
  Point<double> Q, P;
};

CaptureCase make_capture(double phi_q, double d, double psi, bool interior) {
  CaptureCase c;
  c.Q = kUnit.point_at(phi_q);
  const double r = interior ? 1.0 - d : 1.0 + d;
  c.P = pt(r * std::cos(phi_q + psi), r * std::sin(phi_q + psi));
  return c;
}
}  // namespace

TEST(Lemma1, InteriorCapturePasses) {
  const double d = 0.01;
  CaptureCase c = make_capture(0.0, d, 0.3, true);
  LemmaReport rep = check_lemma1(kUnit, c.Q, c.P, Sense::Positive);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
}

TEST(Lemma1, ExteriorCapturePasses) {
  const double d = 0.01;
  CaptureCase c = make_capture(0.0, d, 0.4, false);
  LemmaReport rep = check_lemma1(kUnit, c.Q, c.P, Sense::Negative);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
}

TEST(Lemma1, ZeroDistanceCaptureIsFree) {
  const Point<double> Q = kUnit.point_at(0.0);
  const Point<double> P = kUnit.point_at(0.7);
  LemmaReport rep = check_lemma1(kUnit, Q, P, Sense::Positive);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
}

TEST(Lemma1, WrongOrientationFailsHypotheses) {
  const double d = 0.01;
  CaptureCase c = make_capture(0.0, d, -0.3, true); /* negative orientation */
  LemmaReport rep = check_lemma1(kUnit, c.Q, c.P, Sense::Positive);
  EXPECT_FALSE(rep.hypotheses_met);
  EXPECT_FALSE(rep.pass);
}

TEST(Lemma1, TooCloseEndpointsFailHypotheses) {
  const double d = 0.04; /* needs pq >= 0.4, give it 0.1 */
  CaptureCase c = make_capture(0.0, d, 0.1, true);
  LemmaReport rep = check_lemma1(kUnit, c.Q, c.P, Sense::Positive);
  EXPECT_FALSE(rep.hypotheses_met);
}

TEST(Lemma1, RandomSweepBothCases) {
  Prng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const double d = rng.uniform(1e-6, 0.15);
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    const bool interior = (trial % 2) == 0;
    const double psi_lo = (interior ? 2.5 : 3.5) * std::sqrt(d) + 0.05;
    const double psi = rng.uniform(psi_lo, psi_lo + 0.2);
    CaptureCase c = make_capture(phi, d, psi, interior);
    LemmaReport rep =
        check_lemma1(kUnit, c.Q, c.P, interior ? Sense::Positive : Sense::Negative);
    ASSERT_TRUE(rep.hypotheses_met) << "trial " << trial;
    ASSERT_TRUE(rep.pass) << "trial " << trial;
  }
}

TEST(SproutIntersection, PositiveSenseRootNearFirstPoint) {
  const Point<double> A = kUnit.point_at(0.2);
  const Point<double> B = kUnit.point_at(0.35); /* eta = 0.15 */
  const double beta = 0.1, alpha = 0.07;
  auto [P, rep] = sprout_intersection(kUnit, A, B, alpha, beta, Sense::Positive);
  EXPECT_EQ(rep.lemma_id, "lemma3");
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
  EXPECT_LT(dist(P, kUnit.center), 1.0); /* inside */
  EXPECT_LT(dist(P, A), 20.0 * 0.15 + 1e-9);
  /* the root is on both rotated circles */
  const Circle<double> KA(rotate_point(kUnit.center, A, alpha), 1.0);
  const Circle<double> KB(rotate_point(kUnit.center, B, beta), 1.0);
  EXPECT_NEAR(dist(P, KA.center), 1.0, 1e-12);
  EXPECT_NEAR(dist(P, KB.center), 1.0, 1e-12);
}

TEST(SproutIntersection, NegativeSenseRootOutside) {
  const Point<double> A = kUnit.point_at(0.5);
  const Point<double> B = kUnit.point_at(0.58); /* eta = 0.08 < 0.1 */
  const double beta = 0.05, alpha = 0.03;
  auto [P, rep] = sprout_intersection(kUnit, A, B, alpha, beta, Sense::Negative);
  EXPECT_EQ(rep.lemma_id, "lemma9");
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
  EXPECT_GT(dist(P, kUnit.center), 1.0); /* outside */
  EXPECT_LT(dist(P, A), 50.0 * 0.08 + 1e-9);
}

TEST(SproutIntersection, GateViolationsThrow) {
  const Point<double> A = kUnit.point_at(0.2);
  const Point<double> B = kUnit.point_at(0.35);
  /* alpha too large relative to beta */
  EXPECT_THROW(sprout_intersection(kUnit, A, B, 0.09, 0.1, Sense::Positive), Error);
  /* beta above eta */
  EXPECT_THROW(sprout_intersection(kUnit, A, B, 0.07, 0.2, Sense::Positive), Error);
  /* wrong order: eta negative */
  EXPECT_THROW(sprout_intersection(kUnit, B, A, 0.07, 0.1, Sense::Positive), Error);
}

TEST(ChordDirection, TipChordHugsTheVerticalAxis) {
  const double eps = 0.05, h = 0.01;
  /* tip arc sits near the west pole of the eps circle about the origin */
  DirectedArc<double> tip(Circle<double>(pt(0, 0), eps), kPi + 0.025, h);
  const Point<double> q1 = tip.circle.point_at(tip.start_angle + 0.2 * h);
  const Point<double> q2 = tip.circle.point_at(tip.start_angle + 0.9 * h);
  LemmaReport rep = chord_direction_bound(tip, q1, q2, h, eps);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
}

TEST(ChordDirection, OffArcPointsFailHypotheses) {
  const double eps = 0.05, h = 0.01;
  DirectedArc<double> tip(Circle<double>(pt(0, 0), eps), kPi + 0.025, h);
  LemmaReport rep = chord_direction_bound(tip, pt(0.2, 0.0), pt(0.2, 0.1), h, eps);
  EXPECT_FALSE(rep.hypotheses_met);
  const Point<double> q = tip.circle.point_at(tip.start_angle);
  EXPECT_THROW(chord_direction_bound(tip, q, q, h, eps), Error);
}

namespace {
/* synthetic junction in the frame whose origin the centers hug: two unit
 * circles tied at a far point C, each through a point near the north pole */
struct Junction {
  Point<double> Qp, Qpp, C;
  Circle<double> Kp, Kpp;
};

Junction make_junction(double alpha) {
  Junction j;
  j.Kp = Circle<double>(pt(0, 0), 1.0);
  j.C = j.Kp.point_at(0.25);
  j.Kpp = Circle<double>(rotate_point(j.Kp.center, j.C, alpha), 1.0);
  j.Qp = j.Kp.point_at(kPi / 2.0 + 0.03);
  j.Qpp = j.Kpp.point_at(kPi / 2.0 - 0.04);
  return j;
}
}  // namespace

TEST(JunctionRotation, SmallAlphaNearHorizontalChord) {
  const double eps = 0.05;
  Junction j = make_junction(0.01);
  LemmaReport rep = junction_rotation_check(j.Qp, j.Qpp, j.C, j.Kp, j.Kpp, eps);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
}

TEST(JunctionRotation, SwappedHeightsFailHypotheses) {
  const double eps = 0.05;
  Junction j = make_junction(0.01);
  LemmaReport rep = junction_rotation_check(j.Qpp, j.Qp, j.C, j.Kpp, j.Kp, eps);
  EXPECT_FALSE(rep.hypotheses_met);
}

TEST(JunctionRotation, FarCentersFailHypotheses) {
  const double eps = 0.05;
  Junction j = make_junction(0.01);
  j.Kpp.center = pt(0.2, 0.0); /* way past eps */
  LemmaReport rep = junction_rotation_check(j.Qp, j.Qpp, j.C, j.Kp, j.Kpp, eps);
  EXPECT_FALSE(rep.hypotheses_met);
}

TEST(SmallestAngle, KnownTriangles) {
  LemmaReport rep = smallest_angle_bound(3.0, 4.0, 5.0);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
  /* thin sliver: angle about a/c, bound 2a/c */
  rep = smallest_angle_bound(0.001, 1.0, 1.0);
  EXPECT_TRUE(rep.pass);
  rep = smallest_angle_bound(1.0, 1.0, 1.0);
  EXPECT_TRUE(rep.pass); /* pi/3 < 2 */
}

TEST(SmallestAngle, Guards) {
  EXPECT_THROW(smallest_angle_bound(4.0, 3.0, 5.0), Error);  /* unsorted */
  EXPECT_THROW(smallest_angle_bound(1.0, 1.0, 3.0), Error);  /* not a triangle */
  EXPECT_THROW(smallest_angle_bound(0.0, 1.0, 1.0), Error);  /* degenerate side */
}

TEST(QuarticCertificate, PassesUpToTheCap) {
  LemmaReport rep = polynomial_certificate(1.227, 10000);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass);
  rep = polynomial_certificate(1.228, 10000);
  EXPECT_TRUE(rep.hypotheses_met);
  EXPECT_TRUE(rep.pass); /* still barely positive at the endpoint */
  rep = polynomial_certificate(1.229, 10000);
  EXPECT_FALSE(rep.hypotheses_met); /* out of the certified window */
  rep = polynomial_certificate(1.0, 1);
  EXPECT_FALSE(rep.hypotheses_met); /* grid too small */
}

TEST(QuarticCertificate, BigFloatAgrees) {
  using B = BigFloat;
  LemmaReport rep = polynomial_certificate(scalar_parse<B>("1.227"), 2000);
  EXPECT_TRUE(rep.pass);
}

TEST(ArccosAccuracy, MatchesClosedForm) {
  /* arccos(1 - u) = h exactly when u = 1 - cos h */
  for (double h : {0.01, 0.001, 0.1}) {
    const double u = arccos_accuracy_u(h);
    EXPECT_NEAR(u, 1.0 - std::cos(h), 1e-12) << "h = " << h;
  }
  EXPECT_GT(arccos_accuracy_u(0.002), arccos_accuracy_u(0.001));
}

TEST(LemmaConstantsTest, RelaxedScales) {
  LemmaConstants<double> k = compute_constants(0.001, 0.05);
  EXPECT_NEAR(k.u, 1.0 - std::cos(0.001), 1e-12);
  EXPECT_NEAR(k.n0, 2.0 / k.u, 1e-3);
  EXPECT_GE(k.c, 2.0 * k.n0 - 1e-9);
  EXPECT_GE(k.c, 8.0 / 0.05 - 1e-9);
  EXPECT_GT(k.v, 0.0);
  EXPECT_LT(k.v, 0.01); /* the modulus is steep near t = eps */
}

TEST(RingGapTest, GapPeaksAtTheOuterPair) {
  /* thin lune: ring arcs are nearly points on the base circle, so the gap is
   * the chord between consecutive ring crossings, largest at the outer pair */
  const double h = 1e-3, R = 1.227;
  auto outer_chord = [&](int n) {
    return 2.0 * std::sin(std::asin(R / 2.0) - std::asin(R * (n - 1) / (2.0 * n)));
  };
  const double g4 = ring_gap_max(h, R, 4, 24);
  const double g8 = ring_gap_max(h, R, 8, 24);
  EXPECT_NEAR(g4, outer_chord(4), 0.01);
  EXPECT_NEAR(g8, outer_chord(8), 0.01);
  EXPECT_GT(g4, R / 4.0); /* chord stretch always exceeds the radial spacing */
  EXPECT_LT(g8, g4);
}
