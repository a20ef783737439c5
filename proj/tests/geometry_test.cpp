#include <gtest/gtest.h>

#include <cmath>

#include "arcmotion/geometry.hpp"

using namespace arcmotion;

namespace {
const double kPi = 3.14159265358979323846;

Point<double> pt(double x, double y) { return Point<double>(x, y); }
}  // namespace

TEST(PointOps, DotCrossNorm) {
  EXPECT_EQ(dot(pt(1, 2), pt(3, 4)), 11.0);
  EXPECT_EQ(cross(pt(1, 0), pt(0, 1)), 1.0);
  EXPECT_EQ(cross(pt(0, 1), pt(1, 0)), -1.0);
  EXPECT_EQ(norm(pt(3, 4)), 5.0);
  EXPECT_EQ(dist(pt(1, 1), pt(4, 5)), 5.0);
  const Point<double> p = perp_ccw(pt(1, 0));
  EXPECT_EQ(p.x, 0.0);
  EXPECT_EQ(p.y, 1.0);
}

TEST(Angles, NormalizeIntoHalfOpenInterval) {
  EXPECT_NEAR(normalize_angle(3.0 * kPi), kPi, 1e-12);       /* tie goes positive */
  EXPECT_NEAR(normalize_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(normalize_angle(kPi + 0.1), -kPi + 0.1, 1e-12);
  EXPECT_NEAR(normalize_angle(-7.0 * kPi / 2.0), kPi / 2.0, 1e-12);
  EXPECT_EQ(normalize_angle(0.25), 0.25);
}

TEST(Angles, SignedAngleAndDirection) {
  EXPECT_NEAR(signed_angle(pt(1, 0), pt(0, 1)), kPi / 2.0, 1e-15);
  EXPECT_NEAR(signed_angle(pt(0, 1), pt(1, 0)), -kPi / 2.0, 1e-15);
  EXPECT_NEAR(signed_angle(pt(1, 0), pt(-1, 0)), kPi, 1e-15); /* straight angle positive */
  EXPECT_NEAR(direction_angle(pt(0, -2)), -kPi / 2.0, 1e-15);
}

TEST(Angles, RotatePoint) {
  const Point<double> q = rotate_point(pt(2, 0), pt(1, 0), kPi / 2.0);
  EXPECT_NEAR(q.x, 1.0, 1e-15);
  EXPECT_NEAR(q.y, 1.0, 1e-15);
}

TEST(ArcBasics, EndpointsLengthChord) {
  DirectedArc<double> arc(Circle<double>(pt(0, 0), 2.0), 0.0, kPi / 2.0);
  EXPECT_NEAR(arc.start_point().x, 2.0, 1e-15);
  EXPECT_NEAR(arc.end_point().y, 2.0, 1e-15);
  EXPECT_NEAR(arc.arc_length(), kPi, 1e-15);
  EXPECT_NEAR(arc.chord_length(), 2.0 * 2.0 * std::sin(kPi / 4.0), 1e-15);

  const Point<double> mid = arc_point_at_fraction(arc, 0.5);
  EXPECT_NEAR(direction_angle(mid), kPi / 4.0, 1e-15);
  EXPECT_THROW(arc_point_at_fraction(arc, 1.5), Error);
}

TEST(ArcBasics, AngularOffsetRespectsDirection) {
  DirectedArc<double> ccw(Circle<double>(pt(0, 0), 1.0), 0.0, 1.0);
  EXPECT_NEAR(arc_angular_offset(ccw, 0.5), 0.5, 1e-12);
  EXPECT_NEAR(arc_angular_offset(ccw, -0.5), 2.0 * kPi - 0.5, 1e-12);
  DirectedArc<double> cw(Circle<double>(pt(0, 0), 1.0), 0.0, -1.0);
  EXPECT_NEAR(arc_angular_offset(cw, -0.5), 0.5, 1e-12);
}

TEST(ArcBasics, DistPointToArc) {
  DirectedArc<double> arc(Circle<double>(pt(0, 0), 1.0), 0.0, kPi / 2.0);
  EXPECT_NEAR(dist_point_to_arc(pt(2, 0), arc), 1.0, 1e-12);       /* radial, on span */
  EXPECT_NEAR(dist_point_to_arc(pt(0, -1), arc), std::sqrt(2.0), 1e-12); /* nearest endpoint */
  EXPECT_NEAR(dist_point_to_arc(pt(0, 0), arc), 1.0, 1e-12);       /* querying the center */
}

TEST(CircleIntersection, TwoPointsOrientedLeftFirst) {
  Circle<double> a(pt(0, 0), 1.0), b(pt(1, 0), 1.0);
  auto roots = circle_circle_intersection(a, b);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_GT(roots[0].y, 0.0); /* left of a->b comes first */
  EXPECT_LT(roots[1].y, 0.0);
  for (const auto &r : roots) {
    EXPECT_NEAR(dist(r, a.center), 1.0, 1e-12);
    EXPECT_NEAR(dist(r, b.center), 1.0, 1e-12);
  }
}

TEST(CircleIntersection, NearlyConcentricUnitCircles) {
  /* tiny center gap: the regime every junction in the scene lives in */
  const double g = 1e-9;
  Circle<double> a(pt(0, 0), 1.0), b(pt(g, 0), 1.0);
  auto roots = circle_circle_intersection(a, b);
  ASSERT_EQ(roots.size(), 2u);
  for (const auto &r : roots) {
    EXPECT_NEAR(dist(r, a.center), 1.0, 1e-12);
    EXPECT_NEAR(dist(r, b.center), 1.0, 1e-12);
  }
  EXPECT_NEAR(std::abs(roots[0].y), 1.0, 1e-9);
}

TEST(CircleIntersection, DegenerateCases) {
  Circle<double> unit(pt(0, 0), 1.0);
  EXPECT_THROW(circle_circle_intersection(unit, unit), Error);
  EXPECT_TRUE(circle_circle_intersection(unit, Circle<double>(pt(0, 0), 0.5)).empty());
  EXPECT_TRUE(circle_circle_intersection(unit, Circle<double>(pt(5, 0), 1.0)).empty());
  EXPECT_TRUE(circle_circle_intersection(unit, Circle<double>(pt(0.1, 0), 0.5)).empty());
  auto tangent = circle_circle_intersection(unit, Circle<double>(pt(2, 0), 1.0));
  ASSERT_EQ(tangent.size(), 1u);
  EXPECT_NEAR(tangent[0].x, 1.0, 1e-9);
}

TEST(HornArea, FormulaAndGuards) {
  EXPECT_EQ(horn_area(2.0, 0.5), 1.0);
  EXPECT_EQ(horn_area(0.0, 1.0), 0.0);
  EXPECT_THROW(horn_area(-1.0, 1.0), Error);
  EXPECT_THROW(horn_area(1.0, -1.0), Error);
}

TEST(IsometryTest, RotationFixesCenter) {
  const Point<double> c = pt(2, -1);
  Isometry<double> rot = Isometry<double>::rotation(c, 0.7);
  const Point<double> img = rot.apply(c);
  EXPECT_NEAR(img.x, c.x, 1e-12);
  EXPECT_NEAR(img.y, c.y, 1e-12);
  EXPECT_FALSE(rot.reflecting());
  EXPECT_NEAR(rot.rotation_angle(), 0.7, 1e-12);
  const Point<double> q = rot.apply(pt(3, -1));
  const Point<double> want = rotate_point(pt(3, -1), c, 0.7);
  EXPECT_NEAR(q.x, want.x, 1e-12);
  EXPECT_NEAR(q.y, want.y, 1e-12);
}

TEST(IsometryTest, ReflectionFlipsOrientationAndSweep) {
  Isometry<double> mir = Isometry<double>::reflect_y_then_rotate(0.3, pt(0.5, 0.25));
  EXPECT_TRUE(mir.reflecting());
  /* distances survive */
  const Point<double> a = pt(0.1, 0.9), b = pt(-0.4, 0.2);
  EXPECT_NEAR(dist(mir.apply(a), mir.apply(b)), dist(a, b), 1e-12);
  /* arc images keep their point sets: mapped start == image of start */
  DirectedArc<double> arc(Circle<double>(pt(1, 1), 1.0), 0.4, 0.9);
  DirectedArc<double> img = mir.apply(arc);
  EXPECT_LT(img.sweep, 0.0);
  const Point<double> s = mir.apply(arc.start_point());
  EXPECT_NEAR(dist(img.start_point(), s), 0.0, 1e-12);
  const Point<double> e = mir.apply(arc.end_point());
  EXPECT_NEAR(dist(img.end_point(), e), 0.0, 1e-12);
}

TEST(IsometryTest, CompositionAppliesRightFirst) {
  Isometry<double> r1 = Isometry<double>::rotation(pt(1, 0), 0.4);
  Isometry<double> r2 = Isometry<double>::rotation(pt(0, 2), -1.1);
  const Point<double> p = pt(0.3, 0.7);
  const Point<double> once = r2.apply(r1.apply(p));
  const Point<double> composed = (r2 * r1).apply(p);
  EXPECT_NEAR(once.x, composed.x, 1e-12);
  EXPECT_NEAR(once.y, composed.y, 1e-12);
}

TEST(IsometryTest, AlignPairsMapsBothAnchors) {
  const Point<double> a0 = pt(0, 0), a1 = pt(1, 0);
  const Point<double> b0 = pt(2, 1), b1 = pt(2, 2);
  Isometry<double> iso = align_pairs(a0, a1, b0, b1);
  EXPECT_FALSE(iso.reflecting());
  EXPECT_NEAR(dist(iso.apply(a0), b0), 0.0, 1e-12);
  EXPECT_NEAR(dist(iso.apply(a1), b1), 0.0, 1e-12);
}

TEST(GeometryBig, MirrorsDoubleResults) {
  using B = BigFloat;
  Circle<B> a(Point<B>(B(0.0), B(0.0)), B(1.0));
  Circle<B> b(Point<B>(B(1.0), B(0.0)), B(1.0));
  auto roots = circle_circle_intersection(a, b);
  ASSERT_EQ(roots.size(), 2u);
  /* y = sqrt(3)/2 to 200+ bits */
  B want = sqrt(B(3.0)) / B(2.0);
  EXPECT_LT(abs(roots[0].y - want), ldexp(B(1.0), -200));
  EXPECT_LT(abs(roots[0].x - B(0.5)), ldexp(B(1.0), -200));
}
