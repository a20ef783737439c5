#ifndef ARCMOTION_GEOMETRY_HPP
#define ARCMOTION_GEOMETRY_HPP

/*
 * Planar primitives over a scalar type S (double or BigFloat).
 *
 * Angles are radians.  normalize_angle folds into (-pi, pi], with the tie at
 * the cut mapped to +pi.  Intersection points of two circles are returned
 * with the positively oriented point (left of the center line a->b) first.
 */

#include "arcmotion/error.hpp"
#include "arcmotion/scalar.hpp"

#include <vector>

namespace arcmotion {

template <typename S>
struct Point {
  S x, y;

  Point() : x(0.0), y(0.0) {}
  Point(S px, S py) : x(std::move(px)), y(std::move(py)) {}

  Point operator+(const Point &o) const { return Point(x + o.x, y + o.y); }
  Point operator-(const Point &o) const { return Point(x - o.x, y - o.y); }
  Point operator*(const S &k) const { return Point(x * k, y * k); }
  Point operator-() const { return Point(-x, -y); }
};

template <typename S> S dot(const Point<S> &a, const Point<S> &b) { return a.x * b.x + a.y * b.y; }
template <typename S> S cross(const Point<S> &a, const Point<S> &b) { return a.x * b.y - a.y * b.x; }
template <typename S> S norm2(const Point<S> &a) { return dot(a, a); }
template <typename S> S norm(const Point<S> &a) { using std::sqrt; return sqrt(norm2(a)); }
template <typename S> S dist(const Point<S> &a, const Point<S> &b) { return norm(a - b); }
template <typename S> Point<S> perp_ccw(const Point<S> &a) { return Point<S>(-a.y, a.x); }

/* fold into (-pi, pi]; the tie at the cut goes to +pi */
template <typename S>
S normalize_angle(const S &a) {
  using std::floor;
  const S pi = scalar_pi<S>();
  const S twopi = pi + pi;
  S w = a - twopi * floor((a + pi) / twopi);
  if (w <= -pi) w += twopi;
  if (w > pi) w -= twopi;
  return w;
}

/* angle from u to v, in (-pi, pi] */
template <typename S>
S signed_angle(const Point<S> &u, const Point<S> &v) {
  using std::atan2;
  return atan2(cross(u, v), dot(u, v));
}

template <typename S>
S direction_angle(const Point<S> &v) {
  using std::atan2;
  return atan2(v.y, v.x);
}

template <typename S>
Point<S> rotate_point(const Point<S> &p, const Point<S> &center, const S &angle) {
  using std::cos;
  using std::sin;
  const S c = cos(angle), s = sin(angle);
  const Point<S> d = p - center;
  return Point<S>(center.x + c * d.x - s * d.y, center.y + s * d.x + c * d.y);
}

template <typename S>
struct Circle {
  Point<S> center;
  S radius;

  Circle() : radius(1.0) {}
  Circle(Point<S> c, S r) : center(std::move(c)), radius(std::move(r)) {}

  Point<S> point_at(const S &theta) const {
    using std::cos;
    using std::sin;
    return Point<S>(center.x + radius * cos(theta), center.y + radius * sin(theta));
  }
};

/*
 * Arc of `circle` from start_angle, sweeping by the signed angle `sweep`
 * (positive = counterclockwise).  The arc's own orientation matters: motion
 * steps track which endpoint is which.
 */
template <typename S>
struct DirectedArc {
  Circle<S> circle;
  S start_angle;
  S sweep;

  DirectedArc() : start_angle(0.0), sweep(0.0) {}
  DirectedArc(Circle<S> c, S start, S sw)
      : circle(std::move(c)), start_angle(std::move(start)), sweep(std::move(sw)) {}

  Point<S> start_point() const { return circle.point_at(start_angle); }
  Point<S> end_point() const { return circle.point_at(start_angle + sweep); }
  S arc_length() const { using std::abs; return circle.radius * abs(sweep); }
  S chord_length() const {
    using std::abs;
    using std::sin;
    S half = abs(sweep) / S(2.0);
    return S(2.0) * circle.radius * sin(half);
  }
};

/* point at parameter t in [0,1] along the arc */
template <typename S>
Point<S> arc_point_at_fraction(const DirectedArc<S> &arc, const S &t) {
  if (t < S(0.0) || t > S(1.0))
    throw Error(ErrorCode::OutOfRange, "arc fraction outside [0,1]");
  return arc.circle.point_at(arc.start_angle + t * arc.sweep);
}

/*
 * Offset of direction `theta` from the arc's start, measured along the arc's
 * sweep direction and normalized to [0, 2pi).  The point at angle theta lies
 * on the arc iff the offset is <= |sweep| (up to an angular slack).
 */
template <typename S>
S arc_angular_offset(const DirectedArc<S> &arc, const S &theta) {
  using std::floor;
  const S pi = scalar_pi<S>();
  const S twopi = pi + pi;
  S rel = arc.sweep >= S(0.0) ? theta - arc.start_angle : arc.start_angle - theta;
  /* reduce into [0, 2pi) */
  S w = rel - twopi * floor(rel / twopi);
  if (w < S(0.0)) w += twopi;
  if (w >= twopi) w -= twopi;
  return w;
}

/* distance from p to the arc (carrier circle clamped to the angular span) */
template <typename S>
S dist_point_to_arc(const Point<S> &p, const DirectedArc<S> &arc) {
  using std::abs;
  const Point<S> d = p - arc.circle.center;
  const S rho = norm(d);
  const S tolr = tolerance_for(rho);
  if (rho <= tolr) {
    /* query at the center: every arc point is at distance radius */
    return arc.circle.radius;
  }
  const S theta = direction_angle(d);
  const S off = arc_angular_offset(arc, theta);
  if (off <= abs(arc.sweep)) return abs(rho - arc.circle.radius);
  return fmin(dist(p, arc.start_point()), dist(p, arc.end_point()));
}

/*
 * Intersection of two circles.  Returns 0, 1 or 2 points; with 2, the point
 * on the positive side (left) of the directed center line a->b comes first.
 * The half-chord is computed from the four-factor Heron product, which stays
 * stable for nearly concentric unit circles.
 */
template <typename S>
std::vector<Point<S>> circle_circle_intersection(const Circle<S> &a, const Circle<S> &b) {
  using std::abs;
  using std::sqrt;
  const S tol = tolerance_for(a.radius + b.radius);
  const Point<S> dvec = b.center - a.center;
  const S d = norm(dvec);
  if (d <= tol && abs(a.radius - b.radius) <= tol)
    throw Error(ErrorCode::IdenticalCircles, "coincident centers and radii");
  if (d <= tol) return {};                       /* concentric, distinct radii */
  if (d > a.radius + b.radius + tol) return {};  /* disjoint */
  if (d < abs(a.radius - b.radius) - tol) return {};  /* nested */

  const S r0 = a.radius, r1 = b.radius;
  /* difference factors via r0 - r1 directly: (d - r0) + r1 would absorb the
   * tiny d when the radii nearly agree */
  const S rdiff = r0 - r1;
  const S prod = (r0 + r1 - d) * (d - rdiff) * (d + rdiff) * (d + r0 + r1);
  const S h2 = prod / (S(4.0) * d * d);
  const S along = d / S(2.0) + (r0 - r1) * (r0 + r1) / (S(2.0) * d);
  const Point<S> u = dvec * (S(1.0) / d);
  const Point<S> base = a.center + u * along;
  const S band = tol * (d + r0 + r1);
  if (h2 <= S(0.0)) {
    if (h2 >= -band * band) return {base};  /* tangent within tolerance */
    return {};
  }
  const S h = sqrt(h2);
  if (h <= band) return {base};
  const Point<S> n = perp_ccw(u);
  return {base + n * h, base - n * h};
}

/*
 * Area swept when an arc with the given endpoint chord rotates about one of
 * its endpoints by `angle`: chord^2 * angle / 2.
 */
template <typename S>
S horn_area(const S &chord, const S &angle) {
  if (chord < S(0.0) || angle < S(0.0))
    throw Error(ErrorCode::NegativeInput, "horn_area needs chord >= 0 and angle >= 0");
  return chord * chord * angle / S(2.0);
}

/*
 * Orthogonal plane isometry: p -> m p + t with m in O(2).  det = +1 for
 * rotations, -1 when a reflection is folded in.  Used both for motion-step
 * composition and for transporting whole sub-scenes.
 */
template <typename S>
struct Isometry {
  S m00, m01, m10, m11;
  Point<S> t;

  Isometry() : m00(1.0), m01(0.0), m10(0.0), m11(1.0) {}

  static Isometry identity() { return Isometry(); }

  static Isometry rotation(const Point<S> &center, const S &angle) {
    using std::cos;
    using std::sin;
    Isometry iso;
    iso.m00 = cos(angle); iso.m01 = -sin(angle);
    iso.m10 = sin(angle); iso.m11 = cos(angle);
    iso.t = center - Point<S>(iso.m00 * center.x + iso.m01 * center.y,
                              iso.m10 * center.x + iso.m11 * center.y);
    return iso;
  }

  /* x -> -x, then rotate by angle about the origin, then translate */
  static Isometry reflect_y_then_rotate(const S &angle, const Point<S> &translation) {
    using std::cos;
    using std::sin;
    Isometry iso;
    const S c = cos(angle), s = sin(angle);
    iso.m00 = -c; iso.m01 = -s;
    iso.m10 = -s; iso.m11 = c;
    iso.t = translation;
    return iso;
  }

  bool reflecting() const { return m00 * m11 - m01 * m10 < S(0.0); }

  Point<S> apply(const Point<S> &p) const {
    return Point<S>(m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y);
  }

  Circle<S> apply(const Circle<S> &c) const { return Circle<S>(apply(c.center), c.radius); }

  DirectedArc<S> apply(const DirectedArc<S> &arc) const {
    Circle<S> c = apply(arc.circle);
    Point<S> sp = apply(arc.circle.point_at(arc.start_angle));
    S start = direction_angle(sp - c.center);
    S sweep = reflecting() ? -arc.sweep : arc.sweep;
    return DirectedArc<S>(c, start, sweep);
  }

  /* composition: (a * b)(p) = a(b(p)) */
  friend Isometry operator*(const Isometry &a, const Isometry &b) {
    Isometry r;
    r.m00 = a.m00 * b.m00 + a.m01 * b.m10;
    r.m01 = a.m00 * b.m01 + a.m01 * b.m11;
    r.m10 = a.m10 * b.m00 + a.m11 * b.m10;
    r.m11 = a.m10 * b.m01 + a.m11 * b.m11;
    r.t = a.apply(b.t);
    return r;
  }

  /* rotation angle of a direct isometry */
  S rotation_angle() const {
    using std::atan2;
    return atan2(m10, m00);
  }
};

/* direct isometry taking the ordered pair (a0, a1) to (b0, b1); the segment
 * lengths must agree for the result to be rigid */
template <typename S>
Isometry<S> align_pairs(const Point<S> &a0, const Point<S> &a1,
                        const Point<S> &b0, const Point<S> &b1) {
  const S theta = direction_angle(b1 - b0) - direction_angle(a1 - a0);
  Isometry<S> rot = Isometry<S>::rotation(Point<S>(S(0.0), S(0.0)), theta);
  Point<S> image = rot.apply(a0);
  Isometry<S> out = rot;
  out.t = out.t + (b0 - image);
  return out;
}

}  // namespace arcmotion

#endif
