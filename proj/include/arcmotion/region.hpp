#ifndef ARCMOTION_REGION_HPP
#define ARCMOTION_REGION_HPP

/*
 * Point membership for the two region shapes the estimators integrate over:
 *
 *  - ArcRegion: a closed loop of circular arcs, tested by winding number.
 *    Each arc's contribution to the argument change is evaluated by adaptive
 *    bisection: a sub-arc is only scored once its bounding disc excludes the
 *    query point, which guarantees the per-piece change is below pi and the
 *    wrap-around is unambiguous.  Points within tolerance of the boundary
 *    count as inside.
 *
 *  - PivotSweepRegion: the set swept by an arc rotating about one of its
 *    endpoints.  Such an arc is radially monotone about the pivot (length
 *    below pi * radius), so the region has an exact polar description and
 *    membership needs one atan2 and one arcsin.
 */

#include "arcmotion/geometry.hpp"

#include <vector>

namespace arcmotion {

template <typename S>
struct Box {
  S xmin, xmax, ymin, ymax;

  Box() : xmin(0.0), xmax(0.0), ymin(0.0), ymax(0.0) {}
  Box(S x0, S x1, S y0, S y1)
      : xmin(std::move(x0)), xmax(std::move(x1)), ymin(std::move(y0)), ymax(std::move(y1)) {}

  static Box of_point(const Point<S> &p) { return Box(p.x, p.x, p.y, p.y); }

  void include(const Point<S> &p) {
    if (p.x < xmin) xmin = p.x;
    if (p.x > xmax) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.y > ymax) ymax = p.y;
  }
  void include(const Box &b) {
    if (b.xmin < xmin) xmin = b.xmin;
    if (b.xmax > xmax) xmax = b.xmax;
    if (b.ymin < ymin) ymin = b.ymin;
    if (b.ymax > ymax) ymax = b.ymax;
  }
  bool contains(const Point<S> &p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  Box inflated(const S &m) const { return Box(xmin - m, xmax + m, ymin - m, ymax + m); }
  S width() const { return xmax - xmin; }
  S height() const { return ymax - ymin; }
  S area() const { return width() * height(); }
};

/* exact bounding box: endpoints plus any cardinal extremes in the span */
template <typename S>
Box<S> arc_bbox(const DirectedArc<S> &arc) {
  using std::abs;
  Box<S> box = Box<S>::of_point(arc.start_point());
  box.include(arc.end_point());
  const S pi = scalar_pi<S>();
  const S half = pi / S(2.0);
  for (int k = 0; k < 4; ++k) {
    S cardinal = half * S(k);
    if (arc_angular_offset(arc, cardinal) <= abs(arc.sweep))
      box.include(arc.circle.point_at(cardinal));
  }
  return box;
}

namespace detail {

/* argument change of (gamma(t) - p) along the arc piece [a0, a1] of `circle`.
 * Only scored directly once the piece's bounding disc excludes p. */
template <typename S>
S winding_piece(const Circle<S> &circle, const S &a0, const S &a1, const Point<S> &p, int depth) {
  using std::abs;
  using std::sin;
  const S mid = (a0 + a1) / S(2.0);
  const Point<S> mid_pt = circle.point_at(mid);
  const S enclosing = S(2.0) * circle.radius * sin(abs(a1 - a0) / S(4.0));
  if (dist(p, mid_pt) > enclosing) {
    const Point<S> u = circle.point_at(a0) - p;
    const Point<S> v = circle.point_at(a1) - p;
    return signed_angle(u, v);
  }
  if (depth > 256)
    throw Error(ErrorCode::OutOfRange, "winding bisection depth exceeded");
  return winding_piece(circle, a0, mid, p, depth + 1) +
         winding_piece(circle, mid, a1, p, depth + 1);
}

}  // namespace detail

/* closed loop of arcs; consecutive arcs must chain end-to-start */
template <typename S>
struct ArcRegion {
  std::vector<DirectedArc<S>> boundary;

  Box<S> bbox() const {
    Box<S> box = arc_bbox(boundary.at(0));
    for (size_t i = 1; i < boundary.size(); ++i) box.include(arc_bbox(boundary[i]));
    return box;
  }
};

/* largest endpoint-chaining gap; a valid loop has this within tolerance */
template <typename S>
S loop_defect(const ArcRegion<S> &region) {
  S worst(0.0);
  const size_t n = region.boundary.size();
  for (size_t i = 0; i < n; ++i) {
    const S gap = dist(region.boundary[i].end_point(), region.boundary[(i + 1) % n].start_point());
    if (gap > worst) worst = gap;
  }
  return worst;
}

template <typename S>
bool point_in_region(const ArcRegion<S> &region, const Point<S> &p, const S &tol) {
  for (const DirectedArc<S> &arc : region.boundary)
    if (dist_point_to_arc(p, arc) <= tol) return true;
  S total(0.0);
  for (const DirectedArc<S> &arc : region.boundary)
    total = total + detail::winding_piece(arc.circle, arc.start_angle,
                                          arc.start_angle + arc.sweep, p, 0);
  using std::abs;
  return abs(total) > scalar_pi<S>();
}

/*
 * Region swept by rotating an arc about one of its endpoints Q by the signed
 * angle `angle`.  A point p is covered iff, writing rho = |p - Q|, the arc
 * passes through some point at distance rho whose direction from Q is
 *   dir(Q -> carrier center) - side * (pi/2 - arcsin(rho / 2r)),
 * and p's direction falls inside that direction swept by `angle`.
 */
template <typename S>
struct PivotSweepRegion {
  Point<S> pivot;
  S dir_center;   /* direction from pivot to the carrier center, at sweep start */
  S side;         /* +1 if the arc leaves the pivot counterclockwise, else -1 */
  S radius;       /* carrier circle radius */
  S reach;        /* chord distance from pivot to the far endpoint */
  S angle;        /* signed pivot rotation */
  DirectedArc<S> arc_start;  /* pose at the start of the sweep (for bboxes) */

  bool contains(const Point<S> &p, const S &tol) const {
    using std::abs;
    using std::asin;
    const S rho = dist(p, pivot);
    if (rho > reach + tol) return false;
    if (rho <= tol) return true;
    S ratio = rho / (S(2.0) * radius);
    if (ratio > S(1.0)) ratio = S(1.0);
    const S pi = scalar_pi<S>();
    const S dir0 = dir_center - side * (pi / S(2.0) - asin(ratio));
    const S dirp = direction_angle(p - pivot);
    const S delta = normalize_angle(dirp - dir0);
    const S slack = tol / rho + tol;
    const S lo = angle < S(0.0) ? angle : S(0.0);
    const S hi = angle > S(0.0) ? angle : S(0.0);
    return delta >= lo - slack && delta <= hi + slack;
  }

  Box<S> bbox() const {
    DirectedArc<S> arc_end = arc_start;
    Isometry<S> rot = Isometry<S>::rotation(pivot, angle);
    arc_end = rot.apply(arc_start);
    /* far endpoint traces a circle about the pivot */
    const Point<S> far = dist(arc_start.start_point(), pivot) > dist(arc_start.end_point(), pivot)
                             ? arc_start.start_point()
                             : arc_start.end_point();
    DirectedArc<S> trace(Circle<S>(pivot, dist(far, pivot)), direction_angle(far - pivot), angle);
    Box<S> box = arc_bbox(arc_start);
    box.include(arc_bbox(arc_end));
    box.include(arc_bbox(trace));
    return box;
  }
};

/* build the swept region for `arc` rotating about its start or end point */
template <typename S>
PivotSweepRegion<S> make_pivot_sweep(const DirectedArc<S> &arc, bool pivot_at_start, const S &angle) {
  PivotSweepRegion<S> region;
  region.pivot = pivot_at_start ? arc.start_point() : arc.end_point();
  region.dir_center = direction_angle(arc.circle.center - region.pivot);
  const S sweep_from_pivot = pivot_at_start ? arc.sweep : -arc.sweep;
  region.side = sweep_from_pivot >= S(0.0) ? S(1.0) : S(-1.0);
  region.radius = arc.circle.radius;
  region.reach = arc.chord_length();
  region.angle = angle;
  region.arc_start = arc;
  return region;
}

}  // namespace arcmotion

#endif
