#ifndef ARCMOTION_LEMMAS_HPP
#define ARCMOTION_LEMMAS_HPP

/*
 * Executable numeric checks.  Each oracle validates its hypotheses on the
 * supplied data first; outside them it renders no verdict (hypotheses_met =
 * false, pass = false).  Bound comparisons allow the scalar tolerance so an
 * exactly-attained bound (e.g. the d = 0 capture) still counts.
 */

#include "arcmotion/geometry.hpp"
#include "arcmotion/report.hpp"

#include <utility>
#include <vector>

namespace arcmotion {

enum class Sense { Positive, Negative };

/*
 * Rotate circle K about a point Q of K, in the given sense, by the smallest
 * angle that lands P on the rotated circle.  The rotated center is an
 * intersection of the radius-r circles about Q and about P.
 */
template <typename S>
std::pair<Circle<S>, S> rotate_circle_to_contain(const Circle<S> &K, const Point<S> &Q,
                                                 const Point<S> &P, Sense sense) {
  using std::abs;
  const S tol = tolerance_for(K.radius);
  const S qp = dist(Q, P);
  if (qp <= tol) throw Error(ErrorCode::Degenerate, "Q and P coincide");
  if (qp > S(2.0) * K.radius + tol)
    throw Error(ErrorCode::NoSolution, "P unreachable: |QP| > 2r");

  std::vector<Point<S>> centers =
      circle_circle_intersection(Circle<S>(Q, K.radius), Circle<S>(P, K.radius));
  if (centers.empty()) throw Error(ErrorCode::NoSolution, "no center candidate");

  const S twopi = S(2.0) * scalar_pi<S>();
  const S angular_snap = S(8.0) * tol / K.radius;
  bool have = false;
  S best_alpha(0.0);
  Point<S> best_center;
  for (const Point<S> &cand : centers) {
    S raw = signed_angle(K.center - Q, cand - Q);
    S a = sense == Sense::Positive ? raw : -raw;
    if (a < S(0.0)) a += twopi;
    if (a > twopi - angular_snap) a = S(0.0); /* P already on K, root at the start */
    if (!have || a < best_alpha) {
      have = true;
      best_alpha = a;
      best_center = cand;
    }
  }
  return {Circle<S>(best_center, K.radius), best_alpha};
}

/*
 * Capture check: P at distance d from K (interior for POSITIVE, exterior for
 * NEGATIVE), Q on K, triangle P-O-Q positively oriented.  Measures the
 * capture rotation and tests sin(alpha) < 2 sqrt(d), center shift < 4 sqrt(d).
 */
template <typename S>
LemmaReport check_lemma1(const Circle<S> &K, const Point<S> &Q, const Point<S> &P, Sense sense) {
  using std::abs;
  using std::sin;
  using std::sqrt;
  LemmaReport rep;
  rep.lemma_id = "lemma1";
  const S tol = tolerance_for(K.radius);
  const S rho = dist(P, K.center);
  const S d = abs(rho - K.radius);
  const bool interior = rho < K.radius;
  const S pq = dist(P, Q);

  rep.add_measured("d", d);
  rep.add_measured("dist_PQ", pq);

  bool ok = abs(dist(Q, K.center) - K.radius) <= S(16.0) * tol; /* Q on K */
  ok = ok && d < S(0.5);
  if (d > tol) {
    /* positive orientation of triangle P, O, Q */
    ok = ok && cross(K.center - P, Q - P) > S(0.0);
    if (interior)
      ok = ok && sense == Sense::Positive && pq >= S(2.0) * sqrt(d);
    else
      ok = ok && sense == Sense::Negative && S(3.0) * sqrt(d) <= pq && pq <= S(2.0) - d;
  }
  rep.hypotheses_met = ok;
  if (!ok) return rep;

  S alpha(0.0);
  S shift(0.0);
  if (d > tol) {
    auto [K2, a] = rotate_circle_to_contain(K, Q, P, sense);
    alpha = a;
    shift = dist(K.center, K2.center);
  }
  const S sin_alpha = sin(alpha);
  const S bound_sin = S(2.0) * sqrt(d);
  const S bound_shift = S(4.0) * sqrt(d);
  const S half_pi = scalar_pi<S>() / S(2.0);
  rep.add_measured("alpha", alpha);
  rep.add_measured("sin_alpha", sin_alpha);
  rep.add_measured("center_shift", shift);
  rep.add_bound("sin_alpha_max", bound_sin);
  rep.add_bound("center_shift_max", bound_shift);
  rep.add_bound("alpha_max", half_pi);
  rep.pass = sin_alpha < bound_sin + tol && shift < bound_shift + tol && alpha < half_pi + tol;
  return rep;
}

/*
 * Rotate K about two of its points A and B (angles alpha, beta, common
 * sense); the rotated circles meet in a point near A, inside K for POSITIVE
 * rotations and outside for NEGATIVE ones.
 */
template <typename S>
std::pair<Point<S>, LemmaReport> sprout_intersection(const Circle<S> &K, const Point<S> &A,
                                                     const Point<S> &B, const S &alpha,
                                                     const S &beta, Sense sense) {
  LemmaReport rep;
  rep.lemma_id = sense == Sense::Positive ? "lemma3" : "lemma9";
  const S tol = tolerance_for(K.radius);
  const S eta = signed_angle(A - K.center, B - K.center); /* > 0 iff O,A,B positive */
  const S eta_cap = sense == Sense::Positive ? S(0.2) : S(0.1);

  bool ok = eta > S(0.0) && eta < eta_cap;
  ok = ok && S(0.0) < alpha && alpha < S(3.0) * beta / S(4.0) && beta < eta;
  if (!ok) throw Error(ErrorCode::HypothesesViolated, "sprout_intersection gates");
  rep.hypotheses_met = true;

  const S sgn = sense == Sense::Positive ? S(1.0) : S(-1.0);
  const Circle<S> KA(rotate_point(K.center, A, sgn * alpha), K.radius);
  const Circle<S> KB(rotate_point(K.center, B, sgn * beta), K.radius);
  std::vector<Point<S>> roots = circle_circle_intersection(KA, KB);
  if (roots.empty()) throw Error(ErrorCode::NoIntersection, "rotated circles do not meet");

  bool found = false;
  Point<S> best;
  S best_da(0.0);
  for (const Point<S> &p : roots) {
    const S rho = dist(p, K.center);
    const bool wanted = sense == Sense::Positive ? rho < K.radius : rho > K.radius;
    if (!wanted) continue;
    const S da = dist(p, A);
    if (!found || da < best_da) {
      found = true;
      best = p;
      best_da = da;
    }
  }
  if (!found) throw Error(ErrorCode::NoIntersection, "no root on the required side");

  const S bound = (sense == Sense::Positive ? S(20.0) : S(50.0)) * eta;
  rep.add_measured("eta", eta);
  rep.add_measured("dist_PA", best_da);
  rep.add_bound("dist_PA_max", bound);
  rep.pass = best_da < bound + tol;
  return {best, rep};
}

/*
 * Any chord of the scene's tip arc makes a small angle with the y axis.
 */
template <typename S>
LemmaReport chord_direction_bound(const DirectedArc<S> &tip_arc, const Point<S> &q1,
                                  const Point<S> &q2, const S &h, const S &eps) {
  using std::abs;
  using std::atan2;
  LemmaReport rep;
  rep.lemma_id = "lemma4";
  const S tol = tolerance_for(tip_arc.circle.radius + S(1.0));
  if (dist(q1, q2) <= tol) throw Error(ErrorCode::Degenerate, "chord endpoints coincide");

  rep.hypotheses_met = dist_point_to_arc(q1, tip_arc) <= S(64.0) * tol &&
                       dist_point_to_arc(q2, tip_arc) <= S(64.0) * tol;
  const Point<S> d = q2 - q1;
  const S angle_to_y = atan2(abs(d.x), abs(d.y));
  rep.add_measured("angle_to_y_axis", angle_to_y);
  rep.add_bound("angle_max", h + eps);
  if (rep.hypotheses_met) rep.pass = angle_to_y < h + eps + tol;
  return rep;
}

/*
 * Junction configuration: two unit circles through a common far point C,
 * each through a point of the tip arc, centers near the coordinate origin.
 * The rotation about C aligning them is small and moves the tip chord almost
 * horizontally.  Coordinates are expected in the frame whose origin the
 * centers hug (the frame the hypotheses are stated in).
 */
template <typename S>
LemmaReport junction_rotation_check(const Point<S> &Qp, const Point<S> &Qpp, const Point<S> &C,
                                    const Circle<S> &Kp, const Circle<S> &Kpp, const S &eps) {
  using std::abs;
  using std::atan2;
  LemmaReport rep;
  rep.lemma_id = "lemma5";
  const S tol = tolerance_for(S(2.0));
  const S on_tol = S(64.0) * tol;

  bool ok = Qp.y > Qpp.y;
  ok = ok && abs(Kp.radius - S(1.0)) <= on_tol && abs(Kpp.radius - S(1.0)) <= on_tol;
  ok = ok && abs(dist(Qp, Kp.center) - Kp.radius) <= on_tol;
  ok = ok && abs(dist(C, Kp.center) - Kp.radius) <= on_tol;
  ok = ok && abs(dist(Qpp, Kpp.center) - Kpp.radius) <= on_tol;
  ok = ok && abs(dist(C, Kpp.center) - Kpp.radius) <= on_tol;
  ok = ok && norm(Kp.center) < eps && norm(Kpp.center) < eps;

  /* both tip points sit at distance eps from the (unsupplied) tip center M;
   * recover M as the eastern intersection of the eps-circles about them */
  if (ok && dist(Qp, Qpp) > tol) {
    std::vector<Point<S>> ms =
        circle_circle_intersection(Circle<S>(Qp, eps), Circle<S>(Qpp, eps));
    if (ms.empty()) {
      ok = false;
    } else {
      Point<S> M = ms[0];
      for (const Point<S> &m : ms)
        if (m.x > M.x) M = m;
      ok = dist(C, M) <= S(2.0) - S(5.0) * eps;
    }
  }
  rep.hypotheses_met = ok;

  const S alpha_signed = signed_angle(Kpp.center - C, Kp.center - C);
  const S alpha = abs(alpha_signed);
  rep.add_measured("alpha", alpha);
  rep.add_bound("alpha_max", eps);
  const Point<S> moved = rotate_point(Qpp, C, alpha_signed);
  bool chord_ok = true;
  if (dist(Qp, moved) > tol) {
    const Point<S> d = moved - Qp;
    const S angle_to_x = atan2(abs(d.y), abs(d.x));
    rep.add_measured("angle_to_x_axis", angle_to_x);
    rep.add_bound("chord_angle_max", S(6.0) * eps);
    chord_ok = angle_to_x < S(6.0) * eps + tol;
  }
  if (rep.hypotheses_met) rep.pass = alpha < eps + tol && chord_ok;
  return rep;
}

/*
 * Triangle with sides a <= b <= c: the angle opposite a is below 2a/c.
 */
template <typename S>
LemmaReport smallest_angle_bound(const S &a, const S &b, const S &c) {
  using std::acos;
  LemmaReport rep;
  rep.lemma_id = "lemma14";
  if (!(a <= b && b <= c)) throw Error(ErrorCode::UnsortedSides, "need a <= b <= c");
  if (!(a > S(0.0)) || !(a + b > c)) throw Error(ErrorCode::NotATriangle, "triangle inequality");
  rep.hypotheses_met = true;
  S cosv = (b * b + c * c - a * a) / (S(2.0) * b * c);
  if (cosv > S(1.0)) cosv = S(1.0);
  if (cosv < S(-1.0)) cosv = S(-1.0);
  const S angle = acos(cosv);
  const S bound = S(2.0) * a / c;
  const S tol = tolerance_for(c);
  rep.add_measured("angle", angle);
  rep.add_bound("angle_max", bound);
  rep.pass = angle < bound + tol;
  return rep;
}

/*
 * Nonnegativity certificate for t^4 + 4t^3 - 4t^2 - 16t + 15.999 on
 * (0, t_max]: uniform grid plus every real critical point in range.
 */
template <typename S>
LemmaReport polynomial_certificate(const S &t_max, int grid) {
  LemmaReport rep;
  rep.lemma_id = "quartic_certificate";
  rep.hypotheses_met = t_max <= scalar_parse<S>("1.228") && grid >= 2;
  if (!rep.hypotheses_met) return rep;

  const S c0 = scalar_parse<S>("15.999");
  auto p = [&](const S &t) {
    return ((t + S(4.0)) * t - S(4.0)) * t * t - S(16.0) * t + c0;
  };
  auto dp = [&](const S &t) { return ((S(4.0) * t + S(12.0)) * t - S(8.0)) * t - S(16.0); };

  S min_val = p(t_max);
  S min_arg = t_max;
  auto consider = [&](const S &t) {
    const S v = p(t);
    if (v < min_val) {
      min_val = v;
      min_arg = t;
    }
  };
  for (int k = 1; k <= grid; ++k) consider(t_max * S(k) / S(grid));

  /* critical points: sign changes of p' located by bisection */
  const int scan = 4 * grid;
  S prev_t = t_max * S(1) / S(scan);
  S prev_v = dp(prev_t);
  for (int k = 2; k <= scan; ++k) {
    const S t = t_max * S(k) / S(scan);
    const S v = dp(t);
    if ((prev_v <= S(0.0) && v > S(0.0)) || (prev_v >= S(0.0) && v < S(0.0))) {
      S lo = prev_t, hi = t;
      for (int it = 0; it < 160; ++it) {
        const S mid = (lo + hi) / S(2.0);
        if ((dp(lo) <= S(0.0)) == (dp(mid) <= S(0.0)))
          lo = mid;
        else
          hi = mid;
      }
      consider((lo + hi) / S(2.0));
    }
    prev_t = t;
    prev_v = v;
  }

  rep.add_measured("min_value", min_val);
  rep.add_measured("min_argument", min_arg);
  rep.add_bound("min_allowed", S(0.0));
  rep.pass = min_val >= S(0.0);
  return rep;
}

/*
 * Largest u with |arccos x - arccos y| < h whenever |x - y| <= u on [0,1].
 * The modulus is attained at the right endpoint pair (1-u, 1), i.e. it
 * equals arccos(1-u); u is found by bisection and cross-checked on a grid
 * that includes that endpoint pair.
 */
template <typename S>
S arccos_accuracy_u(const S &h) {
  using std::acos;
  S lo(0.0), hi(2.0);
  for (int it = 0; it < 300; ++it) {
    const S mid = (lo + hi) / S(2.0);
    if (acos(S(1.0) - mid) < h)
      lo = mid;
    else
      hi = mid;
  }
  /* grid cross-check: no pair at offset lo exceeds h */
  const int cells = 512;
  for (int k = 0; k <= cells; ++k) {
    S x = S(1.0) - lo * S(k) / S(cells); /* walks down from the worst pair */
    S y = x - lo;
    if (y < S(0.0)) y = S(0.0);
    if (!(acos(y) - acos(x) < h))
      throw Error(ErrorCode::OutOfRange, "accuracy bisection inconsistent");
  }
  return lo;
}

/* scale constants shared by the junction-gap and decomposition bounds */
template <typename S>
struct LemmaConstants {
  S u;   /* arccos accuracy at h */
  S n0;  /* 2/u */
  S c;   /* max(2 n0, 8/eps) */
  S v;   /* uniform-continuity step of t*sqrt(1-(t/2)^2) for ratio < 1.1 on [eps, 2-4eps] */
};

template <typename S>
LemmaConstants<S> compute_constants(const S &h, const S &eps) {
  using std::abs;
  using std::log;
  LemmaConstants<S> k;
  k.u = arccos_accuracy_u(h);
  k.n0 = S(2.0) / k.u;
  const S c1 = S(2.0) * k.n0;
  const S c2 = S(8.0) / eps;
  k.c = c1 > c2 ? c1 : c2;

  /* max of |d/dt log f| = |1/t - t/(4 - t^2)| over [eps, 2-4eps] */
  const S t_lo = eps;
  const S t_hi = S(2.0) - S(4.0) * eps;
  const int cells = 4096;
  S worst(0.0);
  for (int i = 0; i <= cells; ++i) {
    const S t = t_lo + (t_hi - t_lo) * S(i) / S(cells);
    const S g = abs(S(1.0) / t - t / (S(4.0) - t * t));
    if (g > worst) worst = g;
  }
  k.v = log(scalar_parse<S>("1.1")) / worst;
  return k;
}

/*
 * Sampled maximum distance between consecutive ring arcs inside the eastern
 * lune.  Needs only the two base circles, not a grown scene.
 */
template <typename S>
S ring_gap_max(const S &h, const S &R, int n, int samples) {
  using std::cos;
  using std::sin;
  const S half = h / S(2.0);
  const Point<S> M(S(0.0), S(0.0));
  const Circle<S> K0(Point<S>(-sin(half), -cos(half)), S(1.0));
  const Circle<S> K1(Point<S>(sin(half), -cos(half)), S(1.0));

  auto ring_arc = [&](int i) -> DirectedArc<S> {
    const S r = R * S(i) / S(n);
    if (i == 0) return DirectedArc<S>(Circle<S>(M, S(0.0)), S(0.0), S(0.0));
    const Circle<S> ring(M, r);
    auto east = [](const std::vector<Point<S>> &pts) {
      Point<S> best = pts.at(0);
      for (const Point<S> &p : pts)
        if (p.x > best.x) best = p;
      return best;
    };
    const Point<S> a0 = east(circle_circle_intersection(ring, K0));
    const Point<S> a1 = east(circle_circle_intersection(ring, K1));
    const S s0 = direction_angle(a0 - M);
    S sweep = normalize_angle(direction_angle(a1 - M) - s0);
    return DirectedArc<S>(ring, s0, sweep);
  };

  S worst(0.0);
  DirectedArc<S> prev = ring_arc(0);
  for (int i = 1; i <= n; ++i) {
    const DirectedArc<S> cur = ring_arc(i);
    for (int a = 0; a < samples; ++a) {
      const S ta = S(a) / S(samples > 1 ? samples - 1 : 1);
      const Point<S> X = prev.circle.radius > S(0.0) ? arc_point_at_fraction(prev, ta) : M;
      for (int b = 0; b < samples; ++b) {
        const S tb = S(b) / S(samples > 1 ? samples - 1 : 1);
        const Point<S> Y = arc_point_at_fraction(cur, tb);
        const S g = dist(X, Y);
        if (g > worst) worst = g;
      }
      if (prev.circle.radius <= S(0.0)) break; /* ring 0 is the single point M */
    }
    prev = cur;
  }
  return worst;
}

}  // namespace arcmotion

#endif
