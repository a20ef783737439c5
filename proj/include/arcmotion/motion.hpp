#ifndef ARCMOTION_MOTION_HPP
#define ARCMOTION_MOTION_HPP

/*
 * Motion plans: ordered PIVOT/SLIDE steps moving a unit-radius arc.  A SLIDE
 * spins the arc about its own circle's center (measure-zero sweep); a PIVOT
 * spins it about one of its endpoints and sweeps a horn charged at
 * chord^2 * angle / 2.
 */

#include "arcmotion/scene.hpp"

#include <string>
#include <utility>
#include <vector>

namespace arcmotion {

template <typename S>
struct ArcPose {
  DirectedArc<S> arc;

  Point<S> start_point() const { return arc.start_point(); }
  Point<S> end_point() const { return arc.end_point(); }
};

enum class StepRole { None, Alpha, Beta };

template <typename S>
struct MotionStep {
  bool is_pivot = false;
  Point<S> center;    /* pivot point when is_pivot */
  Circle<S> circle;   /* carrier circle when !is_pivot */
  S angle;            /* signed rotation */
  ArcPose<S> start_pose, end_pose;
  S swept_bound;
  StepRole role = StepRole::None; /* bookkeeping only, not serialized */

  MotionStep() : angle(0.0), swept_bound(0.0) {}
};

template <typename S>
struct MotionPlan {
  std::vector<MotionStep<S>> steps;
  S total_swept_bound;

  MotionPlan() : total_swept_bound(0.0) {}

  void recompute_total() {
    total_swept_bound = S(0.0);
    for (const auto &st : steps) total_swept_bound = total_swept_bound + st.swept_bound;
  }
};

namespace detail {

/* same point set, sweep made negative */
template <typename S>
ArcPose<S> canonical_pose(ArcPose<S> p) {
  if (p.arc.sweep > S(0.0)) {
    p.arc.start_angle = normalize_angle(p.arc.start_angle + p.arc.sweep);
    p.arc.sweep = -p.arc.sweep;
  }
  return p;
}

template <typename S>
MotionStep<S> make_slide(const ArcPose<S> &from, bool move_start, const Point<S> &target,
                         StepRole role = StepRole::None) {
  MotionStep<S> st;
  st.is_pivot = false;
  st.circle = from.arc.circle;
  st.role = role;
  const S cur = move_start ? from.arc.start_angle : from.arc.start_angle + from.arc.sweep;
  const S want = direction_angle(target - st.circle.center);
  st.angle = normalize_angle(want - cur);
  st.start_pose = from;
  st.end_pose = from;
  st.end_pose.arc.start_angle = from.arc.start_angle + st.angle;
  st.swept_bound = S(0.0);
  return st;
}

/* slide identified by the target start angle instead of a target point */
template <typename S>
MotionStep<S> make_slide_to_angle(const ArcPose<S> &from, const S &target_start_angle) {
  MotionStep<S> st;
  st.is_pivot = false;
  st.circle = from.arc.circle;
  st.angle = normalize_angle(target_start_angle - from.arc.start_angle);
  st.start_pose = from;
  st.end_pose = from;
  st.end_pose.arc.start_angle = from.arc.start_angle + st.angle;
  st.swept_bound = S(0.0);
  return st;
}

template <typename S>
MotionStep<S> make_pivot(const ArcPose<S> &from, const Point<S> &center, const S &angle,
                         StepRole role) {
  MotionStep<S> st;
  st.is_pivot = true;
  st.center = center;
  st.angle = angle;
  st.role = role;
  st.start_pose = from;
  st.end_pose.arc.circle =
      Circle<S>{rotate_point(from.arc.circle.center, center, angle), from.arc.circle.radius};
  st.end_pose.arc.start_angle = from.arc.start_angle + angle;
  st.end_pose.arc.sweep = from.arc.sweep;
  using std::abs;
  st.swept_bound = horn_area(from.arc.chord_length(), abs(angle));
  return st;
}

}  // namespace detail

/*
 * The full dyadic itinerary: slide the lower endpoint out to the first ring
 * point, then alternate endpoint pivots (ring point, then tip point) through
 * every level-n junction, finishing with a slide home along the far base
 * circle.
 */
template <typename S>
MotionPlan<S> build_motion_plan(const SproutScene<S> &sc, const S &arc_len) {
  if (!(arc_len > S(0.0)) || !(arc_len < scalar_parse<S>("1.32")))
    throw Error(ErrorCode::ArcTooLong, "need 0 < arc length < 1.32");
  const int n = sc.config.n;
  if (static_cast<int>(sc.C.size()) != n + 1 || sc.K0.empty() || sc.K1.empty())
    throw Error(ErrorCode::SceneIncomplete, "scene not fully built");

  MotionPlan<S> plan;
  ArcPose<S> pose;
  pose.arc = DirectedArc<S>{sc.K0_at(0.0), direction_angle(sc.M - sc.O0), -arc_len};

  auto push = [&](MotionStep<S> st) {
    pose = st.end_pose;
    plan.steps.push_back(std::move(st));
  };

  push(detail::make_slide(pose, false, sc.C[n][0]));

  const long long total = 1LL << n;
  for (long long k = 0; k < total; ++k) {
    push(detail::make_pivot(pose, sc.C[n][k], sc.alpha_at(n, k), StepRole::Alpha));
    if (k + 1 < total) {
      const Point<S> Pn = sc.P_at(k + 1, n);
      push(detail::make_slide(pose, true, Pn));
      push(detail::make_pivot(pose, Pn, sc.beta_at(k + 1, n), StepRole::Beta));
      push(detail::make_slide(pose, false, sc.C[n][k + 1]));
    } else {
      push(detail::make_slide(pose, true, sc.M));
    }
  }
  plan.recompute_total();
  return plan;
}

/* ----- validation ----- */

/* poses compared as point sets: the endpoint pairing may be either way */
template <typename S>
S pose_gap(const ArcPose<S> &a, const ArcPose<S> &b) {
  using std::abs;
  S g = dist(a.arc.circle.center, b.arc.circle.center);
  g = fmax_s(g, abs(a.arc.circle.radius - b.arc.circle.radius));
  const Point<S> as = a.start_point(), ae = a.end_point();
  const Point<S> bs = b.start_point(), be = b.end_point();
  const S straight = fmax_s(dist(as, bs), dist(ae, be));
  const S crossed = fmax_s(dist(as, be), dist(ae, bs));
  return fmax_s(g, fmin_s(straight, crossed));
}

template <typename S>
LemmaReport validate_plan(const MotionPlan<S> &plan) {
  using std::abs;
  using std::sin;
  LemmaReport rep;
  rep.lemma_id = "plan_validity";
  rep.hypotheses_met = true;
  const S tol = S(1024.0) * tolerance_for(S(2.0));
  const S len_cap = scalar_parse<S>("1.32");
  const S chord_cap = scalar_parse<S>("1.227");

  S max_gap(0.0), max_bound_err(0.0), max_pose_err(0.0);
  S bound_sum(0.0);
  bool ok = true;
  for (size_t idx = 0; idx < plan.steps.size(); ++idx) {
    const MotionStep<S> &st = plan.steps[idx];
    for (const ArcPose<S> *pp : {&st.start_pose, &st.end_pose}) {
      const ArcPose<S> &p = *pp;
      ok = ok && abs(p.arc.circle.radius - S(1.0)) <= tol;
      ok = ok && abs(p.arc.sweep) < len_cap;
      ok = ok && p.arc.chord_length() < chord_cap;
    }
    if (idx + 1 < plan.steps.size())
      max_gap = fmax_s(max_gap, pose_gap(st.end_pose, plan.steps[idx + 1].start_pose));

    if (st.is_pivot) {
      const S to_ends = fmin_s(dist(st.center, st.start_pose.start_point()),
                               dist(st.center, st.start_pose.end_point()));
      ok = ok && to_ends <= tol;
      /* end pose is the rigid rotation of the start pose */
      ArcPose<S> turned = st.start_pose;
      turned.arc.circle.center = rotate_point(st.start_pose.arc.circle.center, st.center, st.angle);
      turned.arc.start_angle = st.start_pose.arc.start_angle + st.angle;
      max_pose_err = fmax_s(max_pose_err, pose_gap(turned, st.end_pose));
      max_bound_err = fmax_s(
          max_bound_err, abs(st.swept_bound - horn_area(st.start_pose.arc.chord_length(), abs(st.angle))));
    } else {
      max_pose_err = fmax_s(max_pose_err, dist(st.circle.center, st.start_pose.arc.circle.center));
      max_pose_err = fmax_s(max_pose_err, dist(st.circle.center, st.end_pose.arc.circle.center));
      max_pose_err =
          fmax_s(max_pose_err, abs(normalize_angle(st.end_pose.arc.start_angle -
                                                   st.start_pose.arc.start_angle - st.angle)));
      max_bound_err = fmax_s(max_bound_err, abs(st.swept_bound));
    }
    bound_sum = bound_sum + st.swept_bound;
  }
  rep.add_measured("steps", S(static_cast<double>(plan.steps.size())));
  rep.add_measured("max_discontinuity", max_gap);
  rep.add_measured("max_pose_error", max_pose_err);
  rep.add_measured("max_bound_error", max_bound_err);
  rep.add_measured("total_minus_sum", plan.total_swept_bound - bound_sum);
  rep.add_bound("tolerance", tol);
  using std::abs;
  rep.pass = ok && max_gap <= tol && max_pose_err <= tol && max_bound_err <= tol &&
             abs(plan.total_swept_bound - bound_sum) <= tol;
  return rep;
}

/* ----- continuous sampling ----- */

template <typename S>
ArcPose<S> pose_at(const MotionPlan<S> &plan, const S &t) {
  using std::abs;
  if (t < S(0.0) || t > S(1.0)) throw Error(ErrorCode::OutOfRange, "t outside [0,1]");
  if (plan.steps.empty()) throw Error(ErrorCode::OutOfRange, "empty plan");
  S total(0.0);
  for (const auto &st : plan.steps) total = total + abs(st.angle);
  if (!(total > S(0.0))) return t < S(1.0) ? plan.steps.front().start_pose : plan.steps.back().end_pose;

  S target = t * total;
  for (const auto &st : plan.steps) {
    const S span = abs(st.angle);
    if (target > span) {
      target = target - span;
      continue;
    }
    const S f = span > S(0.0) ? target / span : S(0.0);
    if (st.is_pivot) {
      ArcPose<S> p = st.start_pose;
      const S a = st.angle * f;
      p.arc.circle.center = rotate_point(p.arc.circle.center, st.center, a);
      p.arc.start_angle = p.arc.start_angle + a;
      return p;
    }
    ArcPose<S> p = st.start_pose;
    p.arc.start_angle = p.arc.start_angle + st.angle * f;
    return p;
  }
  return plan.steps.back().end_pose;
}

/* ----- one recursion level: replace tip pivots with transported sub-plans ----- */

template <typename S>
bool refine_gate_ok(const SproutScene<S> &sc) {
  return sc.config.h * S(100.0) < sc.config.eps * sc.config.eps;
}

namespace detail {

template <typename S>
MotionStep<S> transport_step(const MotionStep<S> &st, const Isometry<S> &iso) {
  MotionStep<S> out;
  out.is_pivot = st.is_pivot;
  out.role = st.role;
  const S flip = iso.reflecting() ? S(-1.0) : S(1.0);
  out.angle = flip * st.angle;
  out.swept_bound = st.swept_bound;
  out.start_pose.arc = iso.apply(st.start_pose.arc);
  out.end_pose.arc = iso.apply(st.end_pose.arc);
  if (st.is_pivot)
    out.center = iso.apply(st.center);
  else
    out.circle = iso.apply(st.circle);
  out.start_pose = canonical_pose(out.start_pose);
  out.end_pose = canonical_pose(out.end_pose);
  return out;
}

template <typename S>
MotionStep<S> reverse_step(const MotionStep<S> &st) {
  MotionStep<S> out = st;
  out.angle = -st.angle;
  out.start_pose = st.end_pose;
  out.end_pose = st.start_pose;
  return out;
}

/* expand one tip pivot into slide + mirrored sub-plan + slide */
template <typename S>
std::vector<MotionStep<S>> expand_beta_pivot(const MotionStep<S> &st, const SproutConfig<S> &base) {
  using std::abs;
  SproutConfig<S> cfg = base;
  cfg.h = abs(st.angle);
  SproutScene<S> sub;
  try {
    sub = build_scene(cfg);
  } catch (const Error &e) {
    throw Error(ErrorCode::RecursionInfeasible, e.what());
  }
  const S sub_len = abs(st.start_pose.arc.sweep);
  MotionPlan<S> canon = build_motion_plan(sub, sub_len);

  /* the mirror-then-rotate isometry sending the sub-scene's base centers to
   * this pivot's two circles (upper first, because mirroring swaps sides) */
  const Point<S> O1x = st.start_pose.arc.circle.center;
  const Point<S> O0x = st.end_pose.arc.circle.center;
  const S theta = direction_angle(O1x - O0x) - scalar_pi<S>();
  Isometry<S> tau = Isometry<S>::reflect_y_then_rotate(theta, Point<S>{S(0.0), S(0.0)});
  tau.t = O0x - tau.apply(sub.O0);

  std::vector<MotionStep<S>> expanded;
  for (auto it = canon.steps.rbegin(); it != canon.steps.rend(); ++it)
    expanded.push_back(reverse_step(transport_step(*it, tau)));

  std::vector<MotionStep<S>> out;
  out.push_back(make_slide_to_angle(canonical_pose(st.start_pose),
                                    expanded.front().start_pose.arc.start_angle));
  for (auto &e : expanded) out.push_back(std::move(e));
  out.push_back(make_slide_to_angle(out.back().end_pose,
                                    canonical_pose(st.end_pose).arc.start_angle));
  return out;
}

}  // namespace detail

template <typename S>
MotionPlan<S> refine_plan(const MotionPlan<S> &plan, const SproutScene<S> &sc, int depth) {
  if (depth < 0) throw Error(ErrorCode::OutOfRange, "depth must be >= 0");
  MotionPlan<S> cur = plan;
  for (int d = 0; d < depth; ++d) {
    MotionPlan<S> next;
    for (const auto &st : cur.steps) {
      if (st.is_pivot && st.role == StepRole::Beta) {
        for (auto &e : detail::expand_beta_pivot(st, sc.config)) next.steps.push_back(std::move(e));
      } else {
        next.steps.push_back(st);
      }
    }
    next.recompute_total();
    cur = std::move(next);
  }
  return cur;
}

/* ----- the distance-spanning chain ----- */

template <typename S>
struct ChainLink {
  Circle<S> circle;  /* circle reached by this link */
  Point<S> M;        /* shared pivot point of the link */
  S h;               /* total rotation angle about M */
  MotionPlan<S> plan;
  S swept_bound;
  bool budget_ok = true;
};

template <typename S>
std::vector<ChainLink<S>> compose_theorem1(const ArcPose<S> &start_in, const ArcPose<S> &end_in,
                                           const S &per_step_budget) {
  using std::abs;
  using std::ceil;
  const S tol = S(1024.0) * tolerance_for(S(2.0));
  const ArcPose<S> start = detail::canonical_pose(start_in);
  const ArcPose<S> end = detail::canonical_pose(end_in);
  for (const ArcPose<S> *p : {&start, &end}) {
    if (abs(p->arc.circle.radius - S(1.0)) > tol)
      throw Error(ErrorCode::InvalidSpec, "poses must ride unit circles");
    if (!(abs(p->arc.sweep) < scalar_parse<S>("1.32")))
      throw Error(ErrorCode::ArcTooLong, "pose arc too long");
  }
  if (abs(abs(start.arc.sweep) - abs(end.arc.sweep)) > tol)
    throw Error(ErrorCode::InvalidSpec, "poses must carry the same arc");

  const S arc_len = abs(start.arc.sweep);
  const Point<S> c0 = start.arc.circle.center;
  const Point<S> c1 = end.arc.circle.center;
  const S d = dist(c0, c1);
  std::vector<ChainLink<S>> links;

  auto link_budget = [&](ChainLink<S> &link) {
    link.swept_bound = link.plan.total_swept_bound;
    link.budget_ok = true;
    for (const auto &st : link.plan.steps)
      link.budget_ok = link.budget_ok && st.swept_bound <= per_step_budget + tol;
  };

  if (d <= tol) { /* same circle: one measure-zero slide */
    ChainLink<S> link;
    link.circle = start.arc.circle;
    link.M = start.start_point();
    link.h = S(0.0);
    MotionStep<S> st = detail::make_slide_to_angle(start, end.arc.start_angle);
    link.plan.steps.push_back(st);
    link.plan.recompute_total();
    link_budget(link);
    links.push_back(std::move(link));
    return links;
  }

  /* centers marching along the segment, spacing at most 1.9 */
  std::vector<Point<S>> centers{c0};
  {
    const Point<S> dir{(c1.x - c0.x) / d, (c1.y - c0.y) / d};
    S walked(0.0);
    while (d - walked > tol) {
      S step = scalar_parse<S>("1.9");
      if (d - walked < step) step = d - walked;
      walked = walked + step;
      centers.push_back(Point<S>{c0.x + dir.x * walked, c0.y + dir.y * walked});
    }
    centers.back() = c1;
  }

  const S h_max = scalar_parse<S>("1.5");
  ArcPose<S> pose = start;
  for (size_t i = 1; i < centers.size(); ++i) {
    const Point<S> &pa = centers[i - 1];
    const Point<S> &pb = centers[i];
    /* common point on the left of the direction of travel */
    Point<S> Mi;
    {
      auto roots = circle_circle_intersection(Circle<S>{pa, S(1.0)}, Circle<S>{pb, S(1.0)});
      if (roots.empty()) throw Error(ErrorCode::NoIntersection, "chain circles drifted apart");
      Mi = roots.front();
      for (const Point<S> &r : roots)
        if (cross(pb - pa, r - pa) > cross(pb - pa, Mi - pa)) Mi = r;
    }
    const S hi = signed_angle(pa - Mi, pb - Mi);

    int parts = 1;
    {
      const S ratio = hi / h_max;
      parts = static_cast<int>(scalar_to_double(ratio)) + 1;
      if (S(parts - 1) >= ratio) parts -= 1;
      if (parts < 1) parts = 1;
    }
    const S hj = hi / S(parts);

    ChainLink<S> link;
    link.circle = Circle<S>{pb, S(1.0)};
    link.M = Mi;
    link.h = hi;

    /* glue slide: hang the arc from this link's pivot point */
    {
      MotionStep<S> st = detail::make_slide(pose, true, Mi);
      pose = st.end_pose;
      link.plan.steps.push_back(std::move(st));
    }

    for (int j = 0; j < parts; ++j) {
      SproutConfig<S> cfg;
      cfg.h = hj;
      cfg.eps = scalar_parse<S>("0.05");
      cfg.R = scalar_parse<S>("1.227");
      cfg.n = 4;
      cfg.precision = Precision{PrecisionKind::Hardware, 0};
      cfg.strict = false;
      SproutScene<S> sub;
      try {
        sub = build_scene(cfg);
      } catch (const Error &e) {
        throw Error(ErrorCode::RecursionInfeasible, e.what());
      }
      MotionPlan<S> local = build_motion_plan(sub, arc_len);
      const Point<S> ca = rotate_point(pa, Mi, hj * S(j));
      const Point<S> cb = rotate_point(pa, Mi, hj * S(j + 1));
      const Isometry<S> kappa = align_pairs(sub.O0, sub.O1, ca, cb);
      for (const auto &st : local.steps)
        link.plan.steps.push_back(detail::transport_step(st, kappa));
      pose = link.plan.steps.back().end_pose;
    }
    link.plan.recompute_total();
    link_budget(link);
    links.push_back(std::move(link));
  }

  /* close onto the requested end pose along its own circle */
  {
    ChainLink<S> &last = links.back();
    MotionStep<S> st = detail::make_slide_to_angle(pose, end.arc.start_angle);
    last.plan.steps.push_back(std::move(st));
    last.plan.recompute_total();
    link_budget(last);
  }
  return links;
}

/* composed rigid motion of the whole plan: every step is a rotation of the
 * plane, about the pivot point or about the slide circle's center */
template <typename S>
Isometry<S> plan_isometry(const MotionPlan<S> &plan) {
  Isometry<S> iso = Isometry<S>::identity();
  for (const auto &st : plan.steps) {
    const Point<S> &c = st.is_pivot ? st.center : st.circle.center;
    iso = Isometry<S>::rotation(c, st.angle) * iso;
  }
  return iso;
}

}  // namespace arcmotion

#endif
