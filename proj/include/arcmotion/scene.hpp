#ifndef ARCMOTION_SCENE_HPP
#define ARCMOTION_SCENE_HPP

/*
 * Dyadic family of unit circles grown level by level between two base
 * circles, plus the oracles that only make sense against a grown scene.
 *
 * Frame: the common tip point M of the base circles is the coordinate
 * origin; the base centers sit at (-sin(h/2), -cos(h/2)) and its mirror,
 * and "origin" below names their midpoint, the point the sprouted centers
 * cluster around.  Level-i objects are indexed by dyadics k/2^i.
 */

#include "arcmotion/error.hpp"
#include "arcmotion/lemmas.hpp"
#include "arcmotion/region.hpp"

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace arcmotion {

template <typename S>
struct SproutConfig {
  S h;
  S eps;
  S R;
  int n = 1;
  Precision precision;
  bool strict = false;
};

template <typename S>
struct SproutScene {
  SproutConfig<S> config;
  Point<S> M, N, O0, O1, origin;
  Point<S> P0;
  std::vector<std::array<Point<S>, 2>> A;  /* ring anchors on the base circles */
  std::vector<std::vector<Point<S>>> C;    /* C[i][k] for x = k/2^i, k < 2^i */
  std::map<double, Circle<S>> K0, K1;      /* keyed by exact dyadic x */
  std::map<double, int> K0_level, K1_level;

  S ring_radius(int i) const {
    if (i == 0) return S(0.0);
    return config.R * S(i) / S(config.n);
  }

  static double x_key(long long k, int i) { return std::ldexp(static_cast<double>(k), -i); }

  S x_scalar(long long k, int i) const {
    using std::ldexp;
    return ldexp(S(static_cast<double>(k)), -i);
  }

  Point<S> P(const S &x) const { return rotate_point(P0, M, x * config.h); }
  Point<S> P_at(long long k, int i) const { return P(x_scalar(k, i)); }

  const Circle<S> &K0_at(double x) const {
    auto it = K0.find(x);
    if (it == K0.end()) throw Error(ErrorCode::IndexOutOfRange, "no lower circle at x");
    return it->second;
  }
  const Circle<S> &K1_at(double x) const {
    auto it = K1.find(x);
    if (it == K1.end()) throw Error(ErrorCode::IndexOutOfRange, "no upper circle at x");
    return it->second;
  }

  DirectedArc<S> tip_arc() const {
    const S start = direction_angle(P0 - M);
    return DirectedArc<S>{Circle<S>{M, config.eps}, start, config.h};
  }

  /* rotation about C_i^x carrying the circle at x onto the one at x + 2^-i */
  S alpha_at(int i, long long k) const {
    const Point<S> &Cp = C.at(i).at(k);
    const Circle<S> &a = K0_at(x_key(k, i));
    const Circle<S> &b = K1_at(x_key(k + 1, i));
    return signed_angle(a.center - Cp, b.center - Cp);
  }

  /* rotation about P_x carrying the upper circle at x onto the lower one */
  S beta_at(long long k, int i) const {
    const Point<S> Px = P_at(k, i);
    const Circle<S> &up = K1_at(x_key(k, i));
    const Circle<S> &lo = K0_at(x_key(k, i));
    return signed_angle(up.center - Px, lo.center - Px);
  }
};

namespace detail {

template <typename S>
Point<S> east_root(const std::vector<Point<S>> &roots, int level, double x, const char *what) {
  if (roots.empty()) throw ConstructionError(level, x, std::string(what) + ": no intersection");
  Point<S> best = roots.front();
  for (const Point<S> &p : roots)
    if (p.x > best.x) best = p;
  return best;
}

template <typename S>
void require(bool ok, int level, double x, const char *what) {
  if (!ok) throw ConstructionError(level, x, what);
}

}  // namespace detail

/*
 * Grow the scene: each level intersects the current circles with the next
 * ring, then swings a copy of each circle about the fresh ring point until
 * it reaches its tip anchor (clockwise for lower-type circles, counter-
 * clockwise for upper-type).  Incidence and membership are verified as the
 * construction goes; offset bounds are enforced here only for strict
 * configurations (check_invariants measures them for any scene).
 */
template <typename S>
SproutScene<S> build_scene(const SproutConfig<S> &config) {
  using std::cos;
  using std::ldexp;
  using std::sin;
  using std::sqrt;
  if (config.n < 0 || config.n > 40) throw Error(ErrorCode::InvalidSpec, "level count");
  if (!(config.h > S(0.0)) || !(config.eps > S(0.0)) || !(config.R > S(0.0)))
    throw Error(ErrorCode::InvalidSpec, "scales must be positive");
  if (!(config.R < S(2.0) - S(5.0) * config.eps))
    throw Error(ErrorCode::InvalidSpec, "reach too large for the tip radius");
  if (config.strict &&
      !(config.eps < scalar_parse<S>("1e-6") && config.h * S(1000.0) <= config.eps))
    throw Error(ErrorCode::HypothesesViolated, "strict gates on h and eps");

  SproutScene<S> sc;
  sc.config = config;
  const S half = config.h / S(2.0);
  sc.M = Point<S>{S(0.0), S(0.0)};
  sc.O0 = Point<S>{-sin(half), -cos(half)};
  sc.O1 = Point<S>{sin(half), -cos(half)};
  sc.origin = Point<S>{S(0.0), -cos(half)};
  sc.N = Point<S>{S(0.0), S(-2.0) * cos(half)};

  const Circle<S> base0{sc.O0, S(1.0)};
  const Circle<S> base1{sc.O1, S(1.0)};
  sc.K0.emplace(0.0, base0);
  sc.K0_level.emplace(0.0, 0);
  sc.K1.emplace(1.0, base1);
  sc.K1_level.emplace(1.0, 0);

  const S tol = S(64.0) * tolerance_for(S(2.0));
  const Circle<S> tip{sc.M, config.eps};

  { /* western tip anchor on the lower base circle */
    auto roots = circle_circle_intersection(base0, tip);
    if (roots.empty()) throw ConstructionError(0, 0.0, "tip circle misses base");
    Point<S> west = roots.front();
    for (const Point<S> &p : roots)
      if (p.x < west.x) west = p;
    sc.P0 = west;
  }

  /* ring anchors on the base circles */
  sc.A.resize(config.n + 1, {sc.M, sc.M});
  for (int i = 1; i <= config.n; ++i) {
    const Circle<S> ring{sc.M, sc.ring_radius(i)};
    sc.A[i][0] = detail::east_root(circle_circle_intersection(base0, ring), 0, 0.0, "ring anchor");
    sc.A[i][1] = detail::east_root(circle_circle_intersection(base1, ring), 0, 1.0, "ring anchor");
  }

  /* per-level center offset budgets */
  std::vector<S> offset_budget(config.n + 1, config.h);
  {
    const S gain = S(3.0) * sqrt(config.h * config.eps);
    S partial(0.0);
    for (int i = 1; i <= config.n; ++i) {
      using std::pow;
      partial = partial + pow(S(2.0), S(-0.5) * S(i - 1));
      offset_budget[i] = config.h + gain * partial;
    }
  }

  auto check_point = [&](const Point<S> &Cp, int level, double x, const S &radius) {
    using std::abs;
    detail::require<S>(abs(dist(Cp, sc.M) - radius) <= tol, level, x, "ring incidence");
    detail::require<S>(dist(Cp, sc.O1) <= S(1.0) + tol, level, x, "lune membership (inner)");
    detail::require<S>(dist(Cp, sc.O0) >= S(1.0) - tol, level, x, "lune membership (outer)");
  };

  auto check_circle = [&](const Circle<S> &K, const Point<S> &Cp, const Point<S> &Pp, int level,
                          double x) {
    using std::abs;
    detail::require<S>(abs(dist(Cp, K.center) - S(1.0)) <= tol, level, x, "ring anchor on circle");
    detail::require<S>(abs(dist(Pp, K.center) - S(1.0)) <= tol, level, x, "tip anchor on circle");
    if (config.strict) {
      const S off = dist(K.center, sc.origin);
      detail::require<S>(off < offset_budget[level] + tol, level, x, "center offset budget");
      detail::require<S>(off < config.eps, level, x, "center offset vs tip radius");
    }
  };

  sc.C.resize(config.n + 1);
  sc.C[0] = {sc.M};

  for (int level = 0; level < config.n; ++level) {
    const int next = level + 1;
    const long long width = 1LL << level;
    const Circle<S> ring{sc.M, sc.ring_radius(next)};
    std::vector<Point<S>> fresh(2 * width);

    for (long long k = 0; k < width; ++k) { /* forward points, x < 1 */
      const double x = SproutScene<S>::x_key(k, level);
      const Circle<S> &K = sc.K0_at(x);
      fresh[2 * k] = detail::east_root(circle_circle_intersection(K, ring), next, x, "ring point");
      check_point(fresh[2 * k], next, x, ring.radius);
    }
    for (long long k = 1; k <= width; ++k) { /* backward points, x > 0 */
      const double x = SproutScene<S>::x_key(k, level);
      const Circle<S> &K = sc.K1_at(x);
      fresh[2 * k - 1] =
          detail::east_root(circle_circle_intersection(K, ring), next, x, "ring point");
      check_point(fresh[2 * k - 1], next, x, ring.radius);
    }

    for (long long k = 1; k <= width; ++k) { /* new lower circles at x - 2^-(level+1) */
      const double xp = SproutScene<S>::x_key(k, level);
      const double y = SproutScene<S>::x_key(2 * k - 1, next);
      const Point<S> &Q = fresh[2 * k - 1];
      const Point<S> Py = sc.P_at(2 * k - 1, next);
      auto [K, alpha] = rotate_circle_to_contain(sc.K1_at(xp), Q, Py, Sense::Negative);
      (void)alpha;
      check_circle(K, Q, Py, next, y);
      sc.K0.emplace(y, K);
      sc.K0_level.emplace(y, next);
    }
    for (long long k = 0; k < width; ++k) { /* new upper circles at x + 2^-(level+1) */
      const double xp = SproutScene<S>::x_key(k, level);
      const double y = SproutScene<S>::x_key(2 * k + 1, next);
      const Point<S> &Q = fresh[2 * k];
      const Point<S> Py = sc.P_at(2 * k + 1, next);
      auto [K, alpha] = rotate_circle_to_contain(sc.K0_at(xp), Q, Py, Sense::Positive);
      (void)alpha;
      check_circle(K, Q, Py, next, y);
      sc.K1.emplace(y, K);
      sc.K1_level.emplace(y, next);
    }
    sc.C[next] = std::move(fresh);
  }
  return sc;
}

/* ----- scene-wide invariant reports ----- */

template <typename S>
std::vector<LemmaReport> check_invariants(const SproutScene<S> &sc, bool east_roots = true) {
  using std::abs;
  using std::sqrt;
  std::vector<LemmaReport> out;
  const S tol = S(64.0) * tolerance_for(S(2.0));
  const int n = sc.config.n;

  /* circles grouped by the level that created them */
  std::vector<std::vector<std::pair<double, const Circle<S> *>>> by_level0(n + 1), by_level1(n + 1);
  for (const auto &[x, K] : sc.K0) by_level0[sc.K0_level.at(x)].push_back({x, &K});
  for (const auto &[x, K] : sc.K1) by_level1[sc.K1_level.at(x)].push_back({x, &K});

  const S gain = S(3.0) * sqrt(sc.config.h * sc.config.eps);
  std::vector<S> budget(n + 1, sc.config.h);
  {
    S partial(0.0);
    for (int i = 1; i <= n; ++i) {
      using std::pow;
      partial = partial + pow(S(2.0), S(-0.5) * S(i - 1));
      budget[i] = sc.config.h + gain * partial;
    }
  }
  const S global_cap = sc.config.h + S(9.6) * sqrt(sc.config.h * sc.config.eps);

  for (int i = 0; i <= n; ++i) {
    { /* ring incidence and lune membership of the level's ring points */
      LemmaReport ring, lune;
      ring.lemma_id = "ring_incidence";
      lune.lemma_id = "lune_membership";
      ring.hypotheses_met = lune.hypotheses_met = true;
      S worst(0.0), inner(10.0), outer(10.0);
      for (const Point<S> &Cp : sc.C[i]) {
        worst = fmax_s(worst, abs(dist(Cp, sc.M) - sc.ring_radius(i)));
        inner = fmin_s(inner, S(1.0) - dist(Cp, sc.O1));
        outer = fmin_s(outer, dist(Cp, sc.O0) - S(1.0));
      }
      ring.add_measured("level", S(i));
      ring.add_measured("max_ring_deviation", worst);
      ring.add_bound("deviation_max", tol);
      ring.pass = worst <= tol;
      lune.add_measured("level", S(i));
      lune.add_measured("min_inner_margin", inner);
      lune.add_measured("min_outer_margin", outer);
      lune.add_bound("margin_min", -tol);
      lune.pass = inner >= -tol && outer >= -tol;
      out.push_back(std::move(ring));
      out.push_back(std::move(lune));
    }

    { /* anchors still on their circles; centers within their budgets */
      LemmaReport anchors, lvlrep, glob;
      anchors.lemma_id = "anchor_containment";
      lvlrep.lemma_id = "center_offset_level";
      glob.lemma_id = "center_offset_global";
      anchors.hypotheses_met = lvlrep.hypotheses_met = glob.hypotheses_met = true;
      S worst_anchor(0.0), worst_slack(-10.0), worst_off(0.0);
      auto anchor = [&](const Circle<S> &K, const Point<S> &p) {
        worst_anchor = fmax_s(worst_anchor, abs(dist(p, K.center) - S(1.0)));
      };
      auto feed = [&](const std::pair<double, const Circle<S> *> &entry, bool lower) {
        const Circle<S> &K = *entry.second;
        if (i == 0) {
          anchor(K, sc.M);
        } else {
          const long long k = static_cast<long long>(std::llround(std::ldexp(entry.first, i)));
          anchor(K, sc.C[i][lower ? k : k - 1]);
          anchor(K, sc.P_at(k, i));
        }
        const S off = dist(K.center, sc.origin);
        worst_off = fmax_s(worst_off, off);
        worst_slack = fmax_s(worst_slack, off - budget[i]);
      };
      for (const auto &entry : by_level0[i]) feed(entry, true);
      for (const auto &entry : by_level1[i]) feed(entry, false);
      anchors.add_measured("level", S(i));
      anchors.add_measured("max_anchor_deviation", worst_anchor);
      anchors.add_bound("deviation_max", tol);
      anchors.pass = worst_anchor <= tol;
      lvlrep.add_measured("level", S(i));
      lvlrep.add_measured("max_offset_minus_budget", worst_slack);
      lvlrep.add_bound("slack_max", S(0.0));
      lvlrep.pass = worst_slack <= tol;
      glob.add_measured("level", S(i));
      glob.add_measured("max_offset", worst_off);
      glob.add_bound("offset_cap", global_cap);
      glob.add_bound("tip_radius", sc.config.eps);
      glob.pass = worst_off < global_cap + tol && worst_off < sc.config.eps + tol;
      out.push_back(std::move(anchors));
      out.push_back(std::move(lvlrep));
      out.push_back(std::move(glob));
    }

    if (east_roots) { /* deeper rings keep cutting this level's circles inside the lune */
      LemmaReport rep;
      rep.lemma_id = "east_root_existence";
      rep.hypotheses_met = true;
      S inner(10.0), outer(10.0);
      long long count = 0;
      bool all_exist = true;
      auto sweep_circle = [&](const Circle<S> &K) {
        for (int j = (i > 0 ? i : 1); j <= n; ++j) {
          auto roots = circle_circle_intersection(K, Circle<S>{sc.M, sc.ring_radius(j)});
          if (roots.empty()) {
            all_exist = false;
            continue;
          }
          Point<S> east = roots.front();
          for (const Point<S> &p : roots)
            if (p.x > east.x) east = p;
          inner = fmin_s(inner, S(1.0) - dist(east, sc.O1));
          outer = fmin_s(outer, dist(east, sc.O0) - S(1.0));
          ++count;
        }
      };
      for (const auto &entry : by_level0[i]) sweep_circle(*entry.second);
      for (const auto &entry : by_level1[i]) sweep_circle(*entry.second);
      rep.add_measured("level", S(i));
      rep.add_measured("roots_checked", S(static_cast<double>(count)));
      rep.add_measured("min_inner_margin", inner);
      rep.add_measured("min_outer_margin", outer);
      rep.add_bound("margin_min", -tol);
      rep.pass = all_exist && inner >= -tol && outer >= -tol;
      rep.note("all_roots_exist", all_exist);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

/* ----- horn regions ----- */

/*
 * Level-i horn at x = k/2^i: from the tip point at x along the lower circle
 * out to the shared ring point, back along the upper circle at x + 2^-i to
 * the tip point at x + 2^-i, then home along the tip arc.
 */
template <typename S>
ArcRegion<S> horn_region(const SproutScene<S> &sc, int i, long long k) {
  if (i < 0 || i > sc.config.n || k < 0 || k >= (1LL << i))
    throw Error(ErrorCode::IndexOutOfRange, "horn index");
  const Point<S> &Cp = sc.C[i][k];
  const Circle<S> &lo = sc.K0_at(SproutScene<S>::x_key(k, i));
  const Circle<S> &up = sc.K1_at(SproutScene<S>::x_key(k + 1, i));
  const Point<S> Pa = sc.P_at(k, i);
  const Point<S> Pb = sc.P_at(k + 1, i);

  auto short_arc = [](const Circle<S> &K, const Point<S> &from, const Point<S> &to) {
    const S a0 = direction_angle(from - K.center);
    const S a1 = direction_angle(to - K.center);
    return DirectedArc<S>{K, a0, normalize_angle(a1 - a0)};
  };
  ArcRegion<S> region;
  region.boundary.push_back(short_arc(lo, Pa, Cp));
  region.boundary.push_back(short_arc(up, Cp, Pb));
  region.boundary.push_back(short_arc(Circle<S>{sc.M, sc.config.eps}, Pb, Pa));
  return region;
}

template <typename S>
bool point_in_horn(const SproutScene<S> &sc, int i, long long k, const Point<S> &p) {
  return point_in_region(horn_region(sc, i, k), p, S(64.0) * tolerance_for(S(2.0)));
}

/* tip region between the base circles, also testable without any arcs */
template <typename S>
bool tip_region_member(const SproutScene<S> &sc, const Point<S> &p) {
  const S tol = tolerance_for(S(2.0));
  return dist(p, sc.O0) <= S(1.0) + tol && dist(p, sc.O1) >= S(1.0) - tol &&
         dist(p, sc.M) <= sc.config.eps + tol;
}

/* ----- scene oracles ----- */

template <typename S>
LemmaReport alpha_sandwich(const SproutScene<S> &sc, int i, double x) {
  using std::ldexp;
  using std::sqrt;
  LemmaReport rep;
  rep.lemma_id = "lemma10";
  if (i < 1 || i > sc.config.n) throw Error(ErrorCode::IndexOutOfRange, "level");
  const long long k = static_cast<long long>(std::llround(std::ldexp(x, i)));
  if (k < 0 || k >= (1LL << i) || std::ldexp(static_cast<double>(k), -i) != x)
    throw Error(ErrorCode::IndexOutOfRange, "x not a level-i dyadic below 1");

  const S tol = S(64.0) * tolerance_for(S(2.0));
  const S alpha = sc.alpha_at(i, k);
  const Point<S> Pb = sc.P_at(k + 1, i);
  const S t = dist(Pb, sc.C[i][k]);
  const S pow2 = ldexp(S(1.0), -i);
  const S base = sc.config.h * sc.config.eps * pow2 / (t * sqrt(S(1.0) - (t / S(2.0)) * (t / S(2.0))));
  const S lower = scalar_parse<S>("0.9") * base;
  const S upper = scalar_parse<S>("1.1") * base;

  rep.hypotheses_met = t > sc.config.eps && t <= S(2.0) - S(4.0) * sc.config.eps;
  rep.add_measured("alpha", alpha);
  rep.add_measured("t", t);
  rep.add_bound("alpha_min", lower);
  rep.add_bound("alpha_max", upper);
  bool ok = alpha > S(0.0) && alpha > lower - tol && alpha < upper + tol;
  /* coarse cap, valid once the tip radius dwarfs the opening angle */
  if (sc.config.h * S(1000.0) <= sc.config.eps) {
    const S coarse = pow2 * scalar_parse<S>("0.001");
    rep.add_bound("alpha_coarse_max", coarse);
    ok = ok && alpha < coarse;
  }
  if (rep.hypotheses_met) rep.pass = ok;
  return rep;
}

template <typename S>
LemmaReport beta_sum(const SproutScene<S> &sc) {
  LemmaReport rep;
  rep.lemma_id = "beta_sum";
  rep.hypotheses_met = true;
  const int n = sc.config.n;
  const long long total = 1LL << n;
  const S q = S(1.0) - sc.config.eps * sc.config.eps * sc.config.eps * sc.config.eps;

  /* the level-n ring points march from one base ring anchor to the other,
   * so the tip wedges they span add up to the full opening angle */
  S sum_beta(0.0), sum_prime(0.0);
  S max_ratio(0.0), min_beta(10.0), min_prime(10.0);
  bool each_ok = true;
  for (long long k = 1; k < total; ++k) {
    const S prime = signed_angle(sc.C[n][k - 1] - sc.M, sc.C[n][k] - sc.M);
    sum_prime = sum_prime + prime;
    min_prime = fmin_s(min_prime, prime);
    const S beta = sc.beta_at(k, n);
    sum_beta = sum_beta + beta;
    min_beta = fmin_s(min_beta, beta);
    const S ratio = beta / prime;
    max_ratio = fmax_s(max_ratio, ratio);
    each_ok = each_ok && beta > S(0.0) && prime > S(0.0) && beta < prime && ratio < q;
  }

  using std::abs;
  const S tol = S(64.0) * tolerance_for(S(2.0));
  const S rel_err = abs(sum_prime - sc.config.h) / sc.config.h;
  S rel_cap = S(64.0) * tolerance_for(sc.config.h) / sc.config.h;
  {
    using std::ldexp;
    const S floor_cap = ldexp(S(1.0), -200);
    if (rel_cap < floor_cap) rel_cap = floor_cap;
  }
  rep.add_measured("beta_sum", sum_beta);
  rep.add_measured("beta_prime_sum", sum_prime);
  rep.add_measured("max_ratio", max_ratio);
  rep.add_measured("min_beta", min_beta);
  rep.add_measured("min_beta_prime", min_prime);
  rep.add_measured("prime_sum_rel_err", rel_err);
  rep.add_bound("beta_sum_max", q * sc.config.h);
  rep.add_bound("ratio_max", q);
  rep.add_bound("prime_sum", sc.config.h);
  rep.add_bound("prime_sum_rel_err_max", rel_cap);
  rep.pass = each_ok && sum_beta <= q * sc.config.h + tol && rel_err <= rel_cap;
  return rep;
}

template <typename S>
LemmaReport consecutive_junction_bounds(const SproutScene<S> &sc) {
  LemmaReport rep;
  rep.lemma_id = "junction_gaps";
  rep.hypotheses_met = true;
  const int n = sc.config.n;
  const S tol = S(64.0) * tolerance_for(S(2.0));
  const LemmaConstants<S> kc = compute_constants(sc.config.h, sc.config.eps);

  S max_gap(0.0);
  for (int i = 0; i < n; ++i)
    for (long long k = 0; k < (1LL << i); ++k) {
      max_gap = fmax_s(max_gap, dist(sc.C[i][k], sc.C[i + 1][2 * k]));
      max_gap = fmax_s(max_gap, dist(sc.C[i][k], sc.C[i + 1][2 * k + 1]));
    }

  const S cap = kc.c / S(n);
  rep.add_measured("max_gap", max_gap);
  rep.add_measured("u", kc.u);
  rep.add_measured("n0", kc.n0);
  rep.add_measured("c", kc.c);
  rep.add_bound("gap_max", cap);
  bool ok = max_gap < cap + tol;
  if (S(n) >= kc.n0) {
    /* fine regime: consecutive ring arcs stay within 6h of each other */
    const S ring_gap = ring_gap_max(sc.config.h, sc.config.R, n, 100);
    rep.add_measured("ring_gap", ring_gap);
    rep.add_bound("ring_gap_max", S(6.0) * sc.config.h);
    ok = ok && ring_gap < S(6.0) * sc.config.h;
  } else {
    /* coarse regime: any two lune points are within diameter reach */
    rep.add_bound("diameter_cap", S(2.0));
    ok = ok && max_gap <= S(2.0) + tol && S(2.0) <= cap + tol;
  }
  rep.pass = ok;
  return rep;
}

/* junction configuration in the frame the rotation check expects */
template <typename S>
struct JunctionScene {
  Point<S> Qp, Qpp, C;
  Circle<S> Kp, Kpp;
};

template <typename S>
JunctionScene<S> junction_from_scene(const SproutScene<S> &sc, int i, double x) {
  if (i < 1 || i > sc.config.n) throw Error(ErrorCode::IndexOutOfRange, "level");
  const long long k = static_cast<long long>(std::llround(std::ldexp(x, i)));
  if (k < 0 || k >= (1LL << i) || std::ldexp(static_cast<double>(k), -i) != x)
    throw Error(ErrorCode::IndexOutOfRange, "x not a level-i dyadic below 1");
  JunctionScene<S> j;
  const Point<S> shift = sc.origin;
  j.Qp = sc.P_at(k, i) - shift;
  j.Qpp = sc.P_at(k + 1, i) - shift;
  j.C = sc.C[i][k] - shift;
  const Circle<S> &lo = sc.K0_at(SproutScene<S>::x_key(k, i));
  const Circle<S> &up = sc.K1_at(SproutScene<S>::x_key(k + 1, i));
  j.Kp = Circle<S>{lo.center - shift, lo.radius};
  j.Kpp = Circle<S>{up.center - shift, up.radius};
  return j;
}

}  // namespace arcmotion

#endif
