#ifndef ARCMOTION_AREA_HPP
#define ARCMOTION_AREA_HPP

/*
 * Area accounting: the analytic per-step sum, Monte Carlo cross-checks of
 * swept regions, and the convergence study over the level-n horn unions.
 *
 * Monte Carlo sampling is chunked (prng.hpp): chunk c of a given seed always
 * draws the same points, so estimates are bit-identical regardless of the
 * worker count (ARCMOTION_WORKERS).  Membership runs a double prefilter and
 * only falls back to full-precision tests within a hair of a boundary.
 */

#include "arcmotion/motion.hpp"
#include "arcmotion/prng.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace arcmotion {

enum class AreaMethod { AnalyticSum, McUnion };

inline const char *area_method_name(AreaMethod m) {
  return m == AreaMethod::AnalyticSum ? "ANALYTIC_SUM" : "MC_UNION";
}

template <typename S>
struct AreaEstimate {
  S value;
  S stderr_value; /* zero exactly when the method is analytic */
  long long samples = 0;
  AreaMethod method = AreaMethod::AnalyticSum;
  uint64_t seed = 0;

  AreaEstimate() : value(0.0), stderr_value(0.0) {}
};

template <typename S>
bool estimate_consistent(const AreaEstimate<S> &est) {
  const bool zero = !(est.stderr_value > S(0.0)) && !(est.stderr_value < S(0.0));
  return zero == (est.method == AreaMethod::AnalyticSum);
}

template <typename S>
AreaEstimate<S> swept_area_upper_bound(const MotionPlan<S> &plan) {
  AreaEstimate<S> est;
  est.value = plan.total_swept_bound;
  est.method = AreaMethod::AnalyticSum;
  return est;
}

namespace detail {

inline int mc_workers() {
  if (const char *env = std::getenv("ARCMOTION_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1 && w <= 64) return w;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc > 16 ? 16 : hc);
}

template <typename S>
struct ThreadPrecision {
  explicit ThreadPrecision(const S &) {}
};

template <>
struct ThreadPrecision<BigFloat> {
  PrecisionGuard guard;
  explicit ThreadPrecision(const BigFloat &ref) : guard(ref.precision()) {}
};

inline double normalize_angle_d(double a) {
  const double pi = 3.14159265358979323846;
  a = std::fmod(a, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  if (a > pi) a -= 2.0 * pi;
  return a;
}

/* chunked, multi-threaded hit counting; member must be pure */
template <typename S, typename F>
AreaEstimate<S> run_mc(const Box<double> &box, long long samples, uint64_t seed, const S &prec_ref,
                       F &&member) {
  using std::sqrt;
  if (samples < 1000) throw Error(ErrorCode::OutOfRange, "need at least 1000 samples");
  const long long nchunks = (samples + (long long)kMcChunk - 1) / (long long)kMcChunk;

  std::atomic<long long> next{0};
  std::atomic<long long> hits{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;

  auto work = [&]() {
    ThreadPrecision<S> precision(prec_ref);
    try {
      for (;;) {
        const long long c = next.fetch_add(1);
        if (c >= nchunks) return;
        Prng rng = chunk_prng(seed, (uint64_t)c);
        const long long lo = c * (long long)kMcChunk;
        const long long hi = lo + (long long)kMcChunk < samples ? lo + (long long)kMcChunk : samples;
        long long local = 0;
        for (long long s = lo; s < hi; ++s) {
          const Point<double> p = sample_in_box(rng, box);
          if (member(p)) ++local;
        }
        hits.fetch_add(local);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  const int workers = mc_workers();
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto &t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  const double n = (double)samples;
  const double k = (double)hits.load();
  const double box_area = box.area();
  double phat = k / n;
  /* degenerate counts get a conservative variance floor so a sampled
   * estimate never reports a zero standard error */
  double var = phat * (1.0 - phat);
  if (k == 0.0 || k == n) {
    const double pf = 1.0 / (n + 2.0);
    var = pf * (1.0 - pf);
  }
  AreaEstimate<S> est;
  est.value = scalar_from_double<S>(box_area * phat);
  est.stderr_value = scalar_from_double<S>(box_area * std::sqrt(var / n));
  est.samples = samples;
  est.method = AreaMethod::McUnion;
  est.seed = seed;
  return est;
}

}  // namespace detail

/*
 * Sampled area of the union of all per-step swept regions: PIVOT horns plus
 * the tolerance band around each SLIDE's track arc.
 */
template <typename S>
AreaEstimate<S> monte_carlo_swept_area(const MotionPlan<S> &plan, long long samples, uint64_t seed) {
  using std::abs;
  if (plan.steps.empty()) throw Error(ErrorCode::OutOfRange, "empty plan");
  const S tol = tolerance_for(S(2.0));
  const double tol_d = scalar_to_double(tol);
  const double margin = 1e-9;

  struct PivotD {
    double px, py, dir_center, side, radius, reach, angle;
  };
  struct SlideD {
    double cx, cy, r, a0, span;
  };
  std::vector<PivotSweepRegion<S>> pivots;
  std::vector<PivotD> pivots_d;
  std::vector<DirectedArc<S>> tracks;
  std::vector<SlideD> tracks_d;

  Box<double> box;
  bool first_box = true;
  auto add_box = [&](const Box<S> &b) {
    Box<double> bd(scalar_to_double(b.xmin), scalar_to_double(b.xmax), scalar_to_double(b.ymin),
                   scalar_to_double(b.ymax));
    if (first_box) {
      box = bd;
      first_box = false;
    } else {
      box.include(Point<double>(bd.xmin, bd.ymin));
      box.include(Point<double>(bd.xmax, bd.ymax));
    }
  };

  for (const auto &st : plan.steps) {
    if (st.is_pivot) {
      const bool at_start = dist(st.center, st.start_pose.start_point()) <=
                            dist(st.center, st.start_pose.end_point());
      PivotSweepRegion<S> region = make_pivot_sweep(st.start_pose.arc, at_start, st.angle);
      add_box(region.bbox());
      PivotD d;
      d.px = scalar_to_double(region.pivot.x);
      d.py = scalar_to_double(region.pivot.y);
      d.dir_center = scalar_to_double(region.dir_center);
      d.side = scalar_to_double(region.side);
      d.radius = scalar_to_double(region.radius);
      d.reach = scalar_to_double(region.reach);
      d.angle = scalar_to_double(region.angle);
      pivots.push_back(std::move(region));
      pivots_d.push_back(d);
    } else {
      const S s0 = st.start_pose.arc.start_angle;
      const S sw = st.start_pose.arc.sweep;
      S lo = s0 + fmin_s(S(0.0), sw) + fmin_s(S(0.0), st.angle);
      using std::abs;
      DirectedArc<S> track{st.circle, lo, abs(sw) + abs(st.angle)};
      add_box(arc_bbox(track));
      SlideD d;
      d.cx = scalar_to_double(st.circle.center.x);
      d.cy = scalar_to_double(st.circle.center.y);
      d.r = scalar_to_double(st.circle.radius);
      d.a0 = scalar_to_double(track.start_angle);
      d.span = scalar_to_double(track.sweep);
      tracks.push_back(std::move(track));
      tracks_d.push_back(d);
    }
  }
  box = box.inflated(tol_d > 0.0 ? tol_d : 1e-15);

  const double pi_d = 3.14159265358979323846;
  auto member = [&](const Point<double> &p) -> bool {
    for (size_t i = 0; i < pivots_d.size(); ++i) {
      const PivotD &d = pivots_d[i];
      const double dx = p.x - d.px, dy = p.y - d.py;
      const double rho = std::sqrt(dx * dx + dy * dy);
      if (rho > d.reach + margin) continue;
      bool borderline = rho > d.reach - margin;
      if (rho <= margin) borderline = true;
      double delta = 0.0;
      if (!borderline) {
        double ratio = rho / (2.0 * d.radius);
        if (ratio > 1.0) ratio = 1.0;
        const double dir0 = d.dir_center - d.side * (pi_d / 2.0 - std::asin(ratio));
        delta = detail::normalize_angle_d(std::atan2(dy, dx) - dir0);
        const double lo = d.angle < 0.0 ? d.angle : 0.0;
        const double hi = d.angle > 0.0 ? d.angle : 0.0;
        const double slack = margin / (rho > margin ? rho : margin);
        if (delta >= lo + slack && delta <= hi - slack) return true;
        if (delta < lo - slack || delta > hi + slack) continue;
        borderline = true;
      }
      if (borderline) {
        const Point<S> ps{scalar_from_double<S>(p.x), scalar_from_double<S>(p.y)};
        if (pivots[i].contains(ps, tol)) return true;
      }
    }
    for (size_t i = 0; i < tracks_d.size(); ++i) {
      const SlideD &d = tracks_d[i];
      const double dx = p.x - d.cx, dy = p.y - d.cy;
      const double radial = std::abs(std::sqrt(dx * dx + dy * dy) - d.r);
      if (radial > tol_d + margin) continue;
      const Point<S> ps{scalar_from_double<S>(p.x), scalar_from_double<S>(p.y)};
      if (dist_point_to_arc(ps, tracks[i]) <= tol) return true;
    }
    return false;
  };

  return detail::run_mc<S>(box, samples, seed, tol, member);
}

/*
 * Sampled area of (union of level-n horns) minus the tip region.  Points are
 * classified with two exact disc tests per horn; the only full-precision
 * winding tests happen inside a thin boundary band or in the sliver where
 * the branch of the crescent is ambiguous.
 */
template <typename S>
AreaEstimate<S> tn_minus_delta_area(const SproutScene<S> &sc, long long samples, uint64_t seed) {
  using std::abs;
  const int n = sc.config.n;
  if (n == 0) {
    AreaEstimate<S> est;
    est.method = AreaMethod::AnalyticSum;
    est.seed = seed;
    return est;
  }
  const long long horns = 1LL << n;
  const S tol = tolerance_for(S(2.0));
  const double margin = 1e-9;
  const double eps_d = scalar_to_double(sc.config.eps);
  const double h_d = scalar_to_double(sc.config.h);
  const double mx = scalar_to_double(sc.M.x), my = scalar_to_double(sc.M.y);

  struct HornD {
    double lo_x, lo_y, up_x, up_y;
  };
  std::vector<HornD> pairs((size_t)horns);
  std::vector<ArcRegion<S>> exact((size_t)horns);
  double max_beta = 0.0;
  Box<double> box;
  bool first_box = true;
  for (long long k = 0; k < horns; ++k) {
    exact[(size_t)k] = horn_region(sc, n, k);
    const Circle<S> &lo = sc.K0_at(SproutScene<S>::x_key(k, n));
    const Circle<S> &up = sc.K1_at(SproutScene<S>::x_key(k + 1, n));
    pairs[(size_t)k] = {scalar_to_double(lo.center.x), scalar_to_double(lo.center.y),
                        scalar_to_double(up.center.x), scalar_to_double(up.center.y)};
    const double dx = pairs[(size_t)k].up_x - pairs[(size_t)k].lo_x;
    const double dy = pairs[(size_t)k].up_y - pairs[(size_t)k].lo_y;
    const double sep = std::sqrt(dx * dx + dy * dy);
    if (sep > max_beta) max_beta = sep;
    Box<S> b = exact[(size_t)k].bbox();
    Box<double> bd(scalar_to_double(b.xmin), scalar_to_double(b.xmax), scalar_to_double(b.ymin),
                   scalar_to_double(b.ymax));
    if (first_box) {
      box = bd;
      first_box = false;
    } else {
      box.include(Point<double>(bd.xmin, bd.ymin));
      box.include(Point<double>(bd.xmax, bd.ymax));
    }
  }
  box = box.inflated(margin);

  /* occupancy grid: a sample whose cell no horn boundary comes near is a
   * definite miss; cells are dilated past the widest crescent */
  const int gw = 768, gh = 768;
  const double cw = box.width() / gw, ch = box.height() / gh;
  std::vector<uint8_t> grid((size_t)gw * gh, 0);
  {
    const int dil = 1 + (int)(max_beta / (cw < ch ? cw : ch));
    auto mark = [&](double x, double y) {
      const int cx = (int)((x - box.xmin) / cw);
      const int cy = (int)((y - box.ymin) / ch);
      for (int ax = cx - dil; ax <= cx + dil; ++ax)
        for (int ay = cy - dil; ay <= cy + dil; ++ay)
          if (ax >= 0 && ax < gw && ay >= 0 && ay < gh) grid[(size_t)ay * gw + ax] = 1;
    };
    const double step = 0.5 * (cw < ch ? cw : ch);
    for (const auto &region : exact)
      for (const auto &arc : region.boundary) {
        const double r = scalar_to_double(arc.circle.radius);
        const double cx0 = scalar_to_double(arc.circle.center.x);
        const double cy0 = scalar_to_double(arc.circle.center.y);
        const double a0 = scalar_to_double(arc.start_angle);
        const double sw = scalar_to_double(arc.sweep);
        const double len = std::abs(sw) * r;
        const int pieces = 2 + (int)(len / step);
        for (int j = 0; j <= pieces; ++j) {
          const double a = a0 + sw * j / pieces;
          mark(cx0 + r * std::cos(a), cy0 + r * std::sin(a));
        }
      }
  }

  /* tip bands are exact rotations of P0 about M, so a point's angle about M
   * pins its candidate horns */
  const double phi0 = std::atan2(scalar_to_double(sc.P0.y) - my, scalar_to_double(sc.P0.x) - mx);
  const double band = h_d / (double)horns;

  auto pair_state = [&](long long k, double px, double py) -> int {
    /* 1 = straddles (inside lower disc, outside upper), 0 = not, -1 = near a boundary */
    const HornD &d = pairs[(size_t)k];
    const double d0 = std::sqrt((px - d.lo_x) * (px - d.lo_x) + (py - d.lo_y) * (py - d.lo_y));
    const double d1 = std::sqrt((px - d.up_x) * (px - d.up_x) + (py - d.up_y) * (py - d.up_y));
    if (std::abs(d0 - 1.0) < margin || std::abs(d1 - 1.0) < margin) return -1;
    return (d0 < 1.0 && d1 > 1.0) ? 1 : 0;
  };
  auto exact_in = [&](long long k, const Point<double> &p) -> bool {
    const Point<S> ps{scalar_from_double<S>(p.x), scalar_from_double<S>(p.y)};
    return point_in_region(exact[(size_t)k], ps, tol);
  };

  auto in_union = [&](const Point<double> &p) -> bool {
    const int cx = (int)((p.x - box.xmin) / cw);
    const int cy = (int)((p.y - box.ymin) / ch);
    if (cx < 0 || cx >= gw || cy < 0 || cy >= gh || !grid[(size_t)cy * gw + cx]) return false;
    const double dM = std::sqrt((p.x - mx) * (p.x - mx) + (p.y - my) * (p.y - my));
    if (p.x - mx <= -2.0 * eps_d) return false;

    if (dM <= eps_d + margin) {
      /* tip zone: candidates from the angular band */
      const double rel = detail::normalize_angle_d(std::atan2(p.y - my, p.x - mx) - phi0);
      const long long kc = (long long)std::floor(rel / band);
      for (long long k = kc - 2; k <= kc + 2; ++k) {
        if (k < 0 || k >= horns) continue;
        const int state = pair_state(k, p.x, p.y);
        if (state == 0) continue;
        if (state < 0 || dM >= eps_d - margin) {
          if (exact_in(k, p)) return true;
          continue;
        }
        return true; /* straddling inside the tip disc is the sliver itself */
      }
      return false;
    }

    for (long long k = 0; k < horns; ++k) {
      const int state = pair_state(k, p.x, p.y);
      if (state == 0) continue;
      if (state < 0) {
        if (exact_in(k, p)) return true;
        continue;
      }
      if (p.x - mx >= 2.0 * eps_d) return true; /* east branch is all horn */
      if (exact_in(k, p)) return true;          /* narrow ambiguous strip */
    }
    return false;
  };

  /* tip region (level-zero horn) carved out of the union */
  const ArcRegion<S> delta_region = horn_region(sc, 0, 0);
  const double b0x = scalar_to_double(sc.O0.x), b0y = scalar_to_double(sc.O0.y);
  const double b1x = scalar_to_double(sc.O1.x), b1y = scalar_to_double(sc.O1.y);
  auto in_delta = [&](const Point<double> &p) -> bool {
    const double dM = std::sqrt((p.x - mx) * (p.x - mx) + (p.y - my) * (p.y - my));
    if (dM > eps_d + margin) return false;
    const double d0 = std::sqrt((p.x - b0x) * (p.x - b0x) + (p.y - b0y) * (p.y - b0y));
    const double d1 = std::sqrt((p.x - b1x) * (p.x - b1x) + (p.y - b1y) * (p.y - b1y));
    const bool border = std::abs(d0 - 1.0) < margin || std::abs(d1 - 1.0) < margin ||
                        std::abs(dM - eps_d) < margin;
    if (!border) return d0 < 1.0 && d1 > 1.0;
    const Point<S> ps{scalar_from_double<S>(p.x), scalar_from_double<S>(p.y)};
    return point_in_region(delta_region, ps, tol);
  };

  auto member = [&](const Point<double> &p) -> bool { return in_union(p) && !in_delta(p); };
  return detail::run_mc<S>(box, samples, seed, sc.config.h, member);
}

/* ----- analytic decomposition bound ----- */

template <typename S>
struct DecompositionBound {
  S bound;
  bool hypotheses_met = false;
  S c, n0, u, v;

  DecompositionBound() : bound(0.0), c(0.0), n0(0.0), u(0.0), v(0.0) {}
};

template <typename S>
DecompositionBound<S> decomposition_bound(const SproutConfig<S> &cfg) {
  using std::log;
  DecompositionBound<S> out;
  const LemmaConstants<S> lc = compute_constants(cfg.h, cfg.eps);
  out.c = lc.c;
  out.n0 = lc.n0;
  out.u = lc.u;
  out.v = lc.v;
  if (cfg.n < 1) return out; /* zero horns, zero bound, hypotheses unmet */
  const S nn = S(cfg.n);
  const S log2n = log(nn) / log(S(2.0));
  const S tail = scalar_pi<S>() * (S(2.0) * (log2n + S(1.0)) / nn) * (S(2.0) * (log2n + S(1.0)) / nn);
  out.bound = S(20000.0) * lc.c * lc.c / nn + tail;
  const S gate = fmax_s(S(10.0) * lc.c, (S(1.0) + lc.c) / lc.v);
  out.hypotheses_met = nn > gate;
  return out;
}

/* per-piece charge at depth i past log2(n) */
template <typename S>
S decomposition_piece_bound(const SproutConfig<S> &cfg, int i) {
  const LemmaConstants<S> lc = compute_constants(cfg.h, cfg.eps);
  const S nn = S(cfg.n);
  using std::ldexp;
  return ldexp(S(10000.0) * lc.c * lc.c, -i) / (nn * nn);
}

/* ----- convergence study ----- */

template <typename S>
struct ConvergenceRow {
  int n = 0;
  AreaEstimate<S> area;
  S analytic_bound;
  double runtime_seconds = 0.0;
  bool construction_ok = true;
  std::string note;

  ConvergenceRow() : analytic_bound(0.0) {}
};

template <typename S>
std::vector<ConvergenceRow<S>> convergence_study(const SproutConfig<S> &base,
                                                 const std::vector<int> &n_list, long long samples,
                                                 uint64_t seed) {
  for (size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw Error(ErrorCode::InvalidSpec, "n_list must be strictly ascending");
  std::vector<ConvergenceRow<S>> rows;
  for (int n : n_list) {
    ConvergenceRow<S> row;
    row.n = n;
    SproutConfig<S> cfg = base;
    cfg.n = n;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const SproutScene<S> sc = build_scene(cfg);
      row.area = tn_minus_delta_area(sc, samples, seed);
    } catch (const Error &e) {
      row.construction_ok = false;
      row.note = e.what();
    }
    row.analytic_bound = decomposition_bound(cfg).bound;
    row.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

/* diagnostic: total length of carrier arcs the motion touches (slides spin
 * the arc across |angle| + L of its circle; pivots redraw the arc and trace
 * the far endpoint) */
template <typename S>
S touched_curve_length(const MotionPlan<S> &plan) {
  using std::abs;
  S total(0.0);
  for (const auto &st : plan.steps) {
    const S len = abs(st.start_pose.arc.sweep) * st.start_pose.arc.circle.radius;
    if (st.is_pivot)
      total = total + len + st.start_pose.arc.chord_length() * abs(st.angle);
    else
      total = total + (abs(st.angle) + abs(st.start_pose.arc.sweep)) * st.circle.radius;
  }
  return total;
}

}  // namespace arcmotion

#endif
