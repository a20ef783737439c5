// small tour of the library: build the coarse two-family scene, check the
// invariants, plan the motion, estimate the swept area and dump SVG files.

#include "arcmotion/area.hpp"
#include "arcmotion/serialize.hpp"
#include "arcmotion/svg.hpp"

#include <cstdio>
#include <string>

using namespace arcmotion;

int main(int argc, char **argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "demo_out";

  SproutConfig<double> cfg;
  cfg.h = 1e-3;
  cfg.eps = 0.05;
  cfg.R = 1.227;
  cfg.n = 3;
  cfg.precision = Precision::hardware();
  cfg.strict = false;

  const SproutScene<double> sc = build_scene(cfg);
  std::printf("scene: n=%d, %zu anchor pairs, %zu west circles, %zu east circles\n",
              cfg.n, sc.A.size(), sc.K0.size(), sc.K1.size());
  std::printf("tip point M = (%g, %g), far point N = (%g, %g)\n",
              sc.M.x, sc.M.y, sc.N.x, sc.N.y);

  // every certified check in one sweep
  int passed = 0, total = 0;
  for (const LemmaReport &rep : check_invariants(sc)) {
    ++total;
    passed += rep.pass ? 1 : 0;
  }
  const LemmaReport beta = beta_sum(sc);
  ++total;
  passed += beta.pass ? 1 : 0;
  std::printf("invariants: %d/%d pass\n", passed, total);

  // carry the arc from the far pose back onto the tip point
  const MotionPlan<double> plan = build_motion_plan(sc, 1.31);
  std::printf("plan: %zu steps, swept-area bound %.6e\n", plan.steps.size(),
              plan.total_swept_bound);

  const AreaEstimate<double> mc = monte_carlo_swept_area(plan, 200000, 1);
  std::printf("sampled swept area: %.6e +- %.2e (%lld samples)\n", mc.value,
              mc.stderr_value, mc.samples);

  const AreaEstimate<double> horns = tn_minus_delta_area(sc, 200000, 1);
  std::printf("horn union area: %.6e +- %.2e\n", horns.value, horns.stderr_value);

  // one still of the construction plus first/middle/last motion frames
  write_text_atomic(out_dir + "/scene.svg", scene_svg(sc));
  const double ts[3] = {0.0, 0.5, 1.0};
  for (int f = 0; f < 3; ++f) {
    char name[32];
    std::snprintf(name, sizeof name, "/frame_%d.svg", f);
    write_text_atomic(out_dir + name, frame_svg(sc, plan, ts[f]));
  }
  std::printf("wrote %s/scene.svg and three motion frames\n", out_dir.c_str());
  return 0;
}
