#ifndef ARCMOTION_CLI_HPP
#define ARCMOTION_CLI_HPP

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "arcmotion/area.hpp"
#include "arcmotion/error.hpp"
#include "arcmotion/motion.hpp"
#include "arcmotion/scene.hpp"
#include "arcmotion/serialize.hpp"
#include "arcmotion/svg.hpp"

namespace arcmotion {

enum class Command { Sprout, Verify, Plan, Area, Render, Theorem1 };
enum class OutputFormat { Json, Csv, Svg };

inline const char *command_name(Command c) {
  switch (c) {
    case Command::Sprout: return "sprout";
    case Command::Verify: return "verify";
    case Command::Plan: return "plan";
    case Command::Area: return "area";
    case Command::Render: return "render";
    case Command::Theorem1: return "theorem1";
  }
  return "?";
}

inline const char *format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Svg: return "svg";
  }
  return "?";
}

/* one experiment, fully described; scalar fields stay as the exact decimal
   text the user gave so either precision backend can parse them losslessly */
struct ExperimentSpec {
  Command command = Command::Sprout;
  SproutConfig<std::string> config;
  std::string arc_len = "1.31";
  std::vector<int> n_list;
  long long samples = 1000000;
  long long seed = 42;
  int depth = 0;
  std::string output_path;
  OutputFormat format = OutputFormat::Json;
};

inline std::string usage_text() {
  return
      "usage: arcmotion <command> [flags]\n"
      "\n"
      "commands:\n"
      "  sprout    build the two-family scene and emit it as JSON (or SVG)\n"
      "  verify    run the certified checks on a scene, emit reports\n"
      "  plan      build (and optionally refine) a motion plan, emit JSON\n"
      "  area      convergence study over --n list, emit CSV\n"
      "  render    write SVG frames sampling the motion at a uniform t grid\n"
      "  theorem1  move an arc between two distant poses, emit chain JSON\n"
      "\n"
      "flags:\n"
      "  --h X          turning angle (default 0.001)\n"
      "  --eps X        ring radius (default 0.05)\n"
      "  --n LIST       comma separated level list, e.g. 6,8,10,12 (default 4)\n"
      "  --R X          far point distance (default 1.227)\n"
      "  --arc-len X    arc length to move (default 1.31)\n"
      "  --precision P  'hw' or mantissa bits, e.g. 256 (default hw)\n"
      "  --strict       tight regime; requires eps < 1e-6 and h <= eps/1000\n"
      "  --relaxed      coarse regime (default)\n"
      "  --samples K    Monte Carlo samples (default 1000000; render: frames, default 24)\n"
      "  --seed K       PRNG seed (default 42)\n"
      "  --depth K      refinement depth for plan (default 0)\n"
      "  --out PATH     output path (default stdout; render writes PATH_###.svg)\n"
      "  --format F     json, csv or svg (default depends on command)\n";
}

namespace detail {

/* strict numeric text check: strtod must consume the whole token */
inline double parse_number_text(const std::string &flag, const std::string &text) {
  if (text.empty()) throw Error(ErrorCode::InvalidSpec, flag + " needs a numeric value");
  char *end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == nullptr || *end != '\0')
    throw Error(ErrorCode::InvalidSpec, flag + ": cannot parse number '" + text + "'");
  return v;
}

inline long long parse_int_text(const std::string &flag, const std::string &text) {
  if (text.empty()) throw Error(ErrorCode::InvalidSpec, flag + " needs an integer value");
  errno = 0;
  char *end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  if (errno != 0 || end == nullptr || *end != '\0')
    throw Error(ErrorCode::InvalidSpec, flag + ": cannot parse integer '" + text + "'");
  return v;
}

inline std::string lower(std::string s) {
  for (char &c : s) c = (char)std::tolower((unsigned char)c);
  return s;
}

inline std::vector<int> parse_n_list(const std::string &text) {
  std::vector<int> out;
  std::string cur;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      if (cur.empty()) throw Error(ErrorCode::InvalidSpec, "--n: empty element in list '" + text + "'");
      out.push_back((int)parse_int_text("--n", cur));
      cur.clear();
    } else {
      cur.push_back(text[i]);
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidSpec, "--n needs at least one level");
  for (int n : out)
    if (n < 0 || n > 40) throw Error(ErrorCode::InvalidSpec, "--n: level out of range: " + std::to_string(n));
  return out;
}

}  // namespace detail

/* argv (program name excluded) -> spec; throws InvalidSpec on any problem */
inline ExperimentSpec parse_args(const std::vector<std::string> &args) {
  if (args.empty()) throw Error(ErrorCode::InvalidSpec, usage_text());

  ExperimentSpec spec;
  const std::string cmd = detail::lower(args[0]);
  if (cmd == "sprout") spec.command = Command::Sprout;
  else if (cmd == "verify") spec.command = Command::Verify;
  else if (cmd == "plan") spec.command = Command::Plan;
  else if (cmd == "area") spec.command = Command::Area;
  else if (cmd == "render") spec.command = Command::Render;
  else if (cmd == "theorem1") spec.command = Command::Theorem1;
  else throw Error(ErrorCode::InvalidSpec, "unknown command: " + args[0] + "\n" + usage_text());

  /* defaults first, flags overwrite */
  spec.config.h = "0.001";
  spec.config.eps = "0.05";
  spec.config.R = "1.227";
  spec.config.n = 4;
  spec.config.precision = Precision::hardware();
  spec.config.strict = false;
  spec.n_list = {4};

  bool samples_given = false;
  bool format_given = false;

  for (size_t i = 1; i < args.size(); ++i) {
    const std::string &flag = args[i];
    auto value = [&]() -> const std::string & {
      if (i + 1 >= args.size()) throw Error(ErrorCode::InvalidSpec, flag + " needs a value");
      return args[++i];
    };
    if (flag == "--h") {
      const std::string &v = value();
      detail::parse_number_text(flag, v);
      spec.config.h = v;
    } else if (flag == "--eps") {
      const std::string &v = value();
      detail::parse_number_text(flag, v);
      spec.config.eps = v;
    } else if (flag == "--R") {
      const std::string &v = value();
      detail::parse_number_text(flag, v);
      spec.config.R = v;
    } else if (flag == "--arc-len") {
      const std::string &v = value();
      detail::parse_number_text(flag, v);
      spec.arc_len = v;
    } else if (flag == "--n") {
      spec.n_list = detail::parse_n_list(value());
      spec.config.n = spec.n_list.front();
    } else if (flag == "--precision") {
      const std::string &v = value();
      if (detail::lower(v) == "hw") {
        spec.config.precision = Precision::hardware();
      } else {
        long long bits = detail::parse_int_text(flag, v);
        if (bits < 24 || bits > 16384)
          throw Error(ErrorCode::InvalidSpec, "--precision: bits out of range [24, 16384]");
        spec.config.precision = Precision::big((unsigned)bits);
      }
    } else if (flag == "--strict") {
      spec.config.strict = true;
    } else if (flag == "--relaxed") {
      spec.config.strict = false;
    } else if (flag == "--samples") {
      spec.samples = detail::parse_int_text(flag, value());
      samples_given = true;
      if (spec.samples < 1) throw Error(ErrorCode::InvalidSpec, "--samples must be positive");
    } else if (flag == "--seed") {
      spec.seed = detail::parse_int_text(flag, value());
    } else if (flag == "--depth") {
      spec.depth = (int)detail::parse_int_text(flag, value());
      if (spec.depth < 0) throw Error(ErrorCode::InvalidSpec, "--depth must be >= 0");
    } else if (flag == "--out") {
      spec.output_path = value();
    } else if (flag == "--format") {
      const std::string v = detail::lower(value());
      if (v == "json") spec.format = OutputFormat::Json;
      else if (v == "csv") spec.format = OutputFormat::Csv;
      else if (v == "svg") spec.format = OutputFormat::Svg;
      else throw Error(ErrorCode::InvalidSpec, "--format: expected json, csv or svg, got '" + v + "'");
      format_given = true;
    } else {
      throw Error(ErrorCode::InvalidSpec, "unknown flag: " + flag + "\n" + usage_text());
    }
  }

  /* command-dependent defaults */
  if (!samples_given && spec.command == Command::Render) spec.samples = 24;
  if (!format_given) {
    switch (spec.command) {
      case Command::Area: spec.format = OutputFormat::Csv; break;
      case Command::Render: spec.format = OutputFormat::Svg; break;
      default: spec.format = OutputFormat::Json; break;
    }
  }

  /* regime gate: the tight regime only makes sense for tiny rings */
  if (spec.config.strict) {
    double e = detail::parse_number_text("--eps", spec.config.eps);
    double h = detail::parse_number_text("--h", spec.config.h);
    if (!(e < 1e-6))
      throw Error(ErrorCode::InvalidSpec, "--strict requires eps < 1e-6 (got " + spec.config.eps + ")");
    if (!(h <= e / 1000.0 * (1.0 + 1e-9)))
      throw Error(ErrorCode::InvalidSpec, "--strict requires h <= eps/1000");
  }

  /* format sanity per command */
  if (spec.command == Command::Render && spec.format != OutputFormat::Svg)
    throw Error(ErrorCode::InvalidSpec, "render only writes svg");
  if (spec.command == Command::Area && spec.format == OutputFormat::Svg)
    throw Error(ErrorCode::InvalidSpec, "area writes csv or json, not svg");
  if ((spec.command == Command::Verify || spec.command == Command::Plan ||
       spec.command == Command::Theorem1) &&
      spec.format != OutputFormat::Json)
    throw Error(ErrorCode::InvalidSpec, std::string(command_name(spec.command)) + " only writes json");
  if (spec.command == Command::Sprout && spec.format == OutputFormat::Csv)
    throw Error(ErrorCode::InvalidSpec, "sprout writes json or svg, not csv");

  return spec;
}

/* inverse of parse_args: every field is emitted explicitly so that
   parse_args(render_args(spec)) == spec */
inline std::vector<std::string> render_args(const ExperimentSpec &spec) {
  std::vector<std::string> out;
  out.push_back(command_name(spec.command));
  out.push_back("--h"); out.push_back(spec.config.h);
  out.push_back("--eps"); out.push_back(spec.config.eps);
  out.push_back("--R"); out.push_back(spec.config.R);
  out.push_back("--arc-len"); out.push_back(spec.arc_len);
  {
    std::string joined;
    for (size_t i = 0; i < spec.n_list.size(); ++i) {
      if (i) joined.push_back(',');
      joined += std::to_string(spec.n_list[i]);
    }
    out.push_back("--n"); out.push_back(joined);
  }
  out.push_back("--precision");
  out.push_back(spec.config.precision.kind == PrecisionKind::Hardware
                    ? "hw"
                    : std::to_string(spec.config.precision.bits));
  out.push_back(spec.config.strict ? "--strict" : "--relaxed");
  out.push_back("--samples"); out.push_back(std::to_string(spec.samples));
  out.push_back("--seed"); out.push_back(std::to_string(spec.seed));
  out.push_back("--depth"); out.push_back(std::to_string(spec.depth));
  if (!spec.output_path.empty()) { out.push_back("--out"); out.push_back(spec.output_path); }
  out.push_back("--format"); out.push_back(format_name(spec.format));
  return out;
}

inline bool operator==(const ExperimentSpec &a, const ExperimentSpec &b) {
  return a.command == b.command && a.config.h == b.config.h && a.config.eps == b.config.eps &&
         a.config.R == b.config.R && a.config.n == b.config.n &&
         a.config.precision.kind == b.config.precision.kind &&
         a.config.precision.bits == b.config.precision.bits && a.config.strict == b.config.strict &&
         a.arc_len == b.arc_len && a.n_list == b.n_list && a.samples == b.samples &&
         a.seed == b.seed && a.depth == b.depth && a.output_path == b.output_path &&
         a.format == b.format;
}

namespace detail {

inline void emit(const std::string &path, const std::string &content) {
  if (path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    write_text_atomic(path, content);
  }
}

/* render output paths: out/frames -> out/frames_000.svg, keeps .svg suffix if given */
inline std::string frame_path(const std::string &base, int index) {
  char suffix[16];
  std::snprintf(suffix, sizeof suffix, "_%03d.svg", index);
  std::string stem = base.empty() ? "frame" : base;
  const std::string ext = ".svg";
  if (stem.size() > ext.size() && stem.compare(stem.size() - ext.size(), ext.size(), ext) == 0)
    stem.resize(stem.size() - ext.size());
  return stem + suffix;
}

template <typename S> SproutConfig<S> typed_config(const ExperimentSpec &spec) {
  SproutConfig<S> cfg;
  cfg.h = scalar_parse<S>(spec.config.h);
  cfg.eps = scalar_parse<S>(spec.config.eps);
  cfg.R = scalar_parse<S>(spec.config.R);
  cfg.n = spec.config.n;
  cfg.precision = spec.config.precision;
  cfg.strict = spec.config.strict;
  return cfg;
}

template <typename S> int run_typed(const ExperimentSpec &spec) {
  SproutConfig<S> cfg = typed_config<S>(spec);

  switch (spec.command) {
    case Command::Sprout: {
      SproutScene<S> sc = build_scene(cfg);
      if (spec.format == OutputFormat::Svg) emit(spec.output_path, scene_svg(sc));
      else emit(spec.output_path, json_text(scene_to_json(sc)));
      return 0;
    }

    case Command::Verify: {
      SproutScene<S> sc = build_scene(cfg);
      std::vector<LemmaReport> reports = check_invariants(sc);
      reports.push_back(beta_sum(sc));
      reports.push_back(consecutive_junction_bounds(sc));
      for (int i = 1; i <= cfg.n; ++i) reports.push_back(alpha_sandwich(sc, i, 0.0));
      reports.push_back(polynomial_certificate<S>(cfg.R, 10000));
      {
        S arc_len = scalar_parse<S>(spec.arc_len);
        MotionPlan<S> plan = build_motion_plan(sc, arc_len);
        reports.push_back(validate_plan(plan));
      }
      std::string summary;
      bool hard_fail = false;
      for (const LemmaReport &r : reports) {
        summary += r.lemma_id;
        summary += r.pass ? ": pass" : (r.hypotheses_met ? ": FAIL" : ": skip (hypotheses not met)");
        summary += "\n";
        if (!r.pass && r.hypotheses_met) hard_fail = true;
      }
      emit(spec.output_path, json_text(reports_to_json(reports)));
      std::fputs(summary.c_str(), spec.output_path.empty() ? stderr : stdout);
      return hard_fail ? 1 : 0;
    }

    case Command::Plan: {
      SproutScene<S> sc = build_scene(cfg);
      S arc_len = scalar_parse<S>(spec.arc_len);
      MotionPlan<S> plan = build_motion_plan(sc, arc_len);
      if (spec.depth > 0) plan = refine_plan(plan, sc, spec.depth);
      emit(spec.output_path, json_text(plan_to_json(plan)));
      return 0;
    }

    case Command::Area: {
      std::vector<ConvergenceRow<S>> rows =
          convergence_study(cfg, spec.n_list, (std::uint64_t)spec.samples, (std::uint64_t)spec.seed);
      if (spec.format == OutputFormat::Json) emit(spec.output_path, json_text(rows_to_json(rows)));
      else emit(spec.output_path, rows_to_csv(rows));
      return 0;
    }

    case Command::Render: {
      SproutScene<S> sc = build_scene(cfg);
      S arc_len = scalar_parse<S>(spec.arc_len);
      MotionPlan<S> plan = build_motion_plan(sc, arc_len);
      if (spec.depth > 0) plan = refine_plan(plan, sc, spec.depth);
      const int frames = (int)spec.samples;
      if (frames < 1) throw Error(ErrorCode::InvalidSpec, "render needs at least one frame");
      for (int f = 0; f < frames; ++f) {
        double t = frames == 1 ? 0.0 : (double)f / (double)(frames - 1);
        write_text_atomic(frame_path(spec.output_path, f), frame_svg(sc, plan, t));
      }
      return 0;
    }

    case Command::Theorem1: {
      /* demo journey: carry the arc from a canonical pose to the same pose
         translated five units east, under a per-pivot budget that admits the
         widest wedge a single link may use */
      S arc_len = scalar_parse<S>(spec.arc_len);
      S zero = scalar_from_double<S>(0.0);
      Circle<S> c0{Point<S>{zero, zero}, scalar_from_double<S>(1.0)};
      Circle<S> c1{Point<S>{scalar_from_double<S>(5.0), zero}, scalar_from_double<S>(1.0)};
      S start_dir = scalar_pi<S>() / scalar_from_double<S>(2.0);
      ArcPose<S> start{DirectedArc<S>{c0, start_dir, -arc_len}};
      ArcPose<S> end{DirectedArc<S>{c1, start_dir, -arc_len}};
      S chord = start.arc.chord_length();
      S budget = chord * chord * scalar_from_double<S>(1.5) / scalar_from_double<S>(2.0);
      std::vector<ChainLink<S>> chain = compose_theorem1(start, end, budget);
      emit(spec.output_path, json_text(chain_to_json(chain)));
      return 0;
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unhandled command");
}

}  // namespace detail

inline int exit_code_for(const Error &e) {
  switch (e.code()) {
    case ErrorCode::InvalidSpec:
    case ErrorCode::OutOfRange:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::ArcTooLong:
      return 2;
    default:
      return 3;
  }
}

/* dispatch; throws Error (callers map via exit_code_for) */
inline int run_command(const ExperimentSpec &spec) {
  if (spec.config.precision.kind == PrecisionKind::Big) {
    PrecisionGuard guard(spec.config.precision.bits);
    return detail::run_typed<BigFloat>(spec);
  }
  return detail::run_typed<double>(spec);
}

}  // namespace arcmotion

#endif
