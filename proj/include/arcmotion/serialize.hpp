#ifndef ARCMOTION_SERIALIZE_HPP
#define ARCMOTION_SERIALIZE_HPP

/*
 * JSON/CSV export.  All scalars are rendered as full-precision decimal
 * strings (shortest exact form for doubles, round-trip digit count for big
 * floats), object keys keep insertion order, and map-backed collections are
 * walked in key order, so equal inputs serialize to identical bytes.
 */

#include "arcmotion/area.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace arcmotion {

using json = nlohmann::ordered_json;

template <typename S>
json point_json(const Point<S> &p) {
  return json::array({scalar_str(p.x), scalar_str(p.y)});
}

template <typename S>
json circle_json(const Circle<S> &c) {
  return json{{"center", point_json(c.center)}, {"radius", scalar_str(c.radius)}};
}

inline std::string precision_str(const Precision &p) {
  return p.kind == PrecisionKind::Hardware ? "hw" : std::to_string(p.bits);
}

inline Precision precision_from_str(const std::string &s) {
  if (s == "hw" || s == "HW" || s == "hardware") return Precision{PrecisionKind::Hardware, 0};
  const int bits = std::atoi(s.c_str());
  if (bits < 24 || bits > 16384)
    throw Error(ErrorCode::InvalidSpec, "precision must be 'hw' or bits in [24, 16384]");
  return Precision{PrecisionKind::Big, bits};
}

template <typename S>
json config_json(const SproutConfig<S> &cfg) {
  return json{{"h", scalar_str(cfg.h)},           {"eps", scalar_str(cfg.eps)},
              {"n", cfg.n},                       {"R", scalar_str(cfg.R)},
              {"precision", precision_str(cfg.precision)}, {"strict", cfg.strict}};
}

template <typename S>
SproutConfig<S> config_from_json(const json &j) {
  SproutConfig<S> cfg;
  cfg.h = scalar_parse<S>(j.at("h").get<std::string>());
  cfg.eps = scalar_parse<S>(j.at("eps").get<std::string>());
  cfg.n = j.at("n").get<int>();
  cfg.R = scalar_parse<S>(j.at("R").get<std::string>());
  cfg.precision = precision_from_str(j.at("precision").get<std::string>());
  cfg.strict = j.at("strict").get<bool>();
  return cfg;
}

/* dyadic keys render exactly: 3/8 -> "0.375" */
inline std::string dyadic_key(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  double back = 0.0;
  std::sscanf(buf, "%lf", &back);
  if (back == x) {
    char shorter[40];
    for (int digits = 1; digits < 17; ++digits) {
      std::snprintf(shorter, sizeof shorter, "%.*g", digits, x);
      std::sscanf(shorter, "%lf", &back);
      if (back == x) return shorter;
    }
  }
  return buf;
}

template <typename S>
json scene_to_json(const SproutScene<S> &sc) {
  json points;
  points["M"] = point_json(sc.M);
  points["N"] = point_json(sc.N);
  json anchors = json::array();
  for (const auto &pair : sc.A)
    anchors.push_back(json::array({point_json(pair[0]), point_json(pair[1])}));
  points["A"] = anchors;
  json cpoints;
  for (size_t i = 0; i < sc.C.size(); ++i)
    for (size_t k = 0; k < sc.C[i].size(); ++k)
      cpoints[std::to_string(i) + "/" + std::to_string(k)] = point_json(sc.C[i][k]);
  points["C"] = cpoints;

  json k0, k1;
  for (const auto &entry : sc.K0) k0[dyadic_key(entry.first)] = circle_json(entry.second);
  for (const auto &entry : sc.K1) k1[dyadic_key(entry.first)] = circle_json(entry.second);

  return json{{"config", config_json(sc.config)},
              {"points", points},
              {"circles", json{{"K0", k0}, {"K1", k1}}}};
}

template <typename S>
json pose_json(const ArcPose<S> &pose) {
  return json{{"circle", circle_json(pose.arc.circle)},
              {"start_angle", scalar_str(pose.arc.start_angle)},
              {"sweep", scalar_str(pose.arc.sweep)}};
}

template <typename S>
json step_json(const MotionStep<S> &st) {
  json j;
  j["kind"] = st.is_pivot ? "PIVOT" : "SLIDE";
  if (st.is_pivot)
    j["center"] = point_json(st.center);
  else
    j["circle"] = circle_json(st.circle);
  j["angle"] = scalar_str(st.angle);
  j["start_pose"] = pose_json(st.start_pose);
  j["end_pose"] = pose_json(st.end_pose);
  j["swept_bound"] = scalar_str(st.swept_bound);
  return j;
}

template <typename S>
json plan_to_json(const MotionPlan<S> &plan) {
  json steps = json::array();
  for (const auto &st : plan.steps) steps.push_back(step_json(st));
  return json{{"steps", steps}, {"total_swept_bound", scalar_str(plan.total_swept_bound)}};
}

inline json report_to_json(const LemmaReport &rep) {
  json measured, bound;
  for (const auto &kv : rep.measured) measured[kv.first] = kv.second;
  for (const auto &kv : rep.bound) bound[kv.first] = kv.second;
  return json{{"lemma_id", rep.lemma_id},
              {"hypotheses_met", rep.hypotheses_met},
              {"measured", measured},
              {"bound", bound},
              {"pass", rep.pass}};
}

inline json reports_to_json(const std::vector<LemmaReport> &reps) {
  json arr = json::array();
  for (const auto &r : reps) arr.push_back(report_to_json(r));
  return arr;
}

template <typename S>
json estimate_to_json(const AreaEstimate<S> &est) {
  return json{{"value", scalar_str(est.value)},
              {"stderr", scalar_str(est.stderr_value)},
              {"samples", est.samples},
              {"method", area_method_name(est.method)},
              {"seed", est.seed}};
}

template <typename S>
json row_to_json(const ConvergenceRow<S> &row) {
  json j;
  j["n"] = row.n;
  j["area"] = estimate_to_json(row.area);
  j["analytic_bound"] = scalar_str(row.analytic_bound);
  j["runtime_seconds"] = row.runtime_seconds;
  j["construction_ok"] = row.construction_ok;
  if (!row.construction_ok) j["note"] = row.note;
  return j;
}

template <typename S>
json rows_to_json(const std::vector<ConvergenceRow<S>> &rows) {
  json arr = json::array();
  for (const auto &r : rows) arr.push_back(row_to_json(r));
  return arr;
}

template <typename S>
std::string rows_to_csv(const std::vector<ConvergenceRow<S>> &rows) {
  std::string out = "n,area,stderr,samples,analytic_bound,runtime_seconds\n";
  char runtime[40];
  for (const auto &row : rows) {
    out += std::to_string(row.n);
    out += ',';
    if (row.construction_ok) out += scalar_str(row.area.value);
    out += ',';
    if (row.construction_ok) out += scalar_str(row.area.stderr_value);
    out += ',';
    out += std::to_string(row.area.samples);
    out += ',';
    out += scalar_str(row.analytic_bound);
    out += ',';
    std::snprintf(runtime, sizeof runtime, "%.6f", row.runtime_seconds);
    out += runtime;
    out += '\n';
  }
  return out;
}

template <typename S>
json chain_to_json(const std::vector<ChainLink<S>> &links) {
  json arr = json::array();
  for (const auto &link : links) {
    arr.push_back(json{{"circle", circle_json(link.circle)},
                       {"M", point_json(link.M)},
                       {"h", scalar_str(link.h)},
                       {"swept_bound", scalar_str(link.swept_bound)},
                       {"budget_ok", link.budget_ok},
                       {"plan", plan_to_json(link.plan)}});
  }
  return arr;
}

/* write-then-rename so readers never observe a half-written file */
inline void write_text_atomic(const std::string &path, const std::string &content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidSpec, "cannot open output file: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidSpec, "short write: " + tmp.string());
  }
  fs::rename(tmp, target);
}

inline std::string json_text(const json &j) { return j.dump(2) + "\n"; }

}  // namespace arcmotion

#endif
