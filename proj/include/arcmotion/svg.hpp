#ifndef ARCMOTION_SVG_HPP
#define ARCMOTION_SVG_HPP

/*
 * Minimal SVG renderer for scenes and motion frames.  Output is a single
 * self-contained file: fixed 900x900 canvas, world box fitted around either
 * the whole construction or, for hairline configurations, a tip close-up
 * anchored at M, plus a scale bar so zoom levels stay readable.
 */

#include "arcmotion/motion.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>

namespace arcmotion {

class SvgCanvas {
 public:
  SvgCanvas(double cx, double cy, double half_width) : cx_(cx), cy_(cy), half_(half_width) {}

  double scale() const { return size_ / (2.0 * half_); }

  void line(double x0, double y0, double x1, double y1, const char *stroke, double width) {
    append("<line x1='%.2f' y1='%.2f' x2='%.2f' y2='%.2f' stroke='%s' stroke-width='%.2f'/>\n",
           sx(x0), sy(y0), sx(x1), sy(y1), stroke, width);
  }

  void circle(double x, double y, double r, const char *stroke, double width, bool dashed = false) {
    append("<circle cx='%.2f' cy='%.2f' r='%.2f' fill='none' stroke='%s' stroke-width='%.2f'%s/>\n",
           sx(x), sy(y), r * scale(), stroke, width, dashed ? " stroke-dasharray='6 5'" : "");
  }

  void dot(double x, double y, double px, const char *fill) {
    append("<circle cx='%.2f' cy='%.2f' r='%.2f' fill='%s'/>\n", sx(x), sy(y), px, fill);
  }

  void arc(double cx, double cy, double r, double a0, double sweep, const char *stroke,
           double width) {
    if (std::abs(sweep) < 1e-12) return;
    const double x0 = cx + r * std::cos(a0), y0 = cy + r * std::sin(a0);
    const double x1 = cx + r * std::cos(a0 + sweep), y1 = cy + r * std::sin(a0 + sweep);
    const double pi = 3.14159265358979323846;
    if (std::abs(sweep) >= 2.0 * pi - 1e-9) {
      circle(cx, cy, r, stroke, width);
      return;
    }
    const int laf = std::abs(sweep) > pi ? 1 : 0;
    const int sf = sweep > 0 ? 0 : 1; /* world CCW renders CCW with the flipped y axis */
    append("<path d='M %.3f %.3f A %.3f %.3f 0 %d %d %.3f %.3f' fill='none' stroke='%s' "
           "stroke-width='%.2f'/>\n",
           sx(x0), sy(y0), r * scale(), r * scale(), laf, sf, sx(x1), sy(y1), stroke, width);
  }

  void label(double x, double y, const std::string &text, const char *fill = "#333") {
    append("<text x='%.2f' y='%.2f' font-size='13' font-family='monospace' fill='%s'>%s</text>\n",
           sx(x), sy(y), fill, text.c_str());
  }

  void label_px(double px, double py, const std::string &text, const char *fill = "#333") {
    append("<text x='%.2f' y='%.2f' font-size='13' font-family='monospace' fill='%s'>%s</text>\n",
           px, py, fill, text.c_str());
  }

  void scale_bar() {
    double unit = std::pow(10.0, std::floor(std::log10(half_)));
    const double mult[3] = {1.0, 2.0, 5.0};
    double best = unit / 10.0;
    for (int e = -1; e <= 1; ++e)
      for (double m : mult) {
        const double candidate = unit * std::pow(10.0, e) * m;
        if (candidate * scale() >= 70.0 && candidate * scale() <= 360.0) {
          best = candidate;
          break;
        }
      }
    const double px0 = 30.0, py = size_ - 30.0;
    const double px1 = px0 + best * scale();
    append("<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f' stroke='#000' stroke-width='2'/>\n", px0,
           py, px1, py);
    append("<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f' stroke='#000' stroke-width='2'/>\n", px0,
           py - 5, px0, py + 5);
    append("<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f' stroke='#000' stroke-width='2'/>\n", px1,
           py - 5, px1, py + 5);
    char text[48];
    std::snprintf(text, sizeof text, "%g", best);
    label_px(px0, py - 10.0, text);
  }

  std::string finish() const {
    char head[256];
    std::snprintf(head, sizeof head,
                  "<svg xmlns='http://www.w3.org/2000/svg' width='%d' height='%d' "
                  "viewBox='0 0 %d %d'>\n<rect width='%d' height='%d' fill='white'/>\n",
                  size_, size_, size_, size_, size_, size_);
    return std::string(head) + body_ + "</svg>\n";
  }

 private:
  double sx(double x) const { return (x - cx_) * scale() + size_ / 2.0; }
  double sy(double y) const { return size_ / 2.0 - (y - cy_) * scale(); }

  void append(const char *fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    body_ += buf;
  }

  double cx_, cy_, half_;
  int size_ = 900;
  std::string body_;
};

namespace detail {

template <typename S>
void draw_arc(SvgCanvas &canvas, const DirectedArc<S> &arc, const char *stroke, double width) {
  canvas.arc(scalar_to_double(arc.circle.center.x), scalar_to_double(arc.circle.center.y),
             scalar_to_double(arc.circle.radius), scalar_to_double(arc.start_angle),
             scalar_to_double(arc.sweep), stroke, width);
}

/* close-up half-width: the construction's fine structure sits within a few
 * eps of M, so hairline configurations zoom to the tip */
template <typename S>
double view_half_width(const SproutConfig<S> &cfg) {
  const double eps = scalar_to_double(cfg.eps);
  return eps < 1e-3 ? 2.5 * eps : 2.4;
}

}  // namespace detail

template <typename S>
std::string scene_svg(const SproutScene<S> &sc) {
  const double eps = scalar_to_double(sc.config.eps);
  const double half = detail::view_half_width(sc.config);
  const bool closeup = half < 1.0;
  const double mx = scalar_to_double(sc.M.x), my = scalar_to_double(sc.M.y);
  SvgCanvas canvas(mx, closeup ? my : my - 1.0, half);

  for (const auto &entry : sc.K0)
    canvas.circle(scalar_to_double(entry.second.center.x), scalar_to_double(entry.second.center.y),
                  scalar_to_double(entry.second.radius), "#9db7d2", 0.8);
  for (const auto &entry : sc.K1)
    canvas.circle(scalar_to_double(entry.second.center.x), scalar_to_double(entry.second.center.y),
                  scalar_to_double(entry.second.radius), "#d2a59d", 0.8);
  canvas.circle(scalar_to_double(sc.O0.x), scalar_to_double(sc.O0.y), 1.0, "#1f4e8c", 1.6);
  canvas.circle(scalar_to_double(sc.O1.x), scalar_to_double(sc.O1.y), 1.0, "#8c2f1f", 1.6);
  canvas.circle(mx, my, eps, "#666666", 1.0, true);
  for (int i = 1; i <= sc.config.n; ++i)
    canvas.circle(mx, my, scalar_to_double(sc.ring_radius(i)), "#bbbbbb", 0.6, true);

  detail::draw_arc(canvas, sc.tip_arc(), "#111111", 2.0);
  for (const auto &row : sc.C)
    for (const auto &p : row)
      canvas.dot(scalar_to_double(p.x), scalar_to_double(p.y), 2.4, "#222222");
  for (const auto &pair : sc.A) {
    canvas.dot(scalar_to_double(pair[0].x), scalar_to_double(pair[0].y), 2.4, "#1f4e8c");
    canvas.dot(scalar_to_double(pair[1].x), scalar_to_double(pair[1].y), 2.4, "#8c2f1f");
  }
  canvas.dot(mx, my, 3.0, "#000000");
  canvas.label(mx, my, "  M");
  canvas.dot(scalar_to_double(sc.N.x), scalar_to_double(sc.N.y), 3.0, "#000000");
  if (!closeup) canvas.label(scalar_to_double(sc.N.x), scalar_to_double(sc.N.y), "  N");
  canvas.scale_bar();
  return canvas.finish();
}

template <typename S>
std::string frame_svg(const SproutScene<S> &sc, const MotionPlan<S> &plan, double t) {
  const double mx = scalar_to_double(sc.M.x), my = scalar_to_double(sc.M.y);
  SvgCanvas canvas(mx, my - 1.0, 2.4);

  for (const auto &entry : sc.K0)
    canvas.circle(scalar_to_double(entry.second.center.x), scalar_to_double(entry.second.center.y),
                  scalar_to_double(entry.second.radius), "#d8e2ee", 0.7);
  for (const auto &entry : sc.K1)
    canvas.circle(scalar_to_double(entry.second.center.x), scalar_to_double(entry.second.center.y),
                  scalar_to_double(entry.second.radius), "#eedcd8", 0.7);

  const ArcPose<S> pose = pose_at(plan, scalar_from_double<S>(t));
  canvas.circle(scalar_to_double(pose.arc.circle.center.x),
                scalar_to_double(pose.arc.circle.center.y),
                scalar_to_double(pose.arc.circle.radius), "#888888", 1.0, true);
  detail::draw_arc(canvas, pose.arc, "#c01818", 3.0);
  canvas.dot(scalar_to_double(pose.start_point().x), scalar_to_double(pose.start_point().y), 3.0,
             "#c01818");
  canvas.dot(mx, my, 2.6, "#000000");
  canvas.label(mx, my, "  M");
  char caption[48];
  std::snprintf(caption, sizeof caption, "t = %.4f", t);
  canvas.label_px(30.0, 40.0, caption);
  canvas.scale_bar();
  return canvas.finish();
}

}  // namespace arcmotion

#endif
