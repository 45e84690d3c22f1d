#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "tropic/distance.hpp"
#include "tropic/error.hpp"
#include "tropic/solver.hpp"

namespace tropic::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCanvas = 480.0;

struct Point {
  double x;
  double y;
};

using Polygon = std::vector<Point>;

// a*x + b*y + c >= 0
struct HalfPlane {
  double a;
  double b;
  double c;
  double eval(Point p) const { return a * p.x + b * p.y + c; }
};

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point p = poly[i];
    const Point q = poly[(i + 1) % poly.size()];
    const double fp = h.eval(p);
    const double fq = h.eval(q);
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

struct Box {
  double x0 = kInf;
  double y0 = kInf;
  double x1 = -kInf;
  double y1 = -kInf;

  void add(Point p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  Polygon polygon() const { return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Geometry of span(A) for a two-row matrix: the admissible range [lo, hi]
// of y2 - y1 (max-plus) or log(y2 / y1) (max-times).
struct Span {
  double lo = kInf;
  double hi = -kInf;
  bool empty() const { return lo > hi; }
};

class Figure {
 public:
  Figure(Semifield sf, const Box& view) : sf_(sf), view_(view) {
    const double w = view.x1 - view.x0;
    const double h = view.y1 - view.y0;
    scale_ = kCanvas / std::max(w, h);
    width_ = w * scale_;
    height_ = h * scale_;
  }

  double width() const { return width_; }
  double height() const { return height_; }

  std::string px(Point p) const { return fmt((p.x - view_.x0) * scale_) + "," + fmt((view_.y1 - p.y) * scale_); }
  std::string px_x(double x) const { return fmt((x - view_.x0) * scale_); }
  std::string px_y(double y) const { return fmt((view_.y1 - y) * scale_); }

  /// Half-planes cutting the span region out of the plane.
  std::vector<HalfPlane> span_constraints(const Span& s) const {
    std::vector<HalfPlane> hs;
    if (sf_ == Semifield::MaxPlus) {
      if (std::isfinite(s.lo)) hs.push_back({-1, 1, -s.lo});
      if (std::isfinite(s.hi)) hs.push_back({1, -1, s.hi});
    } else {
      hs.push_back({1, 0, 0});
      hs.push_back({0, 1, 0});
      if (std::isfinite(s.lo)) hs.push_back({-std::exp(s.lo), 1, 0});
      if (std::isfinite(s.hi)) hs.push_back({std::exp(s.hi), -1, 0});
    }
    return hs;
  }

  Polygon region(const std::vector<HalfPlane>& hs) const {
    Polygon p = view_.polygon();
    for (const HalfPlane& h : hs) {
      if (p.empty()) break;
      p = clip(p, h);
    }
    return p;
  }

  /// Filled polygon; a region squeezed to a line (or a point) is drawn as a
  /// thick segment instead.
  std::string polygon(const Polygon& raw, const char* cls) const {
    Polygon p;
    for (const Point& q : raw) {
      if (p.empty() || px(p.back()) != px(q)) p.push_back(q);
    }
    while (p.size() > 1 && px(p.front()) == px(p.back())) p.pop_back();
    if (p.empty()) return {};
    double area = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Point a = p[i];
      const Point b = p[(i + 1) % p.size()];
      area += (a.x * b.y - b.x * a.y) * scale_ * scale_;
    }
    if (p.size() < 3 || std::abs(area) < 1.0) {
      std::size_t far = 0;
      double best = -1;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double dist = std::hypot(p[i].x - p[0].x, p[i].y - p[0].y);
        if (dist > best) {
          best = dist;
          far = i;
        }
      }
      return segment(p[0], p[far], (std::string(cls) + "-edge").c_str());
    }
    std::string pts;
    for (std::size_t i = 0; i < p.size(); ++i) pts += (i ? " " : "") + px(p[i]);
    return "  <polygon class=\"" + std::string(cls) + "\" points=\"" + pts + "\"/>\n";
  }

  std::string segment(Point a, Point b, const char* cls) const {
    return "  <line class=\"" + std::string(cls) + "\" x1=\"" + px_x(a.x) + "\" y1=\"" + px_y(a.y) +
           "\" x2=\"" + px_x(b.x) + "\" y2=\"" + px_y(b.y) + "\"/>\n";
  }

  std::string marker(Point p, const char* cls, const std::string& label) const {
    return "  <circle class=\"" + std::string(cls) + "\" cx=\"" + px_x(p.x) + "\" cy=\"" + px_y(p.y) +
           "\" r=\"4\"/>\n  <text x=\"" + fmt((p.x - view_.x0) * scale_ + 6) + "\" y=\"" +
           fmt((view_.y1 - p.y) * scale_ - 6) + "\">" + escape(label) + "</text>\n";
  }

 private:
  Semifield sf_;
  Box view_;
  double scale_;
  double width_;
  double height_;
};

// Zero is -inf in max-plus and so has no position; in max-times it sits on an axis.
std::optional<Point> plottable(double y1, double y2) {
  if (std::isinf(y1) || std::isinf(y2)) return std::nullopt;
  return Point{y1, y2};
}

std::optional<Point> plottable(const Vector& v) { return plottable(v[0], v[1]); }

std::string delta_label(const Scalar& delta, double tolerance) {
  if (distance::is_one(delta, tolerance)) return "Δ = 𝟙";
  if (delta.is_top()) return "Δ = ∞";
  return "Δ = " + format_number(delta.value());
}

}  // namespace

std::string render_svg(std::string_view command, const ProblemDocument& doc, double tolerance) {
  const Semifield sf = doc.semifield;
  if (sf != Semifield::MaxPlus && sf != Semifield::MaxTimes) {
    throw CliError(ExitCode::UnsupportedPlot,
                   "plots are available for max-plus and max-times only, not " + std::string(to_string(sf)));
  }
  if (doc.a.size() != 2) {
    throw CliError(ExitCode::UnsupportedPlot,
                   "plots need exactly 2 rows, the instance has " + std::to_string(doc.a.size()));
  }
  const Matrix a = doc.matrix_a();
  const bool extended = command == "extended";

  Span span;
  std::vector<std::pair<std::size_t, Point>> generators;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.column_is_zero(j)) continue;
    const double diff = carrier::to_additive(sf, a(1, j)) - carrier::to_additive(sf, a(0, j));
    span.lo = std::min(span.lo, diff);
    span.hi = std::max(span.hi, diff);
    if (auto p = plottable(a(0, j), a(1, j))) generators.emplace_back(j, *p);
  }

  Box box;
  if (sf == Semifield::MaxTimes) box.add({0, 0});
  for (const auto& g : generators) box.add(g.second);

  std::optional<Point> d_pt, y_star, y1, y2, b_pt;
  std::optional<Scalar> delta;
  if (doc.d) {
    const Vector d = doc.vector_d();
    d_pt = plottable(d);
    const auto r = distance::nearest_point(a, d);
    delta = r.delta;
    if (r.nearest_y && !distance::is_one(r.delta, tolerance)) {
      y_star = plottable(*r.nearest_y);
      y1 = plottable(distance::project_below(a, d).y);
      y2 = plottable(distance::project_above(a, d).y);
    }
  }
  std::optional<Scalar> delta1;
  if (extended && doc.b) {
    b_pt = plottable(doc.vector_b());
    if (doc.d) {
      solver::SolveOptions options;
      options.tolerance = tolerance;
      const auto sol = solver::solve_extended(a, doc.vector_b(), doc.vector_d(), options);
      if (sol.split) delta1 = sol.delta1;
    }
  }
  for (const auto& p : {d_pt, y_star, y1, y2, b_pt}) {
    if (p) box.add(*p);
  }
  if (box.x0 > box.x1) box.add({0, 0});
  for (double* lo : {&box.x0, &box.y0}) {
    double* hi = lo == &box.x0 ? &box.x1 : &box.y1;
    if (*hi - *lo < 1e-9) {
      *lo -= 0.5;
      *hi += 0.5;
    }
    const double margin = 0.1 * (*hi - *lo);
    *lo -= margin;
    *hi += margin;
  }

  const Figure fig(sf, box);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(fig.width())
     << "\" height=\"" << fmt(fig.height()) << "\" viewBox=\"0 0 " << fmt(fig.width()) << " "
     << fmt(fig.height()) << "\">\n"
     << "  <title>tropic " << escape(std::string(command)) << " (" << to_string(sf) << ")</title>\n"
     << "  <style>\n"
     << "    .span { fill: #9ecae1; fill-opacity: 0.5; stroke: #3182bd; stroke-width: 1; }\n"
     << "    .reach { fill: #fdae6b; fill-opacity: 0.6; stroke: #e6550d; stroke-width: 1; }\n"
     << "    .span-edge { stroke: #3182bd; stroke-width: 3; }\n"
     << "    .reach-edge { stroke: #e6550d; stroke-width: 3; }\n"
     << "    .axis { stroke: #969696; stroke-width: 1; }\n"
     << "    .gap { stroke: #636363; stroke-width: 1; stroke-dasharray: 4 3; }\n"
     << "    .gen { fill: #3182bd; }\n"
     << "    .target { fill: #de2d26; }\n"
     << "    .nearest { fill: #31a354; }\n"
     << "    .proj { fill: #756bb1; }\n"
     << "    .offset { fill: #e6550d; }\n"
     << "    text { font-family: sans-serif; font-size: 12px; }\n"
     << "  </style>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(fig.width()) << "\" height=\"" << fmt(fig.height())
     << "\" fill=\"white\" stroke=\"black\"/>\n";

  if (box.x0 < 0 && box.x1 > 0) os << fig.segment({0, box.y0}, {0, box.y1}, "axis");
  if (box.y0 < 0 && box.y1 > 0) os << fig.segment({box.x0, 0}, {box.x1, 0}, "axis");

  std::vector<HalfPlane> span_hs;
  if (!span.empty()) {
    span_hs = fig.span_constraints(span);
    os << fig.polygon(fig.region(span_hs), "span");
  }

  if (extended && b_pt && !span.empty()) {
    // Ax (+) b: points of the span above b, plus the vertical and horizontal
    // pieces through b reached by points below b in one coordinate.
    std::vector<HalfPlane> hs = span_hs;
    hs.push_back({1, 0, -b_pt->x});
    hs.push_back({0, 1, -b_pt->y});
    os << fig.polygon(fig.region(hs), "reach");
    const bool times = sf == Semifield::MaxTimes;
    const double up = times ? (std::isfinite(span.hi) ? std::exp(span.hi) * b_pt->x : kInf)
                            : b_pt->x + span.hi;
    const double right = times ? (std::isfinite(span.lo) ? b_pt->y / std::exp(span.lo) : kInf)
                               : b_pt->y - span.lo;
    const double top = std::min(up, box.y1);
    const double far = std::min(right, box.x1);
    if (top >= b_pt->y) os << fig.segment(*b_pt, {b_pt->x, top}, "reach-edge");
    if (far >= b_pt->x) os << fig.segment(*b_pt, {far, b_pt->y}, "reach-edge");
  }

  if (d_pt && y_star) os << fig.segment(*d_pt, *y_star, "gap");
  for (const auto& [j, p] : generators) os << fig.marker(p, "gen", "a" + std::to_string(j + 1));
  if (y1) os << fig.marker(*y1, "proj", "y1");
  if (y2) os << fig.marker(*y2, "proj", "y2");
  if (y_star) os << fig.marker(*y_star, "nearest", "y*");
  if (b_pt) os << fig.marker(*b_pt, "offset", "b");
  if (d_pt) os << fig.marker(*d_pt, "target", "d");
  if (delta) {
    os << "  <text x=\"8\" y=\"18\">" << escape(delta_label(*delta, tolerance)) << "</text>\n";
  }
  if (delta1) {
    std::string label = delta_label(*delta1, tolerance);
    label.replace(0, std::string("Δ").size(), "Δ1");
    os << "  <text x=\"8\" y=\"34\">" << escape(label) << "</text>\n";
  }
  os << "  <text x=\"8\" y=\"" << fmt(fig.height() - 8) << "\">[" << fmt(box.x0) << ", " << fmt(box.x1)
     << "] x [" << fmt(box.y0) << ", " << fmt(box.y1) << "]</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropic::cli
