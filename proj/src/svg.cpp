#include "entroq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace entroq::svg {

namespace {

constexpr double width = 720.0, height = 480.0;
constexpr double margin_left = 70.0, margin_right = 20.0;
constexpr double margin_top = 40.0, margin_bottom = 50.0;
constexpr int n_ticks = 5;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Avoid a zero-height band (flat series still need a visible axis range).
  void widen(double pad_fraction) {
    if (!(lo <= hi)) { lo = 0.0; hi = 1.0; return; }
    double pad = (hi - lo) * pad_fraction;
    if (pad == 0.0) pad = 0.5;
    lo -= pad;
    hi += pad;
  }
};

}  // namespace

const char* dash_array(Stroke stroke) {
  switch (stroke) {
    case Stroke::solid: return "";
    case Stroke::dashed: return "8 5";
    case Stroke::dotted: return "2 4";
    case Stroke::dash_dot: return "9 4 2 4";
  }
  return "";
}

std::string render_chart(const ChartSpec& spec,
                         const std::vector<Series>& series) {
  Range xr, yr;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points)
      if (std::isfinite(x) && std::isfinite(y)) {
        xr.include(x);
        yr.include(y);
      }
  xr.widen(0.0);
  yr.widen(0.05);
  if (xr.hi == xr.lo) { xr.lo -= 0.5; xr.hi += 0.5; }

  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;
  const auto sx = [&](double x) {
    return margin_left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto sy = [&](double y) {
    return margin_top + (yr.hi - y) / (yr.hi - yr.lo) * plot_h;
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
         "height=\"480\" viewBox=\"0 0 720 480\" "
         "font-family=\"Helvetica, Arial, sans-serif\">\n"
      << "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";

  out << "<text x=\"" << px(width / 2) << "\" y=\"22\" font-size=\"16\" "
         "text-anchor=\"middle\">"
      << escape(spec.title) << "</text>\n";

  // Grid lines and tick labels.
  for (int i = 0; i < n_ticks; ++i) {
    const double xv = xr.lo + i * (xr.hi - xr.lo) / (n_ticks - 1);
    const double yv = yr.lo + i * (yr.hi - yr.lo) / (n_ticks - 1);
    const std::string gx = px(sx(xv)), gy = px(sy(yv));
    out << "<line x1=\"" << gx << "\" y1=\"" << px(margin_top) << "\" x2=\""
        << gx << "\" y2=\"" << px(height - margin_bottom)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << px(margin_left) << "\" y1=\"" << gy << "\" x2=\""
        << px(width - margin_right) << "\" y2=\"" << gy
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << gx << "\" y=\""
        << px(height - margin_bottom + 18)
        << "\" font-size=\"12\" text-anchor=\"middle\">"
        << escape(tick_label(xv)) << "</text>\n";
    out << "<text x=\"" << px(margin_left - 8) << "\" y=\""
        << px(sy(yv) + 4) << "\" font-size=\"12\" text-anchor=\"end\">"
        << escape(tick_label(yv)) << "</text>\n";
  }

  // Axes frame.
  out << "<rect x=\"" << px(margin_left) << "\" y=\"" << px(margin_top)
      << "\" width=\"" << px(plot_w) << "\" height=\"" << px(plot_h)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // Axis labels.
  out << "<text x=\"" << px(margin_left + plot_w / 2) << "\" y=\""
      << px(height - 10)
      << "\" font-size=\"14\" text-anchor=\"middle\">"
      << escape(spec.x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << px(margin_top + plot_h / 2)
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 "
      << px(margin_top + plot_h / 2) << ")\">" << escape(spec.y_label)
      << "</text>\n";

  for (const Series& s : series) {
    out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
    const char* dash = dash_array(s.stroke);
    if (*dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << " points=\"";
    bool first = true;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (!first) out << ' ';
      out << px(sx(x)) << ',' << px(sy(y));
      first = false;
    }
    out << "\"/>\n";
  }

  // Legend, top-right corner of the plot area.
  const double lx = width - margin_right - 140;
  double ly = margin_top + 16;
  for (const Series& s : series) {
    out << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly - 4) << "\" x2=\""
        << px(lx + 24) << "\" y2=\"" << px(ly - 4)
        << "\" stroke=\"black\" stroke-width=\"1.5\"";
    const char* dash = dash_array(s.stroke);
    if (*dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
    out << "<text x=\"" << px(lx + 30) << "\" y=\"" << px(ly)
        << "\" font-size=\"12\">" << escape(s.label) << "</text>\n";
    ly += 18;
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace entroq::svg
