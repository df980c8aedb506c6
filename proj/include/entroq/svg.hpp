#pragma once

#include <string>
#include <utility>
#include <vector>

// Dependency-free SVG line chart: fixed viewBox, linear axes, one polyline
// per series with per-series stroke style.
namespace entroq::svg {

// Stroke dash patterns, mirroring the usual print conventions.
enum class Stroke { solid, dashed, dotted, dash_dot };

const char* dash_array(Stroke stroke);  // "" for solid

struct Series {
  std::string label;
  Stroke stroke;
  std::vector<std::pair<double, double>> points;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
};

// Renders a complete standalone SVG document (720x480 viewBox, 4-5 ticks per
// axis, legend from series labels). Deterministic: same input, same bytes.
std::string render_chart(const ChartSpec& spec,
                         const std::vector<Series>& series);

}  // namespace entroq::svg
