#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "entroq/analysis.hpp"
#include "entroq/svg.hpp"

// Figure presets, CSV/SVG serialization, and the JSON run report.
namespace entroq {

// q range for the F''-vs-q figures: wide enough to show the full sign
// structure (both zeros of the sigma curve at delta = pi/4 included).
inline constexpr double dd_q_min = 0.5;
inline constexpr double dd_q_max = 3.5;

struct FigurePreset {
  enum class Mode { theta_sweep, dd_vs_q };

  int id;
  Mode mode;
  FunctionalKind kind;           // theta_sweep only
  double delta;
  std::vector<double> q_values;  // one series per q (theta_sweep)
  std::vector<svg::Stroke> strokes;
};

// Presets 1-10. Throws std::invalid_argument on unknown id.
FigurePreset figure_preset(int id);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

std::vector<double> dd_q_grid(int n_points);

// CSV bodies (header row, LF endings, no trailing delimiter).
std::string sweep_csv(const Curve& curve);                       // theta,value
std::string figure_csv(const FigurePreset& preset, int n_points);
std::string figure_svg(const FigurePreset& preset, int n_points);

// Single top-level report object: command echo, configuration, results,
// version, timestamp.
nlohmann::json run_report(const std::string& command,
                          nlohmann::json arguments, nlohmann::json config,
                          nlohmann::json results);

nlohmann::json crossing_json(const CrossingResult& result);
nlohmann::json extrema_json(const ExtremaReport& report);
nlohmann::json exchange_json(const std::vector<ExchangeRow>& rows);

}  // namespace entroq
