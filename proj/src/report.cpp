#include "entroq/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ctime>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "entroq/version.hpp"

namespace entroq {

namespace {

constexpr double quarter_pi = std::numbers::pi / 4;

std::string delta_label(double delta) {
  return delta == quarter_pi ? "pi/4" : format_double(delta);
}

std::string series_name(double q) { return "q=" + format_double(q); }

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

FigurePreset figure_preset(int id) {
  using Mode = FigurePreset::Mode;
  using svg::Stroke;
  const double d7 = 0.7;
  // The per-q stroke styles follow the usual print conventions for these
  // chart families; the dd-mode charts always order series pi, u, sigma.
  switch (id) {
    case 1:
      return {1, Mode::theta_sweep, FunctionalKind::pi, quarter_pi,
              {0.5, 1.0, 2.0, 3.0},
              {Stroke::dashed, Stroke::solid, Stroke::dotted,
               Stroke::dash_dot}};
    case 2:
      return {2, Mode::theta_sweep, FunctionalKind::u, quarter_pi,
              {1.0, 1.5, 2.0},
              {Stroke::solid, Stroke::dashed, Stroke::dotted}};
    case 3:
      return {3, Mode::theta_sweep, FunctionalKind::sigma, quarter_pi,
              {1.8, 2.0, 2.5},
              {Stroke::solid, Stroke::dashed, Stroke::dotted}};
    case 4:
      return {4, Mode::dd_vs_q, FunctionalKind::sigma, quarter_pi, {},
              {Stroke::solid, Stroke::dashed, Stroke::dotted}};
    case 5:
      return {5, Mode::theta_sweep, FunctionalKind::pi, d7,
              {0.5, 1.0, 1.5},
              {Stroke::dashed, Stroke::solid, Stroke::dotted}};
    case 6:
      return {6, Mode::theta_sweep, FunctionalKind::u, d7,
              {0.8, 1.0, 1.5, 2.0},
              {Stroke::solid, Stroke::dashed, Stroke::dotted,
               Stroke::dash_dot}};
    case 7:
      return {7, Mode::theta_sweep, FunctionalKind::sigma, d7,
              {0.5, 1.0, 1.5, 2.0},
              {Stroke::solid, Stroke::dashed, Stroke::dotted,
               Stroke::dash_dot}};
    case 8:
      return {8, Mode::dd_vs_q, FunctionalKind::sigma, d7, {},
              {Stroke::solid, Stroke::dashed, Stroke::dotted}};
    case 9:
      return {9, Mode::theta_sweep, FunctionalKind::pi, d7,
              {2.0, 3.0},
              {Stroke::dashed, Stroke::solid}};
    case 10:
      return {10, Mode::theta_sweep, FunctionalKind::u, d7,
              {2.0, 3.0},
              {Stroke::dashed, Stroke::solid}};
    default:
      throw std::invalid_argument("figure id must be in 1..10");
  }
}

std::string format_double(double value) {
  std::array<char, 32> buf;
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::vector<double> dd_q_grid(int n_points) {
  if (n_points < 3)
    throw std::invalid_argument("q grid needs at least 3 points");
  std::vector<double> grid;
  grid.reserve(n_points);
  for (int i = 0; i < n_points; ++i)
    grid.push_back(dd_q_min +
                   i * (dd_q_max - dd_q_min) / (n_points - 1));
  return grid;
}

std::string sweep_csv(const Curve& curve) {
  std::string out = curve.parameter_name + ",value\n";
  for (const auto& [x, y] : curve.samples)
    out += format_double(x) + "," + format_double(y) + "\n";
  return out;
}

std::string figure_csv(const FigurePreset& preset, int n_points) {
  const ObservablePair pair(preset.delta);
  std::string out;
  if (preset.mode == FigurePreset::Mode::theta_sweep) {
    std::vector<Curve> curves;
    curves.reserve(preset.q_values.size());
    out = "theta";
    for (double q : preset.q_values) {
      out += "," + series_name(q);
      curves.push_back(sweep_theta({preset.kind, EntropicOrder(q)}, pair,
                                   n_points));
    }
    out += "\n";
    for (int i = 0; i < n_points; ++i) {
      out += format_double(curves.front().samples[i].first);
      for (const Curve& c : curves)
        out += "," + format_double(c.samples[i].second);
      out += "\n";
    }
  } else {
    const std::vector<double> grid = dd_q_grid(n_points);
    const Curve pi_c = dd_vs_q(FunctionalKind::pi, pair, grid);
    const Curve u_c = dd_vs_q(FunctionalKind::u, pair, grid);
    const Curve sig_c = dd_vs_q(FunctionalKind::sigma, pair, grid);
    out = "q,pi,u,sigma\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      out += format_double(grid[i]) + "," +
             format_double(pi_c.samples[i].second) + "," +
             format_double(u_c.samples[i].second) + "," +
             format_double(sig_c.samples[i].second) + "\n";
    }
  }
  return out;
}

std::string figure_svg(const FigurePreset& preset, int n_points) {
  const ObservablePair pair(preset.delta);
  svg::ChartSpec chart;
  std::vector<svg::Series> series;
  if (preset.mode == FigurePreset::Mode::theta_sweep) {
    chart.title = std::string(to_string(preset.kind)) + " vs theta, delta=" +
                  delta_label(preset.delta);
    chart.x_label = "theta";
    chart.y_label = to_string(preset.kind);
    for (std::size_t i = 0; i < preset.q_values.size(); ++i) {
      const double q = preset.q_values[i];
      const Curve c = sweep_theta({preset.kind, EntropicOrder(q)}, pair,
                                  n_points);
      series.push_back({series_name(q), preset.strokes[i], c.samples});
    }
  } else {
    chart.title = "F'' at theta=delta/2 vs q, delta=" +
                  delta_label(preset.delta);
    chart.x_label = "q";
    chart.y_label = "F''";
    const std::vector<double> grid = dd_q_grid(n_points);
    const FunctionalKind kinds[] = {FunctionalKind::pi, FunctionalKind::u,
                                    FunctionalKind::sigma};
    for (std::size_t i = 0; i < 3; ++i) {
      const Curve c = dd_vs_q(kinds[i], pair, grid);
      series.push_back({to_string(kinds[i]), preset.strokes[i], c.samples});
    }
  }
  return svg::render_chart(chart, series);
}

nlohmann::json run_report(const std::string& command,
                          nlohmann::json arguments, nlohmann::json config,
                          nlohmann::json results) {
  return nlohmann::json{{"command", command},
                        {"arguments", std::move(arguments)},
                        {"config", std::move(config)},
                        {"results", std::move(results)},
                        {"version", version},
                        {"timestamp", timestamp_utc()}};
}

nlohmann::json crossing_json(const CrossingResult& result) {
  return nlohmann::json{{"q_star", result.q_star}, {"q_lo", result.q_lo},
                        {"q_hi", result.q_hi},     {"f_lo", result.f_lo},
                        {"f_hi", result.f_hi},
                        {"iterations", result.iterations}};
}

nlohmann::json extrema_json(const ExtremaReport& report) {
  nlohmann::json extrema = nlohmann::json::array();
  for (const Extremum& e : report.extrema) {
    nlohmann::json item{{"theta", e.theta},
                        {"value", e.value},
                        {"type", to_string(e.type)}};
    if (e.candidate)
      item["candidate"] = to_string(*e.candidate);
    else
      item["candidate"] = nullptr;
    extrema.push_back(std::move(item));
  }
  return nlohmann::json{{"degenerate_flat", report.degenerate_flat},
                        {"has_ties", report.has_ties},
                        {"extrema", std::move(extrema)}};
}

nlohmann::json exchange_json(const std::vector<ExchangeRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ExchangeRow& row : rows) {
    nlohmann::json candidates = nlohmann::json::array();
    for (const auto& [candidate, type] : row.entries) {
      nlohmann::json item{{"label", to_string(candidate.label)},
                          {"theta", candidate.theta},
                          {"coincident", candidate.coincident}};
      if (type)
        item["extremum"] = to_string(*type);
      else
        item["extremum"] = nullptr;
      candidates.push_back(std::move(item));
    }
    out.push_back(nlohmann::json{{"q", row.q},
                                 {"degenerate_flat", row.degenerate_flat},
                                 {"candidates", std::move(candidates)}});
  }
  return out;
}

}  // namespace entroq
