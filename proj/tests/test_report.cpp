#include <stdexcept>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "entroq/report.hpp"
#include "entroq/version.hpp"

using namespace entroq;
using nlohmann::json;

namespace {

constexpr double pi_v = std::numbers::pi;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// header + numeric rows, split on LF / comma
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table parse_csv(const std::string& text) {
  Table table;
  const std::vector<std::string> lines = split(text, '\n');
  REQUIRE(!lines.empty());
  table.header = split(lines[0], ',');
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<double> row;
    for (const std::string& cell : split(lines[i], ','))
      row.push_back(std::stod(cell));
    REQUIRE(row.size() == table.header.size());
    table.rows.push_back(row);
  }
  return table;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

void check_preset(int id, FigurePreset::Mode mode, FunctionalKind kind,
                  double delta, const std::vector<double>& q_values,
                  const std::vector<svg::Stroke>& strokes) {
  const FigurePreset preset = figure_preset(id);
  CHECK(preset.id == id);
  CHECK(preset.mode == mode);
  if (mode == FigurePreset::Mode::theta_sweep) CHECK(preset.kind == kind);
  CHECK(preset.delta == doctest::Approx(delta).epsilon(1e-15));
  CHECK(preset.q_values == q_values);
  CHECK(preset.strokes == strokes);
}

}  // namespace

TEST_SUITE_BEGIN("cli_report");

TEST_CASE("figure presets are pinned") {
  using Mode = FigurePreset::Mode;
  using svg::Stroke;
  check_preset(1, Mode::theta_sweep, FunctionalKind::pi, pi_v / 4,
               {0.5, 1.0, 2.0, 3.0},
               {Stroke::dashed, Stroke::solid, Stroke::dotted,
                Stroke::dash_dot});
  check_preset(2, Mode::theta_sweep, FunctionalKind::u, pi_v / 4,
               {1.0, 1.5, 2.0},
               {Stroke::solid, Stroke::dashed, Stroke::dotted});
  check_preset(3, Mode::theta_sweep, FunctionalKind::sigma, pi_v / 4,
               {1.8, 2.0, 2.5},
               {Stroke::solid, Stroke::dashed, Stroke::dotted});
  check_preset(4, Mode::dd_vs_q, FunctionalKind::sigma, pi_v / 4, {},
               {Stroke::solid, Stroke::dashed, Stroke::dotted});
  check_preset(5, Mode::theta_sweep, FunctionalKind::pi, 0.7, {0.5, 1.0, 1.5},
               {Stroke::dashed, Stroke::solid, Stroke::dotted});
  check_preset(6, Mode::theta_sweep, FunctionalKind::u, 0.7,
               {0.8, 1.0, 1.5, 2.0},
               {Stroke::solid, Stroke::dashed, Stroke::dotted,
                Stroke::dash_dot});
  check_preset(7, Mode::theta_sweep, FunctionalKind::sigma, 0.7,
               {0.5, 1.0, 1.5, 2.0},
               {Stroke::solid, Stroke::dashed, Stroke::dotted,
                Stroke::dash_dot});
  check_preset(8, Mode::dd_vs_q, FunctionalKind::sigma, 0.7, {},
               {Stroke::solid, Stroke::dashed, Stroke::dotted});
  check_preset(9, Mode::theta_sweep, FunctionalKind::pi, 0.7, {2.0, 3.0},
               {Stroke::dashed, Stroke::solid});
  check_preset(10, Mode::theta_sweep, FunctionalKind::u, 0.7, {2.0, 3.0},
               {Stroke::dashed, Stroke::solid});
  CHECK_THROWS_AS(figure_preset(0), std::invalid_argument);
  CHECK_THROWS_AS(figure_preset(11), std::invalid_argument);
}

TEST_CASE("format_double is shortest and round-trips") {
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.25) == "-1.25");
  for (double v : {pi_v, 1.0 / 3.0, 0.1, 1e-9, -2.5e17, 0.6786324023685925})
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("dd grid spans the preset q range") {
  const std::vector<double> grid = dd_q_grid(7);
  REQUIRE(grid.size() == 7);
  for (int i = 0; i < 7; ++i) CHECK(grid[i] == 0.5 + 0.5 * i);
  CHECK_THROWS_AS(dd_q_grid(2), std::invalid_argument);
}

TEST_CASE("sweep_csv emits the documented layout") {
  Curve curve;
  curve.parameter_name = "theta";
  curve.samples = {{0.0, 2.0}, {0.5, 1.25}};
  CHECK(sweep_csv(curve) == "theta,value\n0,2\n0.5,1.25\n");
}

TEST_CASE("theta-sweep figure CSV: columns, values, determinism") {
  const FigurePreset preset = figure_preset(3);
  const std::string text = figure_csv(preset, 101);
  CHECK(count_occurrences(text, "\n") == 102);
  CHECK(text.find('\r') == std::string::npos);
  const Table table = parse_csv(text);
  REQUIRE(table.header ==
          std::vector<std::string>{"theta", "q=1.8", "q=2", "q=2.5"});
  REQUIRE(table.rows.size() == 101);
  for (const auto& row : table.rows) CHECK(std::abs(row[2] - 0.5) <= 1e-12);
  CHECK(figure_csv(preset, 101) == text);  // same input, same bytes
}

TEST_CASE("curvature-vs-q figure CSV carries the sign exchange") {
  const Table table = parse_csv(figure_csv(figure_preset(4), 51));
  REQUIRE(table.header ==
          std::vector<std::string>{"q", "pi", "u", "sigma"});
  REQUIRE(table.rows.size() == 51);
  for (const auto& row : table.rows) {
    const double q = row[0];
    if (q <= 1.9) CHECK(row[3] < 0.0);
    if (q >= 2.1 && q <= 2.9) CHECK(row[3] > 0.0);
    // product and combined functionals flip much earlier (q* ~ 1.4)
    if (q <= 1.3) {
      CHECK(row[1] < 0.0);
      CHECK(row[2] < 0.0);
    }
    if (q >= 1.5) {
      CHECK(row[1] > 0.0);
      CHECK(row[2] > 0.0);
    }
  }
}

TEST_CASE("high-order product figure shows a dip at the antisymmetric "
          "state in both columns") {
  const Table table = parse_csv(figure_csv(figure_preset(9), 2001));
  REQUIRE(table.header ==
          std::vector<std::string>{"theta", "q=2", "q=3"});
  const double anti = 0.35 + pi_v / 4;
  std::size_t near = 0;
  for (std::size_t i = 1; i < table.rows.size(); ++i)
    if (std::abs(table.rows[i][0] - anti) <
        std::abs(table.rows[near][0] - anti))
      near = i;
  for (std::size_t col : {std::size_t{1}, std::size_t{2}}) {
    std::size_t best = near - 10;
    for (std::size_t i = near - 10; i <= near + 10; ++i)
      if (table.rows[i][col] < table.rows[best][col]) best = i;
    CHECK(std::abs(static_cast<double>(best) - static_cast<double>(near)) <=
          2);
    CHECK(table.rows[best - 1][col] > table.rows[best][col]);
    CHECK(table.rows[best + 1][col] > table.rows[best][col]);
  }
}

TEST_CASE("chart renderer emits one styled polyline per series") {
  svg::ChartSpec spec{"demo", "x", "y"};
  std::vector<svg::Series> series{
      {"alpha", svg::Stroke::solid, {{0.0, 0.0}, {1.0, 1.0}}},
      {"beta", svg::Stroke::dashed, {{0.0, 1.0}, {1.0, 0.0}}},
      {"gamma", svg::Stroke::dotted, {{0.0, 0.5}, {1.0, 0.5}}},
      {"delta", svg::Stroke::dash_dot, {{0.0, 0.2}, {1.0, 0.8}}}};
  const std::string doc = svg::render_chart(spec, series);
  CHECK(doc.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(doc, "<polyline") == 4);
  CHECK(doc.find("stroke-dasharray=\"8 5\"") != std::string::npos);
  CHECK(doc.find("stroke-dasharray=\"2 4\"") != std::string::npos);
  CHECK(doc.find("stroke-dasharray=\"9 4 2 4\"") != std::string::npos);
  for (const auto& s : series)
    CHECK(doc.find(">" + s.label + "</text>") != std::string::npos);
  CHECK(svg::render_chart(spec, series) == doc);

  CHECK(std::string(svg::dash_array(svg::Stroke::solid)).empty());
  CHECK(std::string(svg::dash_array(svg::Stroke::dashed)) == "8 5");
  CHECK(std::string(svg::dash_array(svg::Stroke::dotted)) == "2 4");
  CHECK(std::string(svg::dash_array(svg::Stroke::dash_dot)) == "9 4 2 4");
}

TEST_CASE("figure SVG wires presets through the chart renderer") {
  const std::string doc = figure_svg(figure_preset(1), 201);
  CHECK(doc.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(doc, "<polyline") == 4);
  CHECK(doc.find("stroke-dasharray=\"8 5\"") != std::string::npos);
  CHECK(doc.find(">q=0.5</text>") != std::string::npos);
  CHECK(doc.find("pi vs theta, delta=pi/4") != std::string::npos);
  CHECK(figure_svg(figure_preset(1), 201) == doc);
}

TEST_CASE("run report carries the run envelope") {
  const json report = run_report("entroq demo", {{"x", 1}}, {{"tol", 0.5}},
                                 {{"answer", 42}});
  for (const char* key :
       {"command", "arguments", "config", "results", "version", "timestamp"})
    CHECK(report.contains(key));
  CHECK(report["command"] == "entroq demo");
  CHECK(report["version"] == std::string(version));
  CHECK(report["results"]["answer"] == 42);
  const std::string stamp = report["timestamp"];
  CHECK(stamp.size() == 20);
  CHECK(stamp.back() == 'Z');
  CHECK(stamp[4] == '-');
  CHECK(stamp[10] == 'T');
}

TEST_CASE("JSON payloads round-trip losslessly") {
  const CrossingResult crossing =
      crossing_q(FunctionalKind::sigma, ObservablePair(pi_v / 4), 1.5, 2.5);
  const json cj = crossing_json(crossing);
  for (const char* key :
       {"q_star", "q_lo", "q_hi", "f_lo", "f_hi", "iterations"})
    CHECK(cj.contains(key));
  CHECK(json::parse(cj.dump()) == cj);
  CHECK(cj["q_star"].get<double>() == crossing.q_star);

  const ExtremaReport report = classify_extrema(
      {FunctionalKind::pi, EntropicOrder(3.0)}, ObservablePair(0.7), 2001);
  const json ej = extrema_json(report);
  CHECK(json::parse(ej.dump()) == ej);
  CHECK(ej["degenerate_flat"] == false);
  bool anti_is_local_min = false;
  bool unmatched_seen = false;
  for (const json& e : ej["extrema"]) {
    CHECK(e.contains("theta"));
    CHECK(e.contains("value"));
    CHECK(e.contains("type"));
    if (e["candidate"].is_null()) unmatched_seen = true;
    if (e["candidate"] == "ANTISYMMETRIC" && e["type"] == "LOCAL_MIN")
      anti_is_local_min = true;
  }
  CHECK(anti_is_local_min);
  CHECK(unmatched_seen);  // the flanking maxima sit away from every candidate
}

TEST_CASE("exchange table serializes the candidate roles per order") {
  const std::vector<ExchangeRow> rows =
      exchange_report(FunctionalKind::pi, ObservablePair(0.7), {2.0, 3.0},
                      501);
  const json j = exchange_json(rows);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(j[r]["q"] == (r == 0 ? 2.0 : 3.0));
    CHECK(j[r]["degenerate_flat"] == false);
    REQUIRE(j[r]["candidates"].size() == 6);
    int matched = 0;
    for (const json& c : j[r]["candidates"]) {
      CHECK(c.contains("label"));
      CHECK(c.contains("theta"));
      CHECK(c.contains("coincident"));
      if (!c["extremum"].is_null()) ++matched;
      if (c["label"] == "ANTISYMMETRIC") CHECK(c["extremum"] == "LOCAL_MIN");
      if (c["label"] == "SYMMETRIC") CHECK(c["extremum"] == "GLOBAL_MIN");
    }
    CHECK(matched == 2);  // eigenstate angles are not extrema at these orders
  }
}

TEST_SUITE_END();
