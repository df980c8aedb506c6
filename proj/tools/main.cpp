#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entroq/analysis.hpp"
#include "entroq/entropy.hpp"
#include "entroq/functionals.hpp"
#include "entroq/qubit.hpp"
#include "entroq/report.hpp"
#include "entroq/version.hpp"

namespace {

double parse_number(const std::string& text) {
  std::size_t consumed = 0;
  const double value = std::stod(text, &consumed);
  if (consumed != text.size())
    throw std::invalid_argument("not a number: '" + text + "'");
  return value;
}

// Angles in radians; `pi` tokens accepted: pi, pi/4, 3pi/8, 0.5pi, -pi/2.
double parse_angle(const std::string& text) {
  const std::size_t at = text.find("pi");
  if (at == std::string::npos) return parse_number(text);
  const std::string coef = text.substr(0, at);
  const std::string rest = text.substr(at + 2);
  double c = 1.0;
  if (coef == "-")
    c = -1.0;
  else if (!coef.empty() && coef != "+")
    c = parse_number(coef);
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/')
      throw std::invalid_argument("bad angle token: '" + text + "'");
    denom = parse_number(rest.substr(1));
    if (denom == 0.0)
      throw std::invalid_argument("zero denominator in angle: '" + text + "'");
  }
  return c * std::numbers::pi / denom;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file)
    throw std::invalid_argument("cannot open output path: " + out_path);
  file << text;
  file.flush();
  if (!file)
    throw std::invalid_argument("failed writing output: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  std::string command_echo;
  for (int i = 0; i < argc; ++i) {
    if (i) command_echo += ' ';
    command_echo += argv[i];
  }

  CLI::App app{
      "Entropic uncertainty measures (Tsallis / Renyi families) for qubit "
      "observable pairs: sweeps, extremum classification, and the "
      "order-dependent max/min exchange"};
  app.set_version_flag("--version", std::string(entroq::version));
  app.require_subcommand(1);

  int n_points = 2001;
  std::string out_path;
  std::string format = "csv";
  app.add_option("--n-points", n_points,
                 "Grid points per sweep (default 2001)")
      ->check(CLI::Range(3, 10'000'000));
  app.add_option("--out", out_path, "Output file path (default: stdout)");
  app.add_option("--format", format, "Figure output format")
      ->check(CLI::IsMember({"csv", "svg"}));

  const std::map<std::string, entroq::FunctionalKind> kind_map{
      {"sigma", entroq::FunctionalKind::sigma},
      {"pi", entroq::FunctionalKind::pi},
      {"u", entroq::FunctionalKind::u}};
  const auto kind_member = CLI::IsMember({"sigma", "pi", "u"});

  auto* entropy_cmd = app.add_subcommand(
      "entropy", "Print Tsallis entropy, Shannon entropy, and the Renyi "
                 "measure of a distribution");
  entropy_cmd->fallthrough();
  std::vector<double> probs;
  double entropy_q = 1.0;
  entropy_cmd
      ->add_option("--probs", probs, "Comma-separated outcome probabilities")
      ->required()
      ->delimiter(',');
  entropy_cmd->add_option("--q", entropy_q, "Entropic order q > 0")
      ->required();
  entropy_cmd->callback([&] {
    const entroq::Distribution dist(probs);
    const entroq::EntropicOrder q(entropy_q);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "tsallis_entropy = %.15g\n"
                  "shannon_entropy = %.15g\n"
                  "renyi_measure = %.15g\n",
                  entroq::tsallis_entropy(dist, q),
                  entroq::shannon_entropy(dist),
                  entroq::renyi_measure(dist, q));
    emit(buf, out_path);
  });

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "CSV sweep of a functional over theta in [0, pi)");
  sweep_cmd->fallthrough();
  std::string sweep_kind, sweep_delta;
  double sweep_q = 1.0;
  sweep_cmd->add_option("--kind", sweep_kind, "Functional: sigma, pi, or u")
      ->required()
      ->check(kind_member);
  sweep_cmd->add_option("--q", sweep_q, "Entropic order q > 0")->required();
  sweep_cmd
      ->add_option("--delta", sweep_delta,
                   "Observable overlap angle in [0, pi/4] (accepts pi "
                   "tokens, e.g. pi/4)")
      ->required();
  sweep_cmd->callback([&] {
    const entroq::ObservablePair pair(parse_angle(sweep_delta));
    const entroq::FunctionalSpec spec{kind_map.at(sweep_kind),
                                      entroq::EntropicOrder(sweep_q)};
    emit(entroq::sweep_csv(entroq::sweep_theta(spec, pair, n_points)),
         out_path);
  });

  auto* figure_cmd = app.add_subcommand(
      "figure", "Render a built-in chart preset (1-10) as CSV or SVG");
  figure_cmd->fallthrough();
  int figure_id = 0;
  figure_cmd->add_option("id", figure_id, "Preset id, 1..10")
      ->required()
      ->check(CLI::Range(1, 10));
  figure_cmd->callback([&] {
    const entroq::FigurePreset preset = entroq::figure_preset(figure_id);
    emit(format == "svg" ? entroq::figure_svg(preset, n_points)
                         : entroq::figure_csv(preset, n_points),
         out_path);
  });

  auto* crossing_cmd = app.add_subcommand(
      "crossing",
      "Bisect for the order q* where F'' at theta = delta/2 changes sign");
  crossing_cmd->fallthrough();
  std::string crossing_kind, crossing_delta;
  double q_lo = 0.0, q_hi = 0.0;
  crossing_cmd
      ->add_option("--kind", crossing_kind, "Functional: sigma, pi, or u")
      ->required()
      ->check(kind_member);
  crossing_cmd
      ->add_option("--delta", crossing_delta,
                   "Observable overlap angle in [0, pi/4]")
      ->required();
  crossing_cmd->add_option("--q-lo", q_lo, "Lower bracket end")->required();
  crossing_cmd->add_option("--q-hi", q_hi, "Upper bracket end")->required();
  crossing_cmd->callback([&] {
    const entroq::ObservablePair pair(parse_angle(crossing_delta));
    const entroq::CrossingResult result =
        entroq::crossing_q(kind_map.at(crossing_kind), pair, q_lo, q_hi);
    const nlohmann::json report = entroq::run_report(
        command_echo,
        {{"kind", crossing_kind},
         {"delta", pair.delta()},
         {"q_lo", q_lo},
         {"q_hi", q_hi}},
        {{"crossing_tol", entroq::crossing_tol}},
        {{"crossing", entroq::crossing_json(result)}});
    emit(report.dump(2) + "\n", out_path);
  });

  auto* classify_cmd = app.add_subcommand(
      "classify",
      "Classify the theta-landscape extrema of a functional and match them "
      "to the candidate states");
  classify_cmd->fallthrough();
  std::string classify_kind, classify_delta;
  double classify_q = 1.0;
  classify_cmd
      ->add_option("--kind", classify_kind, "Functional: sigma, pi, or u")
      ->required()
      ->check(kind_member);
  classify_cmd->add_option("--q", classify_q, "Entropic order q > 0")
      ->required();
  classify_cmd
      ->add_option("--delta", classify_delta,
                   "Observable overlap angle in [0, pi/4]")
      ->required();
  classify_cmd->callback([&] {
    const entroq::ObservablePair pair(parse_angle(classify_delta));
    const entroq::FunctionalKind kind = kind_map.at(classify_kind);
    const entroq::FunctionalSpec spec{kind, entroq::EntropicOrder(classify_q)};
    const entroq::ExtremaReport report =
        entroq::classify_extrema(spec, pair, n_points);
    const std::vector<entroq::ExchangeRow> rows =
        entroq::exchange_report(kind, pair, {classify_q}, n_points);
    const nlohmann::json out = entroq::run_report(
        command_echo,
        {{"kind", classify_kind},
         {"q", classify_q},
         {"delta", pair.delta()}},
        {{"n_points", n_points},
         {"flatness_tol", entroq::flatness_tol},
         {"candidate_match_tol", entroq::candidate_match_tol}},
        {{"report", entroq::extrema_json(report)},
         {"exchange", entroq::exchange_json(rows)}});
    emit(out.dump(2) + "\n", out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // invalid input
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;  // invalid input
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;  // numerical failure (failed bracket, overflow, ...)
  }
  return 0;
}
