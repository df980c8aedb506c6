#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entroq/functionals.hpp"
#include "entroq/qubit.hpp"

// Landscape analysis: theta sweeps, extremum detection/classification against
// the candidate states, F''-vs-q curves, and sign-crossing root finding.
namespace entroq {

// Grid value range below this is reported as a degenerate flat landscape
// (Sigma_2 at delta = pi/4 is exactly constant and must not yield spurious
// extrema).
inline constexpr double flatness_tol = 1e-10;

// Refined extrema within this of the global best value share the GLOBAL
// label and set the tie flag (twin symmetry theta -> theta + pi/2 makes
// exact ties structural).
inline constexpr double tie_tol = 1e-10;

// A refined extremum within this many radians of a candidate angle gets the
// candidate's label.
inline constexpr double candidate_match_tol = 1e-6;

// Bisection width for the sign crossing of F'' in q.
inline constexpr double crossing_tol = 1e-9;

// Sampled series over one parameter, with enough metadata to title a figure.
struct Curve {
  std::string parameter_name;  // "theta" or "q"
  std::vector<std::pair<double, double>> samples;  // strictly increasing x
  std::string meta;  // functional kind(s), delta, grid description
};

enum class ExtremumType { local_max, local_min, global_max, global_min };

const char* to_string(ExtremumType type);

struct Extremum {
  double theta;  // refined location in [0, pi)
  double value;
  ExtremumType type;
  std::optional<CandidateLabel> candidate;  // match within candidate_match_tol
};

struct ExtremaReport {
  std::vector<Extremum> extrema;  // sorted by theta
  bool degenerate_flat = false;
  bool has_ties = false;
};

struct CrossingResult {
  double q_star;
  double q_lo, q_hi;  // final bracket, |q_hi - q_lo| <= crossing_tol
  double f_lo, f_hi;  // F'' at the final bracket ends (opposite signs)
  int iterations;
};

// One row of the exchange table: extremum type found at each candidate state
// for a given q (nullopt = no extremum there).
struct ExchangeRow {
  double q;
  bool degenerate_flat;
  std::vector<std::pair<CandidateState, std::optional<ExtremumType>>> entries;
};

// Uniform grid of n_points over [0, pi), inclusive of 0, exclusive of pi.
// Requires n_points >= 3.
Curve sweep_theta(const FunctionalSpec& spec, const ObservablePair& pair,
                  int n_points);

// Detects slope sign changes on the periodic grid, refines each extremum by
// golden-section search (theta tolerance 1e-10) plus a curvature-gated
// derivative-sign polish, labels candidates, and flags flats and ties.
// Requires n_points >= 101.
ExtremaReport classify_extrema(const FunctionalSpec& spec,
                               const ObservablePair& pair, int n_points);

// F''(theta = delta/2) per q over a strictly increasing positive grid.
Curve dd_vs_q(FunctionalKind kind, const ObservablePair& pair,
              const std::vector<double>& q_grid);

// Bisection on q -> F''(delta/2) down to crossing_tol. Throws
// std::domain_error when the bracket endpoints have equal sign (message
// carries both endpoint values) or when F'' comes back non-finite.
CrossingResult crossing_q(FunctionalKind kind, const ObservablePair& pair,
                          double q_lo, double q_hi);

// classify_extrema at each q, mapped onto the candidate states: makes the
// max/min exchange explicit.
std::vector<ExchangeRow> exchange_report(FunctionalKind kind,
                                         const ObservablePair& pair,
                                         const std::vector<double>& q_list,
                                         int n_points = 2001);

}  // namespace entroq
