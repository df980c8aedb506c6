#include "entroq/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entroq {

namespace {

constexpr double pi = std::numbers::pi;

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

// Distance between two canonical angles on the circle of period pi.
double circular_distance(double a, double b) {
  double d = std::abs(a - b);
  return std::min(d, pi - d);
}

}  // namespace

ObservablePair::ObservablePair(double delta) : delta_(delta) {
  if (!(delta >= 0.0 && delta <= pi / 4))
    throw std::invalid_argument(
        "overlap angle delta must lie in [0, pi/4], got " +
        std::to_string(delta) +
        " (relabel outcomes instead of folding larger angles)");
}

StateAngle::StateAngle(double theta) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("state angle must be finite");
  double t = std::fmod(theta, pi);  // fmod is exact, result in (-pi, pi)
  if (t < 0.0) t += pi;
  if (t >= pi) t -= pi;  // tiny negative t can round up to pi
  theta_ = t;
}

const char* to_string(CandidateLabel label) {
  switch (label) {
    case CandidateLabel::symmetric: return "SYMMETRIC";
    case CandidateLabel::antisymmetric: return "ANTISYMMETRIC";
    case CandidateLabel::eigenstate: return "EIGENSTATE";
  }
  return "?";
}

OutcomePair outcome_probabilities(const StateAngle& theta,
                                  const ObservablePair& pair) {
  const double ca = std::cos(theta.value());
  const double cb = std::cos(theta.value() - pair.delta());
  return {clamp01(ca * ca), clamp01(cb * cb)};
}

double overlap_amplitude(const StateAngle& theta, const ObservablePair& pair) {
  return std::cos(theta.value() - pair.delta());
}

ProbabilityDerivatives probability_derivatives(const StateAngle& theta,
                                               const ObservablePair& pair) {
  const double two_a = 2.0 * theta.value();
  const double two_b = 2.0 * (theta.value() - pair.delta());
  return {-std::sin(two_a), -2.0 * std::cos(two_a),
          -std::sin(two_b), -2.0 * std::cos(two_b)};
}

std::vector<CandidateState> candidate_states(const ObservablePair& pair) {
  const double d = pair.delta();
  std::vector<CandidateState> states;
  states.push_back(
      {CandidateLabel::symmetric, StateAngle(d / 2).value(), false});
  states.push_back(
      {CandidateLabel::antisymmetric, StateAngle(d / 2 + pi / 4).value(),
       false});
  for (double raw : {0.0, d, pi / 2, d + pi / 2}) {
    const double t = StateAngle(raw).value();
    const bool dup = std::any_of(
        states.begin(), states.end(), [&](const CandidateState& s) {
          return s.label == CandidateLabel::eigenstate &&
                 circular_distance(s.theta, t) < 1e-12;
        });
    if (!dup) states.push_back({CandidateLabel::eigenstate, t, false});
  }
  // Flag angles shared between different candidate families (delta = 0
  // collapses the symmetric state onto an eigenstate).
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      if (circular_distance(states[i].theta, states[j].theta) < 1e-12)
        states[i].coincident = states[j].coincident = true;
  return states;
}

}  // namespace entroq
