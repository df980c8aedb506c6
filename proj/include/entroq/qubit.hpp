#pragma once

#include <vector>

// Two-dimensional geometry: a pair of two-outcome observables with overlap
// angle delta, real pure states on the circle parameterized by theta, the
// induced outcome probabilities, and the candidate extremal states.
namespace entroq {

// Overlap angle between the eigenbases of the two observables, in radians.
// Restricted to [0, pi/4]: anything else reduces to this range by relabeling
// outcomes, and is rejected rather than silently folded.
class ObservablePair {
public:
  explicit ObservablePair(double delta);  // throws std::invalid_argument
  double delta() const { return delta_; }

private:
  double delta_;
};

// State angle, canonicalized modulo pi into [0, pi): theta and theta + pi
// describe the same physical state.
class StateAngle {
public:
  explicit StateAngle(double theta);
  double value() const { return theta_; }

private:
  double theta_;
};

// Outcome probabilities for both observables; complements implied.
struct OutcomePair {
  double p_a;
  double p_b;
  double p_not_a() const { return 1.0 - p_a; }
  double p_not_b() const { return 1.0 - p_b; }
};

enum class CandidateLabel { symmetric, antisymmetric, eigenstate };

// A state contending for the extrema of the uncertainty functionals:
//   symmetric      theta = delta/2          (maximizes p_a p_b)
//   antisymmetric  theta = delta/2 + pi/4   (maximizes p_not_a p_b)
//   eigenstate     theta in {0, delta} mod pi/2 (one observable certain)
// `coincident` flags angles shared with another candidate (delta = 0).
struct CandidateState {
  CandidateLabel label;
  double theta;
  bool coincident;
};

const char* to_string(CandidateLabel label);

// p_a = cos^2(theta), p_b = cos^2(theta - delta), clamped into [0, 1].
OutcomePair outcome_probabilities(const StateAngle& theta,
                                  const ObservablePair& pair);

// <b|psi> = cos(theta - delta); its square is p_b.
double overlap_amplitude(const StateAngle& theta, const ObservablePair& pair);

struct ProbabilityDerivatives {
  double dp_a;   // -sin 2theta
  double d2p_a;  // -2 cos 2theta
  double dp_b;   // -sin 2(theta - delta)
  double d2p_b;  // -2 cos 2(theta - delta)
};

ProbabilityDerivatives probability_derivatives(const StateAngle& theta,
                                               const ObservablePair& pair);

// Canonical representatives in [0, pi): symmetric, antisymmetric, then the
// eigenstate angles 0, delta, pi/2, delta + pi/2 (duplicates merged at
// delta = 0 and flagged coincident).
std::vector<CandidateState> candidate_states(const ObservablePair& pair);

}  // namespace entroq
