#pragma once

#include "entroq/entropy.hpp"
#include "entroq/qubit.hpp"

// The three uncertainty functionals and their second theta-derivatives,
// computed analytically (chain rule) and by finite differences as an
// independent oracle.
namespace entroq {

enum class FunctionalKind { sigma, pi, u };

const char* to_string(FunctionalKind kind);

struct FunctionalSpec {
  FunctionalKind kind;
  EntropicOrder q;
};

// Default step for the finite-difference second derivative (central second
// difference with one Richardson step at h/2). Calibrated so rounding noise
// ~4 eps |F| / h^2 stays far below the 1e-8 agreement tolerance while h^4
// truncation stays below 1e-6 relative on the steepest landscapes.
inline constexpr double fd_default_step = 5e-3;

// Analytic path defers to finite differences when min(p, 1-p) < this and
// q < 2: p^(q-2) diverges at concentrated probabilities, and the eigenstate
// angles sit exactly on that boundary.
inline constexpr double singular_prob_eps = 1e-9;

// S_q(A) + S_q(B): sum of Tsallis entropies of the two outcome pairs.
double sigma_q(const OutcomePair& out, const EntropicOrder& q);

// R_q(A) R_q(B): product of Renyi measures; in [1, 4] for two-outcome
// observables (enforced; violation throws std::domain_error).
double pi_q(const OutcomePair& out, const EntropicOrder& q);

// S_q(A) + S_q(B) + (1-q) S_q(A) S_q(B); Shannon sum at the q -> 1 branch.
double u_q(const OutcomePair& out, const EntropicOrder& q);

// Composes outcome_probabilities with the selected functional.
double evaluate(const FunctionalSpec& spec, const StateAngle& theta,
                const ObservablePair& pair);

// F'' = d^2F/dtheta^2; fd_fallback marks results that deferred to the
// finite-difference path at a near-singular point.
struct SecondDerivative {
  double value;
  bool fd_fallback;
};

SecondDerivative second_derivative(const FunctionalSpec& spec,
                                   const StateAngle& theta0,
                                   const ObservablePair& pair);

double second_derivative_fd(const FunctionalSpec& spec,
                            const StateAngle& theta0,
                            const ObservablePair& pair,
                            double h = fd_default_step);

}  // namespace entroq
