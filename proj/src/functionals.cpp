#include "entroq/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace entroq {

namespace {

// x(p) = p^q + (1-p)^q (the power sum of a two-outcome distribution) and its
// p-derivatives. Everything below is a chain rule through x:
//   S_q = (1 - x)/(q - 1)
//   U_q:  1 + (1-q) U = X with X = x_A x_B
//   Pi_q = X^(1/(1-q))
double x_of(double p, double q) { return pow_q(p, q) + pow_q(1.0 - p, q); }

double x_d1(double p, double q) {
  return q * (pow_q(p, q - 1.0) - pow_q(1.0 - p, q - 1.0));
}

double x_d2(double p, double q) {
  return q * (q - 1.0) * (pow_q(p, q - 2.0) + pow_q(1.0 - p, q - 2.0));
}

// x(p(theta)) and its first two theta-derivatives.
struct XChain {
  double x, x1, x2;
};

XChain x_chain(double p, double dp, double d2p, double q) {
  const double d1 = x_d1(p, q);
  return {x_of(p, q), d1 * dp, x_d2(p, q) * dp * dp + d1 * d2p};
}

double shannon_two(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log(1.0 - p);
  return h;
}

// Shannon entropy derivatives in p (the q -> 1 forms).
double shannon_d1(double p) { return std::log((1.0 - p) / p); }
double shannon_d2(double p) { return -1.0 / (p * (1.0 - p)); }

}  // namespace

const char* to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::sigma: return "sigma";
    case FunctionalKind::pi: return "pi";
    case FunctionalKind::u: return "u";
  }
  return "?";
}

double sigma_q(const OutcomePair& out, const EntropicOrder& q) {
  return tsallis_entropy(Distribution::two_outcome(out.p_a), q) +
         tsallis_entropy(Distribution::two_outcome(out.p_b), q);
}

double pi_q(const OutcomePair& out, const EntropicOrder& q) {
  const double value = renyi_measure(Distribution::two_outcome(out.p_a), q) *
                       renyi_measure(Distribution::two_outcome(out.p_b), q);
  if (!(value >= 1.0 - 1e-9 && value <= 4.0 + 1e-9))
    throw std::domain_error("product of Renyi measures " +
                            std::to_string(value) +
                            " escaped [1, 4]: entropy branch bug");
  return value;
}

double u_q(const OutcomePair& out, const EntropicOrder& q) {
  if (q.near_unity()) return shannon_two(out.p_a) + shannon_two(out.p_b);
  const double sa = tsallis_entropy(Distribution::two_outcome(out.p_a), q);
  const double sb = tsallis_entropy(Distribution::two_outcome(out.p_b), q);
  return sa + sb + (1.0 - q.value()) * sa * sb;
}

double evaluate(const FunctionalSpec& spec, const StateAngle& theta,
                const ObservablePair& pair) {
  const OutcomePair out = outcome_probabilities(theta, pair);
  switch (spec.kind) {
    case FunctionalKind::sigma: return sigma_q(out, spec.q);
    case FunctionalKind::pi: return pi_q(out, spec.q);
    case FunctionalKind::u: return u_q(out, spec.q);
  }
  throw std::logic_error("unreachable functional kind");
}

SecondDerivative second_derivative(const FunctionalSpec& spec,
                                   const StateAngle& theta0,
                                   const ObservablePair& pair) {
  const OutcomePair out = outcome_probabilities(theta0, pair);
  const ProbabilityDerivatives d = probability_derivatives(theta0, pair);
  const double q = spec.q.value();

  // p^(q-2) diverges at concentrated probabilities for q < 2 (Shannon forms
  // included); the eigenstate angles sit exactly on that boundary.
  const double margin =
      std::min(std::min(out.p_a, out.p_not_a()),
               std::min(out.p_b, out.p_not_b()));
  if (margin < singular_prob_eps && q < 2.0)
    return {second_derivative_fd(spec, theta0, pair), true};

  if (spec.q.near_unity()) {
    const double h2 = shannon_d2(out.p_a) * d.dp_a * d.dp_a +
                      shannon_d1(out.p_a) * d.d2p_a +
                      shannon_d2(out.p_b) * d.dp_b * d.dp_b +
                      shannon_d1(out.p_b) * d.d2p_b;
    if (spec.kind != FunctionalKind::pi) return {h2, false};
    const double h1 =
        shannon_d1(out.p_a) * d.dp_a + shannon_d1(out.p_b) * d.dp_b;
    const double h = shannon_two(out.p_a) + shannon_two(out.p_b);
    return {std::exp(h) * (h1 * h1 + h2), false};
  }

  const XChain a = x_chain(out.p_a, d.dp_a, d.d2p_a, q);
  const XChain b = x_chain(out.p_b, d.dp_b, d.d2p_b, q);
  if (spec.kind == FunctionalKind::sigma)
    return {-(a.x2 + b.x2) / (q - 1.0), false};

  const double X = a.x * b.x;
  const double X1 = a.x1 * b.x + a.x * b.x1;
  const double X2 = a.x2 * b.x + 2.0 * a.x1 * b.x1 + a.x * b.x2;
  if (spec.kind == FunctionalKind::u) return {X2 / (1.0 - q), false};

  const double m = 1.0 / (1.0 - q);
  return {m * std::exp((m - 2.0) * std::log(X)) *
              ((m - 1.0) * X1 * X1 + X * X2),
          false};
}

double second_derivative_fd(const FunctionalSpec& spec,
                            const StateAngle& theta0,
                            const ObservablePair& pair, double h) {
  if (!(h > 0.0))
    throw std::invalid_argument("finite-difference step must be positive");
  const double t0 = theta0.value();
  const auto f = [&](double t) {
    return evaluate(spec, StateAngle(t), pair);
  };
  const double f0 = f(t0);
  const auto central = [&](double hh) {
    return (f(t0 + hh) - 2.0 * f0 + f(t0 - hh)) / (hh * hh);
  };
  // One Richardson step cancels the h^2 truncation term.
  return (4.0 * central(h / 2) - central(h)) / 3.0;
}

}  // namespace entroq
