#include "entroq/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace entroq {

double pow_q(double p, double e) {
  if (e == 0.0) return 1.0;  // p^0 -> 1 even at p = 0 (derivative limits)
  if (p == 0.0) return 0.0;
  return std::exp(e * std::log(p));
}

namespace {

double clamp_probability(double p, std::size_t index) {
  if (p >= 0.0 && p <= 1.0) return p;
  if (p < 0.0 && p >= -prob_clamp_tol) return 0.0;
  if (p > 1.0 && p <= 1.0 + prob_clamp_tol) return 1.0;
  throw std::invalid_argument("probability entry " + std::to_string(index) +
                              " = " + std::to_string(p) +
                              " outside [0, 1] beyond clamp tolerance");
}

}  // namespace

Distribution::Distribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.size() < 2)
    throw std::invalid_argument("distribution needs at least 2 outcomes");
  double sum = 0.0;
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    probs_[j] = clamp_probability(probs_[j], j);
    sum += probs_[j];
  }
  if (std::abs(sum - 1.0) > prob_sum_tol)
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) +
                                ", not 1");
}

Distribution Distribution::two_outcome(double p) {
  return Distribution({p, 1.0 - p});
}

EntropicOrder::EntropicOrder(double q) : q_(q) {
  if (!(q > 0.0))
    throw std::invalid_argument("entropic order must be positive, got " +
                                std::to_string(q));
}

bool EntropicOrder::near_unity() const {
  return std::abs(q_ - 1.0) <= q_unity_eps;
}

double power_sum(const Distribution& p, double q) {
  double sum = 0.0;
  for (double pj : p.probs()) sum += pow_q(pj, q);
  return sum;
}

double tsallis_entropy(const Distribution& p, const EntropicOrder& q) {
  if (q.near_unity()) return shannon_entropy(p);
  return (1.0 - power_sum(p, q.value())) / (q.value() - 1.0);
}

double shannon_entropy(const Distribution& p) {
  double h = 0.0;
  for (double pj : p.probs())
    if (pj > 0.0) h -= pj * std::log(pj);
  return h;
}

double renyi_measure(const Distribution& p, const EntropicOrder& q) {
  if (q.near_unity()) return std::exp(shannon_entropy(p));
  return std::exp(std::log(power_sum(p, q.value())) / (1.0 - q.value()));
}

double variance_two_outcome(double p_a) {
  p_a = clamp_probability(p_a, 0);
  return 4.0 * p_a * (1.0 - p_a);
}

}  // namespace entroq
