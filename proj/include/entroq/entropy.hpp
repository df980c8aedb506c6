#pragma once

#include <cstddef>
#include <vector>

// Generalized entropy measures over finite probability distributions.
namespace entroq {

// |q - 1| at or below this switches to the dedicated Shannon branch,
// where the generic (1 - sum p^q)/(q - 1) form is 0/0.
inline constexpr double q_unity_eps = 1e-9;

// Entries in [-clamp_tol, 0) clamp to 0 (and (1, 1+clamp_tol] to 1):
// absorbs floating-point residue from cos^2/sin^2 upstream.
inline constexpr double prob_clamp_tol = 1e-12;

// Probabilities must sum to 1 within this, after clamping.
inline constexpr double prob_sum_tol = 1e-12;

// p^e computed as exp(e ln p) with the p = 0 branch short-circuited to 0,
// for uniform accuracy at fractional exponents.
double pow_q(double p, double e);

// Finite probability vector over N >= 2 outcomes. Throws std::invalid_argument
// on construction if any entry is negative beyond the clamp tolerance, exceeds
// 1 beyond it, or the entries do not sum to 1 within prob_sum_tol.
class Distribution {
public:
  explicit Distribution(std::vector<double> probs);
  static Distribution two_outcome(double p);  // {p, 1-p}

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

private:
  std::vector<double> probs_;
};

// Positive entropic order; construction rejects q <= 0 (p = 0 makes p^q
// undefined or divergent there).
class EntropicOrder {
public:
  explicit EntropicOrder(double q);
  double value() const { return q_; }
  bool near_unity() const;

private:
  double q_;
};

// sum_j p_j^q
double power_sum(const Distribution& p, double q);

// (1 - sum p^q)/(q - 1); Shannon value on the q -> 1 branch. Always >= 0,
// and 0 exactly when the distribution is concentrated.
double tsallis_entropy(const Distribution& p, const EntropicOrder& q);

// -sum p ln p with 0 ln 0 = 0.
double shannon_entropy(const Distribution& p);

// (sum p^q)^(1/(1-q)), the exponentiated Renyi form: an effective number of
// outcomes in [1, N]. exp(shannon) on the q -> 1 branch.
double renyi_measure(const Distribution& p, const EntropicOrder& q);

// Variance of a two-outcome +/-1-valued observable: 4 p (1 - p).
// Satisfies tsallis_entropy({p, 1-p}, 2) = variance/2.
double variance_two_outcome(double p_a);

}  // namespace entroq
