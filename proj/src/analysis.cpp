#include "entroq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace entroq {

namespace {

constexpr double pi = std::numbers::pi;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double circular_distance(double a, double b) {
  double d = std::abs(a - b);
  return std::min(d, pi - d);
}

std::string describe(const FunctionalSpec& spec, const ObservablePair& pair,
                     int n_points) {
  std::ostringstream os;
  os.precision(17);
  os << to_string(spec.kind) << " q=" << spec.q.value()
     << " delta=" << pair.delta() << " n=" << n_points << " theta in [0,pi)";
  return os.str();
}

// Golden-section search for a minimum of f inside (lo, hi), to bracket width
// tol. Assumes f is unimodal on the bracket (guaranteed by the grid
// detection feeding it).
double golden_min(const std::function<double(double)>& f, double lo,
                  double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d; d = c; fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

// Push a golden-section estimate below its floating-point plateau
// (~sqrt(eps |f| / f'')) by bisecting the sign of the smoothed derivative
// D(t) = f(t+u) - f(t-u). At the symmetric/antisymmetric points D is exactly
// odd about the extremum, so the polish is bias-free there; the curvature
// gate skips kinks (where golden-section is already exact) and near-flat
// landscapes (where the derivative sign drowns in rounding noise).
double polish_extremum(const std::function<double(double)>& f,
                       double theta_g) {
  const double r = 1e-4;
  const double curvature =
      (f(theta_g + r) - 2.0 * f(theta_g) + f(theta_g - r)) / (r * r);
  if (!(std::abs(curvature) >= 1e-4 && std::abs(curvature) <= 1e3))
    return theta_g;

  const double u = 1e-5;
  const auto d = [&](double t) { return f(t + u) - f(t - u); };
  for (double w : {1e-6, 1e-5, 1e-4}) {
    double lo = theta_g - w, hi = theta_g + w;
    double dlo = d(lo), dhi = d(hi);
    if (sign_of(dlo) == 0 || sign_of(dlo) == sign_of(dhi)) continue;
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      const double dm = d(mid);
      if (dm == 0.0) return mid;
      if (sign_of(dm) == sign_of(dlo)) {
        lo = mid; dlo = dm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  return theta_g;
}

struct GridExtremum {
  double lo, hi;   // bracket (unwrapped theta, may extend past pi)
  bool is_max;
};

// Slope sign changes between consecutive nonzero edges of the periodic grid.
std::vector<GridExtremum> detect_on_grid(const std::vector<double>& theta,
                                         const std::vector<double>& value) {
  const int n = static_cast<int>(theta.size());
  std::vector<int> edge(n);  // edge k: vertex k -> k+1 (periodic)
  for (int k = 0; k < n; ++k)
    edge[k] = sign_of(value[(k + 1) % n] - value[k]);

  std::vector<int> nonzero;
  for (int k = 0; k < n; ++k)
    if (edge[k] != 0) nonzero.push_back(k);
  std::vector<GridExtremum> found;
  if (nonzero.size() < 2) return found;

  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const int j = nonzero[i];
    const int k = nonzero[(i + 1) % nonzero.size()];
    if (edge[j] == edge[k]) continue;
    // Rising edge j then falling edge k (or vice versa): the extremum lies
    // strictly between vertex j and vertex k+1.
    double lo = theta[j];
    double hi = theta[(k + 1) % n];
    if (hi <= lo) hi += pi;  // bracket wraps the period seam
    found.push_back({lo, hi, edge[j] > 0});
  }
  return found;
}

}  // namespace

const char* to_string(ExtremumType type) {
  switch (type) {
    case ExtremumType::local_max: return "LOCAL_MAX";
    case ExtremumType::local_min: return "LOCAL_MIN";
    case ExtremumType::global_max: return "GLOBAL_MAX";
    case ExtremumType::global_min: return "GLOBAL_MIN";
  }
  return "?";
}

Curve sweep_theta(const FunctionalSpec& spec, const ObservablePair& pair,
                  int n_points) {
  if (n_points < 3)
    throw std::invalid_argument("sweep needs at least 3 grid points");
  Curve curve;
  curve.parameter_name = "theta";
  curve.meta = describe(spec, pair, n_points);
  curve.samples.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double theta = i * pi / n_points;  // [0, pi), pi excluded
    curve.samples.emplace_back(theta,
                               evaluate(spec, StateAngle(theta), pair));
  }
  return curve;
}

ExtremaReport classify_extrema(const FunctionalSpec& spec,
                               const ObservablePair& pair, int n_points) {
  if (n_points < 101)
    throw std::invalid_argument(
        "classification needs at least 101 grid points");

  const Curve curve = sweep_theta(spec, pair, n_points);
  std::vector<double> theta(n_points), value(n_points);
  for (int i = 0; i < n_points; ++i) {
    theta[i] = curve.samples[i].first;
    value[i] = curve.samples[i].second;
  }

  ExtremaReport report;
  const auto [mn, mx] = std::minmax_element(value.begin(), value.end());
  if (*mx - *mn < flatness_tol) {
    report.degenerate_flat = true;
    return report;
  }

  const auto f = [&](double t) {
    return evaluate(spec, StateAngle(t), pair);
  };

  std::vector<Extremum> extrema;
  for (const GridExtremum& g : detect_on_grid(theta, value)) {
    const auto objective = [&](double t) {
      return g.is_max ? -f(t) : f(t);
    };
    double refined = golden_min(objective, g.lo, g.hi, 1e-10);
    refined = polish_extremum(f, refined);
    const double canonical = StateAngle(refined).value();
    // Duplicates can appear when a zero-slope run splits one extremum.
    const bool dup = std::any_of(
        extrema.begin(), extrema.end(), [&](const Extremum& e) {
          return circular_distance(e.theta, canonical) < 1e-9;
        });
    if (dup) continue;
    Extremum e;
    e.theta = canonical;
    e.value = f(canonical);
    e.type = g.is_max ? ExtremumType::local_max : ExtremumType::local_min;
    extrema.push_back(e);
  }

  // Promote to GLOBAL every extremum tied (within tie_tol) with the best
  // value of its polarity; the theta -> theta + pi/2 twin symmetry makes
  // exact ties structural, so they are flagged rather than broken.
  double best_max = -std::numeric_limits<double>::infinity();
  double best_min = std::numeric_limits<double>::infinity();
  for (const Extremum& e : extrema) {
    if (e.type == ExtremumType::local_max) best_max = std::max(best_max, e.value);
    if (e.type == ExtremumType::local_min) best_min = std::min(best_min, e.value);
  }
  int n_gmax = 0, n_gmin = 0;
  for (Extremum& e : extrema) {
    if (e.type == ExtremumType::local_max && e.value >= best_max - tie_tol) {
      e.type = ExtremumType::global_max;
      ++n_gmax;
    } else if (e.type == ExtremumType::local_min &&
               e.value <= best_min + tie_tol) {
      e.type = ExtremumType::global_min;
      ++n_gmin;
    }
  }
  report.has_ties = n_gmax > 1 || n_gmin > 1;

  const std::vector<CandidateState> candidates = candidate_states(pair);
  for (Extremum& e : extrema) {
    double best = candidate_match_tol;
    for (const CandidateState& c : candidates) {
      const double dist = circular_distance(e.theta, c.theta);
      if (dist <= best) {
        best = dist;
        e.candidate = c.label;
      }
    }
  }

  std::sort(extrema.begin(), extrema.end(),
            [](const Extremum& a, const Extremum& b) {
              return a.theta < b.theta;
            });
  report.extrema = std::move(extrema);
  return report;
}

Curve dd_vs_q(FunctionalKind kind, const ObservablePair& pair,
              const std::vector<double>& q_grid) {
  if (q_grid.size() < 3)
    throw std::invalid_argument("q grid needs at least 3 points");
  for (std::size_t i = 0; i < q_grid.size(); ++i) {
    if (!(q_grid[i] > 0.0))
      throw std::invalid_argument("q grid entries must be positive");
    if (i > 0 && !(q_grid[i] > q_grid[i - 1]))
      throw std::invalid_argument("q grid must be strictly increasing");
  }
  const StateAngle midpoint(pair.delta() / 2);
  Curve curve;
  curve.parameter_name = "q";
  std::ostringstream os;
  os.precision(17);
  os << "F'' at theta=delta/2, " << to_string(kind)
     << " delta=" << pair.delta();
  curve.meta = os.str();
  curve.samples.reserve(q_grid.size());
  for (double q : q_grid)
    curve.samples.emplace_back(
        q, second_derivative({kind, EntropicOrder(q)}, midpoint, pair).value);
  return curve;
}

CrossingResult crossing_q(FunctionalKind kind, const ObservablePair& pair,
                          double q_lo, double q_hi) {
  if (!(q_lo > 0.0) || !(q_hi > q_lo))
    throw std::invalid_argument("crossing bracket must satisfy 0 < q_lo < q_hi");
  const StateAngle midpoint(pair.delta() / 2);
  const auto fpp = [&](double q) {
    const double v =
        second_derivative({kind, EntropicOrder(q)}, midpoint, pair).value;
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "non-finite F'' at q=" << q << " during crossing search";
      throw std::domain_error(os.str());
    }
    return v;
  };

  double lo = q_lo, hi = q_hi;
  double f_lo = fpp(lo), f_hi = fpp(hi);
  if (sign_of(f_lo) == 0 || sign_of(f_lo) == sign_of(f_hi)) {
    std::ostringstream os;
    os.precision(17);
    os << "bracket endpoints do not straddle a sign change: F''(" << lo
       << ") = " << f_lo << ", F''(" << hi << ") = " << f_hi;
    throw std::domain_error(os.str());
  }

  int iterations = 0;
  while (hi - lo > crossing_tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = fpp(mid);
    ++iterations;
    if (fm == 0.0) {
      // Exact zero: shrink a symmetric bracket around it and stop.
      lo = mid - crossing_tol / 2;
      hi = mid + crossing_tol / 2;
      f_lo = fpp(lo);
      f_hi = fpp(hi);
      break;
    }
    if (sign_of(fm) == sign_of(f_lo)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
      f_hi = fm;
    }
  }
  return {0.5 * (lo + hi), lo, hi, f_lo, f_hi, iterations};
}

std::vector<ExchangeRow> exchange_report(FunctionalKind kind,
                                         const ObservablePair& pair,
                                         const std::vector<double>& q_list,
                                         int n_points) {
  std::vector<ExchangeRow> rows;
  rows.reserve(q_list.size());
  for (double q : q_list) {
    const ExtremaReport report =
        classify_extrema({kind, EntropicOrder(q)}, pair, n_points);
    ExchangeRow row;
    row.q = q;
    row.degenerate_flat = report.degenerate_flat;
    for (const CandidateState& c : candidate_states(pair)) {
      std::optional<ExtremumType> type;
      for (const Extremum& e : report.extrema)
        if (circular_distance(e.theta, c.theta) <= candidate_match_tol)
          type = e.type;
      row.entries.emplace_back(c, type);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace entroq
