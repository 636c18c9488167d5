#include "fatpivot/analysis/bounds.hpp"

#include <cmath>
#include <numbers>

#include "fatpivot/analysis/beta.hpp"
#include "fatpivot/analysis/entropy.hpp"

namespace fatpivot::analysis {

const char* to_string(BoundKind k) noexcept { return k == BoundKind::Upper ? "upper" : "lower"; }

namespace {

// (t+1) B(t+1,t+1) / (eps^{t+2} (1-eps)^t)
double sampling_factor(int t, double eps) {
  return (t + 1) * beta_function(t + 1, t + 1) / (std::pow(eps, t + 2) * std::pow(1.0 - eps, t));
}

}  // namespace

BoundConstants bound_constants(BoundKind kind, SampleParams params, double eps) {
  const int k = params.k();
  const int t = params.t();
  BoundConstants b{kind, eps, 0.0, 0.0, 0.0, 0.0, false, {}};
  b.tilde_H = harmonic(static_cast<std::uint64_t>(k + 1)) - harmonic(static_cast<std::uint64_t>(t + 1));

  if (kind == BoundKind::Upper) {
    b.tilde_h = harmonic(static_cast<std::uint64_t>(k)) - harmonic(static_cast<std::uint64_t>(t));
    if (!(eps > 0.0 && eps < 1.0)) {
      b.diagnostic = "upper bound requires eps in (0,1)";
      return b;
    }
    const double denom = b.tilde_H - 4.0 * eps * b.tilde_h;
    b.c = 1.0 / denom;
    b.d = sampling_factor(t, eps);
    if (!(denom > 0.0)) {
      b.diagnostic = "upper bound constant c is negative (H~ - 4 eps h~ = " + std::to_string(denom) + ")";
      return b;
    }
  } else {
    if (!(eps > 0.0 && eps < 1.0 / std::numbers::e)) {
      b.diagnostic = "lower bound requires eps in (0,1/e)";
      return b;
    }
    b.c = 1.0 / (b.tilde_H + 4.0 * eps + eps * std::log(1.0 / eps));
    b.d = (b.c * std::log(3.0) - 1.0) * sampling_factor(t, eps);
    if (!(b.d >= 0.0)) {
      b.diagnostic = "lower bound constant d is negative (" + std::to_string(b.d) + ")";
      return b;
    }
  }
  b.valid = true;
  return b;
}

double sorting_lower_bound(const UniverseDistribution& q, std::uint64_t n) {
  const auto nn = static_cast<double>(n);
  return entropy(q, LogBase::Two) * nn - nn / std::numbers::ln2;
}

double chernoff_binomial_bound(std::uint64_t n, double delta) {
  return 2.0 * std::exp(-2.0 * delta * delta * static_cast<double>(n));
}

double chernoff_multinomial_bound(std::uint64_t n, double delta) {
  return 3.0 * std::exp(-delta * delta * static_cast<double>(n) / 25.0);
}

double entropy_concentration_rho(std::uint64_t u, std::uint64_t n, double delta, double h) {
  if (u < 1 || n < 1) throw ValidationError("entropy_concentration_rho: u and n must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw ValidationError("entropy_concentration_rho: delta must lie in (0,1)");
  if (delta < std::sqrt(20.0 * static_cast<double>(u) / static_cast<double>(n)))
    throw ValidationError("entropy_concentration_rho: delta below sqrt(20u/n)");
  const double tail = std::exp(-delta * delta * static_cast<double>(n) / 25.0);
  const auto uu = static_cast<double>(u);
  return hoelder_constant(h) * std::pow(delta, h) * (1.0 - 3.0 * tail) + 3.0 * uu * std::log(uu) * tail;
}

double binomial_lower_tail(std::uint64_t n, double p, std::uint64_t k) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("binomial_lower_tail: p must lie in [0,1]");
  if (k == 0) return 0.0;
  if (k > n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  const auto nn = static_cast<double>(n);
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < k; ++i) {
    const auto ii = static_cast<double>(i);
    const double log_term = std::lgamma(nn + 1) - std::lgamma(ii + 1) - std::lgamma(nn - ii + 1) +
                            ii * lp + (nn - ii) * lq;
    sum += std::exp(log_term);
  }
  return std::min(sum, 1.0);
}

HeightBoundConstants height_constants(SampleParams params, double c, double alpha) {
  if (!(alpha > 0.51 && alpha < 1.0)) throw ValidationError("height_constants: alpha must lie in (0.51,1)");
  if (!(c > 0.0)) throw ValidationError("height_constants: c must be positive");
  HeightBoundConstants h{params.k(), c, alpha, 0.0, 0.0, 0.0, false};
  const double upper_tail = 1.0 - beta_median_cdf(alpha - 0.01, params.t());
  h.p = 0.99 - 2.0 * upper_tail;
  h.delta = h.p - (1.0 / c) * (1.0 / std::log(1.0 / alpha) + 1.0);
  h.eta = 1.0 - 2.0 * c * h.delta * h.delta;
  h.valid = h.delta > 0.0;
  return h;
}

HeightBoundConstants optimize_height_alpha(SampleParams params, double c) {
  HeightBoundConstants best = height_constants(params, c, 0.511);
  for (int i = 511; i <= 999; ++i) {
    const HeightBoundConstants h = height_constants(params, c, i / 1000.0);
    if (h.valid && (!best.valid || h.eta < best.eta)) best = h;
  }
  return best;
}

}  // namespace fatpivot::analysis
