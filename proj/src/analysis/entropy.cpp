#include "fatpivot/analysis/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fatpivot/analysis/beta.hpp"

namespace fatpivot::analysis {

double harmonic(std::uint64_t m) {
  // Summed from the small terms up for accuracy.
  double s = 0.0;
  for (std::uint64_t i = m; i >= 1; --i) s += 1.0 / static_cast<double>(i);
  return s;
}

double entropy(std::span<const double> w, LogBase base) {
  double h = 0.0;
  for (double x : w)
    if (x > 0.0) h -= x * std::log(x);
  return base == LogBase::E ? h : h / std::numbers::ln2;
}

double entropy(const UniverseDistribution& q, LogBase base) { return entropy(q.weights(), base); }

double qs_entropy(std::span<const double> w) {
  double q = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    double denom = w[i];
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      denom += w[j];
      if (denom > 0.0) q += w[i] * w[j] / denom;
    }
  }
  return q;
}

double qs_entropy(const UniverseDistribution& q) { return qs_entropy(q.weights()); }

double qs_entropy(const Profile& x) {
  std::vector<double> w(x.counts().begin(), x.counts().end());
  return qs_entropy(w);
}

Rational qs_entropy_exact(const Profile& x) {
  const auto c = x.counts();
  Rational q(0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto denom = static_cast<std::int64_t>(c[i]);
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      denom += static_cast<std::int64_t>(c[j]);
      if (denom > 0)
        q += Rational(static_cast<std::int64_t>(c[i] * c[j]), denom);
    }
  }
  return q;
}

double alpha_k(int k) {
  const SampleParams p = SampleParams::from_k(k);
  return std::numbers::ln2 /
         (harmonic(static_cast<std::uint64_t>(p.k() + 1)) - harmonic(static_cast<std::uint64_t>(p.t() + 1)));
}

double expected_beta_entropy(int t) {
  if (t < 0) throw ValidationError("expected_beta_entropy: t must be non-negative");
  return harmonic(static_cast<std::uint64_t>(2 * t + 2)) - harmonic(static_cast<std::uint64_t>(t + 1));
}

double expected_beta_entropy_quadrature(int t) {
  if (t < 0) throw ValidationError("expected_beta_entropy: t must be non-negative");
  const auto f = [t](double z) {
    if (z <= 0.0 || z >= 1.0) return 0.0;
    const double h = -z * std::log(z) - (1.0 - z) * std::log1p(-z);
    return h * beta_median_density(z, t);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, 0.0, 1.0, 1e-14);
}

double hoelder_constant(double h) {
  if (!(h > 0.0 && h < 1.0)) throw ValidationError("hoelder_constant: h must lie in (0,1)");
  const double m = 1.0 / (1.0 - h);
  // After z = e^{-s} the integrand is |1-s|^m e^{-s} on [0, inf). Its log
  // peaks at s = 1+m with value m ln m - 1 - m; integrate the integrand
  // scaled by exp(-shift) and add the shift back in log space.
  const double shift = std::max(0.0, m * std::log(m) - 1.0 - m);
  const auto f = [m, shift](double s) {
    const double a = std::abs(1.0 - s);
    if (a == 0.0) return 0.0;
    return std::exp(m * std::log(a) - s - shift);
  };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  constexpr unsigned depth = 20;
  constexpr double tol = 1e-12;
  const double peak = 1.0 + m;
  const double spread = 10.0 * std::sqrt(m) + 10.0;
  double integral = GK::integrate(f, 0.0, 1.0, depth, tol);
  integral += GK::integrate(f, 1.0, peak, depth, tol);
  integral += GK::integrate(f, peak, peak + spread, depth, tol);
  integral += GK::integrate(f, peak + spread, std::numeric_limits<double>::infinity(), depth, tol);
  return std::exp((1.0 - h) * (shift + std::log(integral)));
}

PivotSplit split_at(const UniverseDistribution& q, Value v) {
  if (v < 1 || static_cast<std::size_t>(v) > q.size())
    throw ValidationError("split_at: pivot value outside the universe");
  const auto w = q.weights();
  const auto idx = static_cast<std::size_t>(v) - 1;
  PivotSplit s{v, 0.0, w[idx], 0.0, std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < idx; ++i) s.left += w[i];
  for (std::size_t i = idx + 1; i < w.size(); ++i) s.right += w[i];
  if (idx > 0) s.zoom_left = UniverseDistribution::normalize(w.first(idx));
  if (idx + 1 < w.size()) s.zoom_right = UniverseDistribution::normalize(w.subspan(idx + 1));
  return s;
}

double entropy_aggregation_residual(const UniverseDistribution& q, Value v) {
  const PivotSplit s = split_at(q, v);
  const double top[] = {s.left, s.hit, s.right};
  double rhs = entropy(top, LogBase::Two);
  if (s.zoom_left) rhs += s.left * entropy(*s.zoom_left, LogBase::Two);
  if (s.zoom_right) rhs += s.right * entropy(*s.zoom_right, LogBase::Two);
  return entropy(q, LogBase::Two) - rhs;
}

}  // namespace fatpivot::analysis
