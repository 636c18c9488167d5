#include "fatpivot/analysis/search_cost.hpp"

#include <algorithm>
#include <vector>

#include "fatpivot/analysis/beta.hpp"
#include "fatpivot/analysis/entropy.hpp"

namespace fatpivot::analysis {

double expected_search_cost_dp(const UniverseDistribution& q, SampleParams params) {
  const std::size_t u = q.size();
  const int t = params.t();
  const auto w = q.weights();

  std::vector<double> prefix(u + 1, 0.0);
  for (std::size_t i = 0; i < u; ++i) prefix[i + 1] = prefix[i] + w[i];

  // cost[i][j] for 1 <= i, j <= u; entries with j < i (empty ranges) stay 0.
  const std::size_t stride = u + 2;
  std::vector<double> cost(stride * stride, 0.0);
  const auto at = [&](std::size_t i, std::size_t j) -> double& { return cost[i * stride + j]; };

  std::vector<double> local_cdf(u + 1);
  for (std::size_t len = 1; len <= u; ++len) {
    for (std::size_t i = 1; i + len - 1 <= u; ++i) {
      const std::size_t j = i + len - 1;
      const double mass = prefix[j] - prefix[i - 1];
      if (!(mass > 0.0)) throw ValidationError("expected_search_cost_dp: zero-weight range");

      // local_cdf[r] = s_{i-1+r}, r = 0..len
      local_cdf[0] = 0.0;
      for (std::size_t r = 1; r < len; ++r)
        local_cdf[r] = std::min(1.0, (prefix[i - 1 + r] - prefix[i - 1]) / mass);
      local_cdf[len] = 1.0;

      double acc = 0.0;
      double prev_beta = 0.0;
      for (std::size_t r = 1; r <= len; ++r) {
        const std::size_t v = i - 1 + r;
        const double beta = (r == len) ? 1.0 : beta_median_cdf(local_cdf[r], t);
        const double p_pivot = beta - prev_beta;
        prev_beta = beta;
        const double left = v > i ? local_cdf[r - 1] * at(i, v - 1) : 0.0;
        const double right = v < j ? (1.0 - local_cdf[r]) * at(v + 1, j) : 0.0;
        acc += p_pivot * (left + right);
      }
      at(i, j) = 1.0 + acc;
    }
  }
  return at(1, u);
}

double allen_munro_cost(const UniverseDistribution& q) { return 2.0 * qs_entropy(q) + 1.0; }

Rational sedgewick_exact_multiset_rational(const Profile& x) {
  for (auto c : x.counts())
    if (c == 0) throw ValidationError("sedgewick_exact_multiset: every multiplicity must be >= 1");
  return Rational(2) * qs_entropy_exact(x) + static_cast<std::int64_t>(x.total()) -
         static_cast<std::int64_t>(x.universe_size());
}

double sedgewick_exact_multiset(const Profile& x) {
  for (auto c : x.counts())
    if (c == 0) throw ValidationError("sedgewick_exact_multiset: every multiplicity must be >= 1");
  return 2.0 * qs_entropy(x) + static_cast<double>(x.total()) - static_cast<double>(x.universe_size());
}

}  // namespace fatpivot::analysis
