#include "fatpivot/analysis/beta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace fatpivot::analysis {

namespace {

using PascalTable = std::array<std::array<double, kMaxTableK + 1>, kMaxTableK + 1>;

const PascalTable& pascal() {
  static const PascalTable table = [] {
    PascalTable t{};
    for (int n = 0; n <= kMaxTableK; ++n) {
      t[n][0] = t[n][n] = 1.0;
      for (int j = 1; j < n; ++j) t[n][j] = t[n - 1][j - 1] + t[n - 1][j];
    }
    return t;
  }();
  return table;
}

void check_t(int t) {
  if (t < 0 || 2 * t + 1 > kMaxTableK)
    throw ValidationError("beta law: need 0 <= t with 2t+1 <= " + std::to_string(kMaxTableK));
}

}  // namespace

double binomial_coefficient(int n, int j) {
  if (n < 0 || n > kMaxTableK) throw ValidationError("binomial_coefficient: n out of table range");
  if (j < 0 || j > n) return 0.0;
  return pascal()[n][j];
}

double beta_function(int a, int b) {
  if (a < 1 || b < 1) throw ValidationError("beta_function: arguments must be positive");
  // B(a,b) = 1 / ((a+b-1) C(a+b-2, a-1))
  return 1.0 / (static_cast<double>(a + b - 1) * binomial_coefficient(a + b - 2, a - 1));
}

double beta_median_density(double z, int t) {
  check_t(t);
  if (z < 0.0 || z > 1.0) return 0.0;
  return std::pow(z, t) * std::pow(1.0 - z, t) / beta_function(t + 1, t + 1);
}

double beta_median_cdf(double x, int t) {
  check_t(t);
  x = std::clamp(x, 0.0, 1.0);
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const int k = 2 * t + 1;
  const double y = 1.0 - x;
  double sum = 0.0;
  for (int j = t + 1; j <= k; ++j)
    sum += binomial_coefficient(k, j) * std::pow(x, j) * std::pow(y, k - j);
  return std::min(sum, 1.0);
}

std::vector<double> pivot_pmf(const UniverseDistribution& q, SampleParams params) {
  const int t = params.t();
  std::vector<double> pmf(q.size());
  double cum = 0.0;
  double prev_cdf = 0.0;
  for (std::size_t v = 0; v < q.size(); ++v) {
    cum += q.weights()[v];
    const double c = (v + 1 == q.size()) ? 1.0 : beta_median_cdf(cum, t);
    pmf[v] = c - prev_cdf;
    prev_cdf = c;
  }
  return pmf;
}

}  // namespace fatpivot::analysis
