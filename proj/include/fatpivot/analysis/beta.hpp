#pragma once

// The median of k = 2t+1 iid uniforms is Beta(t+1, t+1). With integer
// parameters its CDF is the binomial upper tail
//
//     I_x(t+1, t+1) = sum_{j=t+1}^{2t+1} C(2t+1, j) x^j (1-x)^{2t+1-j},
//
// evaluated here directly from a Pascal table (no incomplete-beta numerics).
// Supported sample sizes: k <= kMaxTableK.

#include <vector>

#include "fatpivot/core.hpp"

namespace fatpivot::analysis {

inline constexpr int kMaxTableK = 99;

/// C(n, j) for 0 <= j <= n <= kMaxTableK, as double.
double binomial_coefficient(int n, int j);

/// B(a, b) = (a-1)! (b-1)! / (a+b-1)! for positive integers with a+b-1 <= kMaxTableK.
double beta_function(int a, int b);

/// Density z^t (1-z)^t / B(t+1, t+1).
double beta_median_density(double z, int t);

/// P(median of 2t+1 iid U(0,1) <= x); x is clamped to [0, 1].
double beta_median_cdf(double x, int t);

/// P(pivot = v) for the median of k iid D(q) draws:
/// I_{F(v)}(t+1,t+1) - I_{F(v-1)}(t+1,t+1). Index v-1.
std::vector<double> pivot_pmf(const UniverseDistribution& q, SampleParams params);

}  // namespace fatpivot::analysis
