#pragma once

// Closed-form bound constants and tail-bound evaluators.
//
// The entropy sandwich for the expected search cost: for every eps in the
// admissible range
//
//     c_lower * H_ln(q) - d_lower  <=  E[A_q]  <=  c_upper * H_ln(q) + d_upper,
//
// non-asymptotically and for every stochastic vector q, provided the
// constants are flagged valid.

#include <cstdint>
#include <string>

#include "fatpivot/core.hpp"

namespace fatpivot::analysis {

enum class BoundKind { Upper, Lower };

const char* to_string(BoundKind k) noexcept;

struct BoundConstants {
  BoundKind kind;
  double eps;
  double c;
  double d;
  double tilde_H;  ///< H_{k+1} - H_{t+1}
  double tilde_h;  ///< H_k - H_t (upper kind only, else 0)
  bool valid;
  std::string diagnostic;  ///< why the constants are invalid; empty when valid
};

/// Upper: c = 1 / (H~ - 4 eps h~), d = (t+1) B(t+1,t+1) / (eps^{t+2} (1-eps)^t),
///        valid iff eps in (0,1) and H~ > 4 eps h~ (so c >= 0).
/// Lower: c = 1 / (H~ + 4 eps + eps ln(1/eps)), d = (c ln 3 - 1) * (same factor),
///        valid iff eps in (0, 1/e) and d >= 0.
/// Never throws for a bad eps; the result is flagged instead.
BoundConstants bound_constants(BoundKind kind, SampleParams params, double eps);

/// H_ld(q) n - n / ln 2: leading terms of the expected ternary comparisons
/// any comparison-based method needs on n iid D(q) elements. The
/// o(n^{(1+nu)/2+eps}) error term is not included; for u = 1 (zero entropy)
/// the bound is negative and vacuous.
double sorting_lower_bound(const UniverseDistribution& q, std::uint64_t n);

/// 2 exp(-2 delta^2 n) bounds P(|X/n - p| >= delta) for X ~ Bin(n, p).
double chernoff_binomial_bound(std::uint64_t n, double delta);
/// 3 exp(-delta^2 n / 25) bounds P(sum |X_i/n - p_i| >= delta) for a
/// multinomial X; only meaningful when delta >= sqrt(20u/n), which the
/// caller (who knows u) must check. Values above 1 are vacuous.
double chernoff_multinomial_bound(std::uint64_t n, double delta);

/// rho <= C_h delta^h (1 - 3 e^{-delta^2 n/25}) + 3 u ln(u) e^{-delta^2 n/25}
/// bounds |E[H_ln(X/n)] - H_ln(p)| for X ~ Mult(n, p). ValidationError unless
/// delta in (0,1), delta >= sqrt(20u/n) and h in (0,1).
double entropy_concentration_rho(std::uint64_t u, std::uint64_t n, double delta, double h);

/// P(Bin(n, p) < k), summed exactly in log space.
double binomial_lower_tail(std::uint64_t n, double p, std::uint64_t k);

/// Constants of the logarithmic-height tail bound: a k-fringe-balanced tree
/// from n iid elements has height >= c ln n with probability <= 2 n^eta
/// (for astronomically large n), where
///   p     = 0.99 - 2 (1 - I_{alpha-0.01}(t+1, t+1)),
///   delta = p - (1/c) (1 / ln(1/alpha) + 1),
///   eta   = 1 - 2 c delta^2,
/// valid iff delta > 0.
struct HeightBoundConstants {
  int k;
  double c;
  double alpha;
  double p;
  double delta;
  double eta;
  bool valid;
};

/// ValidationError unless alpha in (0.51, 1) and c > 0.
HeightBoundConstants height_constants(SampleParams params, double c, double alpha);

/// Valid constants with the smallest eta over the grid alpha = 0.511, 0.512, ...,
/// 0.999. If no grid point is valid the result has valid == false.
HeightBoundConstants optimize_height_alpha(SampleParams params, double c);

}  // namespace fatpivot::analysis
