#pragma once

// Entropy-type quantities: harmonic numbers, Shannon and Quicksort entropy,
// the optimality factor alpha_k, the expected entropy of a Beta(t+1, t+1)
// split, the Hoelder constant of the entropy function, and the pivot split
// (V1, hit, V2, Z1, Z2) with its entropy aggregation identity.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fatpivot/analysis/rational.hpp"
#include "fatpivot/core.hpp"

namespace fatpivot::analysis {

/// H_0 = 0, H_m = 1 + 1/2 + ... + 1/m.
double harmonic(std::uint64_t m);

enum class LogBase { Two, E };

/// sum w_i log(1 / w_i); zero entries contribute nothing.
double entropy(std::span<const double> w, LogBase base);
double entropy(const UniverseDistribution& q, LogBase base);

/// Q(w) = sum_{i<j} w_i w_j / (w_i + ... + w_j); weights are non-negative,
/// ranges with zero denominator contribute nothing.
double qs_entropy(std::span<const double> w);
double qs_entropy(const UniverseDistribution& q);
double qs_entropy(const Profile& x);
/// Exact rational Q(x).
Rational qs_entropy_exact(const Profile& x);

/// ln(2) / (H_{k+1} - H_{(k+1)/2}); ValidationError for even or non-positive k.
double alpha_k(int k);

/// E[H_ln(Pi, 1 - Pi)] for Pi ~ Beta(t+1, t+1), closed form H_{k+1} - H_{t+1}.
double expected_beta_entropy(int t);
/// The same expectation by numerical integration against the Beta density.
double expected_beta_entropy_quadrature(int t);

/// C_h = (int_0^1 |ln z + 1|^{1/(1-h)} dz)^{1-h}, integrated after z = e^{-s}
/// in log-scaled form so that exponents up to ~1e4 stay finite.
/// ValidationError unless 0 < h < 1.
double hoelder_constant(double h);

/// Pivot split of q at value v: probabilities of going left, of hitting v,
/// of going right, and the renormalized ("zoomed-in") sub-distributions
/// (absent at the boundaries).
struct PivotSplit {
  Value v;
  double left;   // V1
  double hit;    // q_v
  double right;  // V2
  std::optional<UniverseDistribution> zoom_left;
  std::optional<UniverseDistribution> zoom_right;
};

PivotSplit split_at(const UniverseDistribution& q, Value v);

/// H(q) - [H(V1, hit, V2) + V1 H(Z1) + V2 H(Z2)] in bits; zero up to rounding.
double entropy_aggregation_residual(const UniverseDistribution& q, Value v);

}  // namespace fatpivot::analysis
