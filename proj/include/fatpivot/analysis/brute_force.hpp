#pragma once

// Exhaustive oracles: exact expected comparison counts of quicksort_k on
// small inputs, by enumerating every arrangement of a multiset or every value
// sequence of an iid model.

#include <cstdint>

#include "fatpivot/analysis/rational.hpp"
#include "fatpivot/core.hpp"

namespace fatpivot::analysis {

enum class CostConvention {
  PartitionCmps,  ///< partition_cmps: every sublist element, pivot included
  Sedgewick,   ///< partition_cmps - steps
};

inline constexpr std::uint64_t kBruteForceMaxN = 9;
inline constexpr std::size_t kBruteForceMaxU = 4;

/// Average over all distinct arrangements of the multiset x (each is equally
/// likely under a uniformly random permutation). SizeError beyond
/// kBruteForceMaxN elements; ValidationError for a zero total.
Rational brute_force_expected_cost(const Profile& x, SampleParams params, CostConvention convention);

/// Expectation over all u^n sequences weighted by prod q_{U_i}. SizeError
/// beyond kBruteForceMaxN elements or kBruteForceMaxU values.
double brute_force_expected_cost(const UniverseDistribution& q, std::uint64_t n, SampleParams params,
                                 CostConvention convention);

}  // namespace fatpivot::analysis
