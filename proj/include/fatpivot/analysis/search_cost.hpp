#pragma once

// Expected search cost in random saturated k-fringe-balanced trees, and the
// closed forms it reduces to for k = 1.

#include "fatpivot/analysis/rational.hpp"
#include "fatpivot/core.hpp"

namespace fatpivot::analysis {

/// Exact E[A_q] = E[Γᵀq] for the saturated tree grown from iid D(q) draws.
///
/// Memoized over contiguous value ranges [i..j] (a subtree always sees a
/// renormalized contiguous slice of q):
///
///   E(i,j) = 1 + sum_{v=i}^{j} P(pivot = v | i..j) * (s_{v-1} E(i,v-1) + (1 - s_v) E(v+1,j))
///
/// with s the range-local CDF and E of an empty range 0. O(u^2) memory,
/// O(u^3 k) time. ValidationError on a zero-weight range.
double expected_search_cost_dp(const UniverseDistribution& q, SampleParams params);

/// 2 Q(q) + 1, the k = 1 expected search cost.
double allen_munro_cost(const UniverseDistribution& q);

/// Average comparisons of classic (k = 1) Quicksort on a random permutation
/// of the multiset x, pivot not compared with itself: 2 Q(x) + n - u.
/// ValidationError unless every multiplicity is >= 1.
double sedgewick_exact_multiset(const Profile& x);
Rational sedgewick_exact_multiset_rational(const Profile& x);

}  // namespace fatpivot::analysis
