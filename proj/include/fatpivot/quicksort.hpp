#pragma once

// Fat-pivot median-of-k Quicksort on order-preserving lists.
//
// One partitioning step on a sublist of m >= k elements:
//   * the pivot is the median of the first k elements (insertion-sort
//     selection, counted in median_cmps);
//   * every one of the m elements, the pivot element included, is compared
//     once to the pivot (m partition comparisons, each logged as an event);
//   * elements go to <, =, > lists in their original relative order; the =
//     list is final, the other two recurse.
// Sublists of at most k-1 elements are handed to an instrumented Insertionsort
// and become leaves of the recursion tree, holding the sublist in input order.

#include <cstdint>
#include <span>

#include "fatpivot/core.hpp"
#include "fatpivot/tree.hpp"

namespace fatpivot {

struct QuicksortOptions {
  /// Keep the per-comparison event log (needed for the recursion-tree
  /// equivalence check, expensive for large inputs).
  bool record_events = true;
};

struct SortOutcome {
  InputSequence sorted;
  Tree tree;
  ComparisonLedger ledger;
};

SortOutcome quicksort_k(const InputSequence& seq, SampleParams params,
                        QuicksortOptions options = {});

/// Element of rank t+1 of a sample of odd size k, found by insertion sort on
/// a copy. Comparisons go to ledger.median_cmps only (never to the event
/// log); at most k(k-1)/2 of them.
Element select_median(std::span<const Element> sample, ComparisonLedger& ledger);

/// Stable insertion sort with ternary comparisons, counted into `cmps`.
void insertion_sort(std::span<Element> data, std::uint64_t& cmps);

/// partition_cmps - steps: the count under the convention where the pivot is
/// not compared with itself. Throws StateError if steps > partition_cmps.
std::uint64_t sedgewick_count(const ComparisonLedger& ledger);

/// Median-selection cost constant c with median_cmps <= c*k per step.
constexpr double median_cost_constant(SampleParams p) noexcept { return (p.k() - 1) / 2.0; }

}  // namespace fatpivot
