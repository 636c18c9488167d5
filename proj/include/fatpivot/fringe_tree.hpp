#pragma once

// k-fringe-balanced search trees.
//
// Inner nodes hold distinct pivot values; leaves buffer up to k-1 elements in
// insertion order (unsorted). Inserting into a leaf appends without any
// comparison. When a buffer reaches k elements it splits: the median of the k
// becomes an inner node, all k buffered elements (the median itself included)
// are compared to it, copies of the median are dropped, and the rest go to
// the new left/right leaves in buffer order. An insertion that meets its own
// value at an inner node leaves the tree unchanged.
//
// Construction is single-owner; a saturated tree (all u values at inner
// nodes) never changes again and may be shared read-only.

#include <cstdint>
#include <string>

#include "fatpivot/core.hpp"
#include "fatpivot/random.hpp"
#include "fatpivot/tree.hpp"

namespace fatpivot {

class FringeTree {
 public:
  /// `universe_size` is the declared u; saturation means u inner nodes.
  FringeTree(SampleParams params, std::size_t universe_size, bool record_events = true);

  /// Throws ValidationError if e.value lies outside [1..u].
  void insert(Element e);

  SampleParams params() const noexcept { return params_; }
  std::size_t universe_size() const noexcept { return universe_size_; }
  const Tree& shape() const noexcept { return tree_; }
  /// Comparisons spent by all insertions so far.
  const ComparisonLedger& ledger() const noexcept { return ledger_; }
  bool saturated() const noexcept { return tree_.inner_count() == universe_size_; }

  SearchResult search(Value x) const { return tree_.search(x); }
  std::size_t height() const { return tree_.height(); }
  /// Throws StateError unless saturated.
  NodeDepthVector node_depths() const { return tree_.node_depths(universe_size_); }
  std::string shape_digest() const { return tree_.shape_digest(); }

 private:
  SampleParams params_;
  std::size_t universe_size_;
  Tree tree_;
  ComparisonLedger ledger_;
};

/// Successive insertion of seq into an initially empty tree.
FringeTree build_fringe_tree(const InputSequence& seq, SampleParams params,
                             std::size_t universe_size, bool record_events = true);

struct SaturatedBuild {
  FringeTree tree;
  std::uint64_t insertions;
};

/// Inserts iid D(q) draws (ids 1, 2, ...) until saturation. Throws
/// BudgetError when max_insertions draws do not suffice.
SaturatedBuild build_until_saturated(const UniverseDistribution& q, SampleParams params,
                                     Seed seed, std::uint64_t max_insertions);

}  // namespace fatpivot
