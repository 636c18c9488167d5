#include "fatpivot/fringe_tree.hpp"

#include <span>
#include <vector>

#include "fatpivot/inputgen.hpp"
#include "fatpivot/quicksort.hpp"

namespace fatpivot {

FringeTree::FringeTree(SampleParams params, std::size_t universe_size, bool record_events)
    : params_(params), universe_size_(universe_size) {
  if (universe_size == 0) throw ValidationError("fringe tree: universe size must be positive");
  ledger_.log_events = record_events;
}

void FringeTree::insert(Element e) {
  if (e.value < 1 || static_cast<std::size_t>(e.value) > universe_size_)
    throw ValidationError("fringe tree: value outside the universe");

  Tree::NodeId at = tree_.root();
  while (tree_.node(at).inner) {
    const Tree::Node& n = tree_.node(at);
    switch (ledger_.partition_compare(e, n.pivot)) {
      case Outcome::Equal: return;
      case Outcome::Less: at = n.left; break;
      case Outcome::Greater: at = n.right; break;
    }
  }

  tree_.append_to_leaf(at, e);
  const auto k = static_cast<std::size_t>(params_.k());
  if (tree_.node(at).buffer.size() <= k - 1) return;

  const std::vector<Element> buffer = tree_.node(at).buffer;
  const Value pivot = select_median(buffer, ledger_).value;
  std::vector<Element> left, right;
  for (const Element& b : buffer) {
    switch (ledger_.partition_compare(b, pivot)) {
      case Outcome::Less: left.push_back(b); break;
      case Outcome::Greater: right.push_back(b); break;
      case Outcome::Equal: break;
    }
  }
  ++ledger_.steps;
  tree_.split_leaf(at, pivot, std::move(left), std::move(right));
}

FringeTree build_fringe_tree(const InputSequence& seq, SampleParams params,
                             std::size_t universe_size, bool record_events) {
  FringeTree tree(params, universe_size, record_events);
  for (const Element& e : seq.elements()) tree.insert(e);
  return tree;
}

SaturatedBuild build_until_saturated(const UniverseDistribution& q, SampleParams params,
                                     Seed seed, std::uint64_t max_insertions) {
  if (max_insertions < 1) throw ValidationError("build_until_saturated: budget must be >= 1");
  FringeTree tree(params, q.size(), /*record_events=*/false);
  const IidSampler draw(q);
  Rng rng(seed);
  std::uint64_t used = 0;
  while (!tree.saturated()) {
    if (used == max_insertions)
      throw BudgetError("build_until_saturated: not saturated after " +
                        std::to_string(max_insertions) + " insertions");
    ++used;
    tree.insert({draw(rng), static_cast<ElementId>(used)});
  }
  return {std::move(tree), used};
}

}  // namespace fatpivot
