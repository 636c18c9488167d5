#include "fatpivot/quicksort.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace fatpivot {

void insertion_sort(std::span<Element> data, std::uint64_t& cmps) {
  for (std::size_t i = 1; i < data.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      ++cmps;
      if (compare(data[j - 1].value, data[j].value) != Outcome::Greater) break;
      std::swap(data[j - 1], data[j]);
    }
  }
}

Element select_median(std::span<const Element> sample, ComparisonLedger& ledger) {
  if (sample.empty() || sample.size() % 2 == 0)
    throw ValidationError("select_median: sample size must be odd");
  std::vector<Element> copy(sample.begin(), sample.end());
  insertion_sort(copy, ledger.median_cmps);
  return copy[copy.size() / 2];
}

std::uint64_t sedgewick_count(const ComparisonLedger& ledger) {
  if (ledger.steps > ledger.partition_cmps)
    throw StateError("sedgewick_count: more partitioning steps than partition comparisons");
  return ledger.partition_cmps - ledger.steps;
}

namespace {

struct SortTask {
  std::vector<Element> list;
  Tree::NodeId node;
};
struct EmitTask {
  std::vector<Element> list;
};

}  // namespace

SortOutcome quicksort_k(const InputSequence& seq, SampleParams params, QuicksortOptions options) {
  SortOutcome out;
  out.ledger.log_events = options.record_events;
  const auto k = static_cast<std::size_t>(params.k());

  std::vector<Element> sorted;
  sorted.reserve(seq.size());

  // Explicit stack in place of recursion; tasks are pushed so that output
  // segments are produced left to right.
  std::vector<std::variant<SortTask, EmitTask>> stack;
  stack.emplace_back(SortTask{{seq.elements().begin(), seq.elements().end()}, out.tree.root()});

  while (!stack.empty()) {
    auto task = std::move(stack.back());
    stack.pop_back();
    if (auto* emit = std::get_if<EmitTask>(&task)) {
      sorted.insert(sorted.end(), emit->list.begin(), emit->list.end());
      continue;
    }
    auto& [list, node] = std::get<SortTask>(task);

    if (list.size() <= k - 1) {
      out.tree.set_leaf_buffer(node, list);
      insertion_sort(list, out.ledger.insertionsort_cmps);
      sorted.insert(sorted.end(), list.begin(), list.end());
      continue;
    }

    const Value pivot = select_median(std::span(list).first(k), out.ledger).value;
    std::vector<Element> less, equal, greater;
    for (const Element& e : list) {
      switch (out.ledger.partition_compare(e, pivot)) {
        case Outcome::Less: less.push_back(e); break;
        case Outcome::Equal: equal.push_back(e); break;
        case Outcome::Greater: greater.push_back(e); break;
      }
    }
    ++out.ledger.steps;

    const auto [left, right] = out.tree.split_leaf(node, pivot, {}, {});
    stack.emplace_back(SortTask{std::move(greater), right});
    stack.emplace_back(EmitTask{std::move(equal)});
    stack.emplace_back(SortTask{std::move(less), left});
  }

  out.sorted = InputSequence::from_elements(std::move(sorted));
  return out;
}

}  // namespace fatpivot
