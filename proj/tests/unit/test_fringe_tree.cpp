#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "fatpivot/fringe_tree.hpp"
#include "fatpivot/inputgen.hpp"
#include "fatpivot/quicksort.hpp"

using namespace fatpivot;

namespace {

FringeTree build(std::vector<Value> v, int k, std::size_t u) {
  return build_fringe_tree(InputSequence::from_values(v), SampleParams::from_k(k), u);
}

// Five-value example tree: root 4, left child 2 with children 1 and 3, right child 5.
FringeTree figure_tree() { return build({4, 2, 5, 1, 3}, 1, 5); }

}  // namespace

TEST_CASE("first insertion buffers without comparing") {
  FringeTree t(SampleParams::from_k(3), 4);
  t.insert({1, 1});
  CHECK(t.shape_digest() == "[1]");
  CHECK(t.ledger().partition_cmps == 0);
  CHECK(t.ledger().median_cmps == 0);
  CHECK(t.height() == 0);
  CHECK(t.search(1).path_cost == 0);
  CHECK(t.search(1).outcome == SearchOutcome::FoundInLeaf);
  CHECK(t.search(2).outcome == SearchOutcome::Absent);
  CHECK_THROWS_AS(t.insert({5, 2}), ValidationError);
  CHECK_THROWS_AS(t.insert({0, 2}), ValidationError);
}

TEST_CASE("three equal keys split into one inner node") {
  const FringeTree t = build({1, 1, 1}, 3, 1);
  CHECK(t.shape_digest() == "(1 [] [])");
  CHECK(t.ledger().partition_cmps == 3);
  CHECK(t.ledger().steps == 1);
  CHECK(t.saturated());
  CHECK(t.node_depths().depths == std::vector<std::uint32_t>{1});
}

TEST_CASE("nine-key insertion order") {
  CHECK(build({7, 4, 2, 9, 1, 3, 8, 5, 6}, 1, 9).shape_digest() ==
        "(7 (4 (2 (1 [] []) (3 [] [])) (5 [] (6 [] []))) (9 (8 [] []) []))");
}

TEST_CASE("five-value example tree") {
  const FringeTree t = figure_tree();
  CHECK(t.shape_digest() == "(4 (2 (1 [] []) (3 [] [])) (5 [] []))");
  CHECK(t.saturated());
  CHECK(t.node_depths().depths == std::vector<std::uint32_t>{3, 2, 3, 1, 2});
  CHECK(t.height() == 3);
  CHECK(t.search(3).path_cost == 3);
  CHECK(t.search(3).outcome == SearchOutcome::FoundAtInner);
  CHECK(t.search(4).path_cost == 1);
  CHECK(t.shape().validate(0) == "");
}

TEST_CASE("small shapes") {
  CHECK(Tree().shape_digest() == "[]");
  CHECK(Tree().height() == 0);
  Tree t;
  t.split_leaf(t.root(), 2, {{1, 1}}, {});
  CHECK(t.shape_digest() == "(2 [1] [])");
  CHECK(build({2, 1, 3}, 1, 3).node_depths().depths == std::vector<std::uint32_t>{2, 1, 2});
  CHECK(build({1, 2, 3, 4}, 1, 4).height() == 4);
}

TEST_CASE("node depths need saturation") {
  const FringeTree t = build({1, 2}, 3, 2);
  CHECK_FALSE(t.saturated());
  CHECK_THROWS_AS(t.node_depths(), StateError);
}

TEST_CASE("duplicates of inner values leave the tree unchanged") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + 2 * static_cast<int>(rng.below(3));
    const std::size_t u = 1 + rng.below(10);
    FringeTree t = build_fringe_tree(sample_iid(UniverseDistribution::uniform(u), 60, rng),
                                     SampleParams::from_k(k), u);
    const std::string before = t.shape_digest();
    for (Value v = 1; v <= static_cast<Value>(u); ++v) {
      if (t.search(v).outcome != SearchOutcome::FoundAtInner) continue;
      t.insert({v, 1000});
      CHECK(t.shape_digest() == before);
    }
  }
}

TEST_CASE("quicksort and successive insertion build the same tree") {
  Rng rng(61);
  int checked = 0;
  auto check = [&](const InputSequence& seq, int k, std::size_t u) {
    const auto params = SampleParams::from_k(k);
    const SortOutcome sorted = quicksort_k(seq, params);
    const FringeTree tree = build_fringe_tree(seq, params, u);
    CHECK(sorted.tree.shape_digest() == tree.shape_digest());
    CHECK(sorted.ledger.sorted_events() == tree.ledger().sorted_events());
    CHECK(sorted.ledger.steps == tree.ledger().steps);
    CHECK(tree.shape().validate(static_cast<std::size_t>(k - 1)) == "");
    ++checked;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 1 + 2 * static_cast<int>(rng.below(3));
    const std::size_t u = 1 + rng.below(8);
    const std::size_t n = 1 + rng.below(200);
    check(sample_iid(UniverseDistribution::uniform(u), n, rng), k, u);
  }
  for (int k : {1, 3, 5}) {
    for (std::size_t n : {1u, 2u, 4u, 5u, 50u, 200u}) {
      check(InputSequence::from_values(std::vector<Value>(n, 3)), k, 8);
      std::vector<Value> up(n);
      for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<Value>(1 + i * 8 / n);
      check(InputSequence::from_values(up), k, 8);
      std::vector<Value> down(up.rbegin(), up.rend());
      check(InputSequence::from_values(down), k, 8);
    }
  }
  CHECK(checked == 1000 + 3 * 6 * 3);
}

TEST_CASE("inputs shorter than k leave a single leaf") {
  const auto seq = InputSequence::from_values(std::vector<Value>{3, 1, 2, 3});
  const auto params = SampleParams::from_k(5);
  CHECK(quicksort_k(seq, params).tree.shape_digest() == "[3 1 2 3]");
  const FringeTree t = build_fringe_tree(seq, params, 3);
  CHECK(t.shape_digest() == "[3 1 2 3]");
  CHECK(t.ledger().events.empty());
}

TEST_CASE("partition comparisons equal the depth-weighted profile") {
  // Every value occurs at least k times, so every value becomes a pivot and
  // each element is compared once per node on its value's root path.
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + 2 * static_cast<int>(rng.below(3));
    const std::size_t u = 1 + rng.below(10);
    std::vector<std::uint64_t> counts(u);
    for (auto& c : counts) c = static_cast<std::uint64_t>(k) + rng.below(20);
    const Profile x(counts);
    const auto seq = shuffle_multiset(x, rng);
    const SortOutcome out = quicksort_k(seq, SampleParams::from_k(k), {.record_events = false});
    const NodeDepthVector g = out.tree.node_depths(u);
    const double gx = g.dot(counts);
    CHECK(static_cast<double>(out.ledger.partition_cmps) == gx);
    const double slack = ((k - 1) / 2.0 + 2.0) * k * static_cast<double>(u);
    CHECK(std::abs(static_cast<double>(out.ledger.partition_cmps) - gx) <= slack);
    for (Value v = 1; v <= static_cast<Value>(u); ++v)
      CHECK(out.tree.search(v).path_cost == g.depths[static_cast<std::size_t>(v - 1)]);
  }
}

TEST_CASE("build_until_saturated") {
  for (int k : {1, 3, 5}) {
    const auto b = build_until_saturated(UniverseDistribution::uniform(1), SampleParams::from_k(k), 3, 100);
    CHECK(b.insertions == static_cast<std::uint64_t>(k));
    CHECK(b.tree.shape_digest() == "(1 [] [])");
  }
  CHECK_THROWS_AS(build_until_saturated(UniverseDistribution::uniform(50), SampleParams::from_k(5), 1, 10),
                  BudgetError);

  const auto half = UniverseDistribution::uniform(2);
  int root_one = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto b = build_until_saturated(half, SampleParams::from_k(1), trial_seed(4, i), 1000);
    root_one += b.tree.shape().node(b.tree.shape().root()).pivot == 1;
  }
  CHECK(std::abs(root_one / 1e4 - 0.5) <= 0.02);

  const auto eight = UniverseDistribution::uniform(8);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto b = build_until_saturated(eight, SampleParams::from_k(3), trial_seed(5, i), 100000);
    CHECK(b.tree.saturated());
    const auto g = b.tree.node_depths();
    for (Value v = 1; v <= 8; ++v) CHECK(b.tree.search(v).path_cost == g.depths[static_cast<std::size_t>(v - 1)]);
    CHECK(b.tree.shape().validate(2) == "");
  }
}
