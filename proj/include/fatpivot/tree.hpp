#pragma once

// Binary search tree whose inner nodes carry pivot values and whose leaves
// buffer elements. This is the shape shared by Quicksort recursion trees and
// k-fringe-balanced search trees.
//
// Nodes live in an arena; all traversals are iterative, so degenerate trees
// (sorted input with k = 1) do not recurse on the call stack.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fatpivot/core.hpp"

namespace fatpivot {

struct NodeDepthVector {
  /// depths[v-1] = number of nodes on the root-to-v path, both ends counted.
  std::vector<std::uint32_t> depths;

  /// Γᵀ w for a weight vector indexed by value - 1.
  template <class W>
  double dot(const W& weights) const {
    double s = 0.0;
    for (std::size_t i = 0; i < depths.size(); ++i)
      s += static_cast<double>(depths[i]) * static_cast<double>(weights[i]);
    return s;
  }
};

enum class SearchOutcome : std::uint8_t { FoundAtInner, FoundInLeaf, Absent };

struct SearchResult {
  SearchOutcome outcome;
  /// Inner-node comparisons on the path; the sequential scan of a leaf buffer
  /// is not counted.
  std::uint64_t path_cost;
};

class Tree {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kNone = static_cast<NodeId>(-1);

  struct Node {
    bool inner = false;
    Value pivot = 0;
    NodeId left = kNone;
    NodeId right = kNone;
    std::vector<Element> buffer;
  };

  /// A single empty leaf.
  Tree();

  NodeId root() const noexcept { return 0; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t inner_count() const noexcept { return inner_count_; }

  /// Appends a new leaf holding `buffer`.
  NodeId add_leaf(std::vector<Element> buffer = {});
  void set_leaf_buffer(NodeId id, std::vector<Element> buffer);
  void append_to_leaf(NodeId id, Element e);
  /// Turns a leaf into Inner(pivot, Leaf(left), Leaf(right)); returns the
  /// ids of the two new leaves.
  std::pair<NodeId, NodeId> split_leaf(NodeId id, Value pivot, std::vector<Element> left,
                                       std::vector<Element> right);

  /// Iterative descent; see SearchResult.
  SearchResult search(Value x) const;

  /// Number of inner nodes on the longest root-to-leaf path.
  std::size_t height() const;

  /// Requires every value of [1..u] at an inner node (exactly u inner nodes);
  /// throws StateError otherwise.
  NodeDepthVector node_depths(std::size_t u) const;

  /// Inner(p, L, R) -> "(p L R)", Leaf(b1 .. bm) -> "[b1 .. bm]" (insertion
  /// order, values only).
  std::string shape_digest() const;

  /// Checks the search-tree property, distinct inner values and (if
  /// max_buffer > 0) leaf capacity. Returns an empty string when well formed,
  /// otherwise a description of the first violation.
  std::string validate(std::size_t max_buffer = 0) const;

 private:
  std::vector<Node> nodes_;
  std::size_t inner_count_ = 0;
};

}  // namespace fatpivot
