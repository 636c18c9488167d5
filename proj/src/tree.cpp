#include "fatpivot/tree.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace fatpivot {

Tree::Tree() { nodes_.emplace_back(); }

Tree::NodeId Tree::add_leaf(std::vector<Element> buffer) {
  Node n;
  n.buffer = std::move(buffer);
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

void Tree::set_leaf_buffer(NodeId id, std::vector<Element> buffer) {
  if (nodes_[id].inner) throw StateError("set_leaf_buffer on an inner node");
  nodes_[id].buffer = std::move(buffer);
}

void Tree::append_to_leaf(NodeId id, Element e) {
  if (nodes_[id].inner) throw StateError("append_to_leaf on an inner node");
  nodes_[id].buffer.push_back(e);
}

std::pair<Tree::NodeId, Tree::NodeId> Tree::split_leaf(NodeId id, Value pivot,
                                                       std::vector<Element> left,
                                                       std::vector<Element> right) {
  if (nodes_[id].inner) throw StateError("split_leaf on an inner node");
  const NodeId l = add_leaf(std::move(left));
  const NodeId r = add_leaf(std::move(right));
  Node& n = nodes_[id];
  n.inner = true;
  n.pivot = pivot;
  n.left = l;
  n.right = r;
  n.buffer.clear();
  n.buffer.shrink_to_fit();
  ++inner_count_;
  return {l, r};
}

SearchResult Tree::search(Value x) const {
  std::uint64_t cost = 0;
  NodeId at = root();
  while (nodes_[at].inner) {
    const Node& n = nodes_[at];
    ++cost;
    switch (compare(x, n.pivot)) {
      case Outcome::Equal: return {SearchOutcome::FoundAtInner, cost};
      case Outcome::Less: at = n.left; break;
      case Outcome::Greater: at = n.right; break;
    }
  }
  const auto& buf = nodes_[at].buffer;
  const bool found =
      std::any_of(buf.begin(), buf.end(), [x](const Element& e) { return e.value == x; });
  return {found ? SearchOutcome::FoundInLeaf : SearchOutcome::Absent, cost};
}

std::size_t Tree::height() const {
  std::size_t best = 0;
  std::vector<std::pair<NodeId, std::size_t>> stack{{root(), 0}};
  while (!stack.empty()) {
    const auto [id, depth] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (!n.inner) {
      best = std::max(best, depth);
      continue;
    }
    stack.emplace_back(n.left, depth + 1);
    stack.emplace_back(n.right, depth + 1);
  }
  return best;
}

NodeDepthVector Tree::node_depths(std::size_t u) const {
  if (inner_count_ != u)
    throw StateError("node_depths: tree is not saturated (" + std::to_string(inner_count_) +
                     " inner nodes, universe size " + std::to_string(u) + ")");
  NodeDepthVector out{std::vector<std::uint32_t>(u, 0)};
  std::vector<std::pair<NodeId, std::uint32_t>> stack{{root(), 1}};
  while (!stack.empty()) {
    const auto [id, depth] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[id];
    if (!n.inner) continue;
    if (n.pivot < 1 || static_cast<std::size_t>(n.pivot) > u)
      throw StateError("node_depths: inner value outside the universe");
    out.depths[static_cast<std::size_t>(n.pivot) - 1] = depth;
    stack.emplace_back(n.left, depth + 1);
    stack.emplace_back(n.right, depth + 1);
  }
  return out;
}

std::string Tree::shape_digest() const {
  // Frames either open a node or emit a closing token.
  struct Frame {
    NodeId id;
    bool close;
  };
  std::string out;
  std::vector<Frame> stack{{root(), false}};
  bool need_space = false;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.close) {
      out += ')';
      need_space = true;
      continue;
    }
    if (need_space) out += ' ';
    const Node& n = nodes_[f.id];
    if (n.inner) {
      out += '(';
      out += std::to_string(n.pivot);
      need_space = true;
      stack.push_back({f.id, true});
      stack.push_back({n.right, false});
      stack.push_back({n.left, false});
    } else {
      out += '[';
      for (std::size_t i = 0; i < n.buffer.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(n.buffer[i].value);
      }
      out += ']';
      need_space = true;
    }
  }
  return out;
}

std::string Tree::validate(std::size_t max_buffer) const {
  // (node, exclusive lower bound, exclusive upper bound)
  struct Frame {
    NodeId id;
    std::int64_t lo;
    std::int64_t hi;
  };
  std::set<Value> seen;
  std::vector<Frame> stack{{root(), std::numeric_limits<std::int64_t>::min(),
                            std::numeric_limits<std::int64_t>::max()}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const Node& n = nodes_[f.id];
    if (n.inner) {
      if (!(f.lo < n.pivot && n.pivot < f.hi))
        return "inner value " + std::to_string(n.pivot) + " violates the search-tree order";
      if (!seen.insert(n.pivot).second)
        return "inner value " + std::to_string(n.pivot) + " repeated";
      stack.push_back({n.left, f.lo, n.pivot});
      stack.push_back({n.right, n.pivot, f.hi});
    } else {
      if (max_buffer > 0 && n.buffer.size() > max_buffer)
        return "leaf buffer exceeds capacity";
      for (const Element& e : n.buffer)
        if (!(f.lo < e.value && e.value < f.hi))
          return "leaf value " + std::to_string(e.value) + " outside its range";
    }
  }
  return {};
}

}  // namespace fatpivot
