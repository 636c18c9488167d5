#pragma once

// Domain value types shared by the sorting, tree, analysis and harness code.
//
// Universe values are the integers 1..u. Every comparison in the library is
// ternary (less / equal / greater); there is no two-valued comparison.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpivot {

using Value = std::int32_t;
using ElementId = std::uint32_t;

// Error hierarchy. Callers distinguish bad input from exhausted budgets and
// from operations invoked on objects in the wrong state.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

enum class Outcome : std::uint8_t { Less, Equal, Greater };

constexpr Outcome compare(Value a, Value b) noexcept {
  return a < b ? Outcome::Less : (b < a ? Outcome::Greater : Outcome::Equal);
}

const char* to_string(Outcome o) noexcept;

/// An input element: its key and its 1-based position in the original input.
struct Element {
  Value value;
  ElementId id;

  friend bool operator==(const Element&, const Element&) = default;
};

/// Probability vector q over [1..u]; all weights strictly positive, sum 1.
class UniverseDistribution {
 public:
  /// Normalizes positive raw weights. Throws ValidationError on an empty
  /// vector or a non-positive / non-finite entry.
  static UniverseDistribution normalize(std::span<const double> raw);
  static UniverseDistribution uniform(std::size_t u);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  /// Weight of value v, 1-based.
  double weight(Value v) const { return weights_.at(static_cast<std::size_t>(v) - 1); }
  double min_weight() const noexcept;

  UniverseDistribution reversed() const;

  friend bool operator==(const UniverseDistribution&, const UniverseDistribution&) = default;

 private:
  explicit UniverseDistribution(std::vector<double> w) : weights_(std::move(w)) {}
  std::vector<double> weights_;
};

/// Multiplicity vector x_1..x_u.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<std::uint64_t> counts);

  std::size_t universe_size() const noexcept { return counts_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t count(Value v) const { return counts_.at(static_cast<std::size_t>(v) - 1); }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Sample size k = 2t + 1.
class SampleParams {
 public:
  /// Throws ValidationError unless k is odd and positive.
  static SampleParams from_k(int k);
  static SampleParams from_t(int t) { return from_k(2 * t + 1); }

  constexpr int k() const noexcept { return k_; }
  int t() const noexcept { return (k_ - 1) / 2; }

  friend bool operator==(const SampleParams&, const SampleParams&) = default;

 private:
  explicit constexpr SampleParams(int k) : k_(k) {}
  int k_;
};

/// A sequence of keys together with their original positions.
class InputSequence {
 public:
  InputSequence() = default;
  /// Assigns ids 1..n in order. Values must be >= 1.
  static InputSequence from_values(std::span<const Value> values);
  /// Checks that ids form a permutation of 1..n.
  static InputSequence from_elements(std::vector<Element> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::vector<Value> values() const;
  Value max_value() const;

  friend bool operator==(const InputSequence&, const InputSequence&) = default;

 private:
  explicit InputSequence(std::vector<Element> e) : elements_(std::move(e)) {}
  std::vector<Element> elements_;
};

struct ComparisonEvent {
  ElementId element;
  Value pivot;
  Outcome outcome;

  friend auto operator<=>(const ComparisonEvent&, const ComparisonEvent&) = default;
};

/// Categorized ternary-comparison counts.
///
/// Only partitioning comparisons (element against an established pivot) are
/// logged as events; median-selection and Insertionsort comparisons are
/// counted but never logged. With event logging on, partition_cmps equals
/// events.size().
struct ComparisonLedger {
  std::uint64_t partition_cmps = 0;
  std::uint64_t median_cmps = 0;
  std::uint64_t insertionsort_cmps = 0;
  std::uint64_t steps = 0;
  bool log_events = true;
  std::vector<ComparisonEvent> events;

  Outcome partition_compare(const Element& e, Value pivot) {
    const Outcome o = compare(e.value, pivot);
    ++partition_cmps;
    if (log_events) events.push_back({e.id, pivot, o});
    return o;
  }

  std::uint64_t total() const noexcept {
    return partition_cmps + median_cmps + insertionsort_cmps;
  }

  /// Events sorted into a canonical order, for multiset comparison.
  std::vector<ComparisonEvent> sorted_events() const;
};

}  // namespace fatpivot
