#include "fatpivot/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fatpivot {

const char* to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::Less: return "LT";
    case Outcome::Equal: return "EQ";
    case Outcome::Greater: return "GT";
  }
  return "?";
}

UniverseDistribution UniverseDistribution::normalize(std::span<const double> raw) {
  if (raw.empty()) throw ValidationError("distribution: empty weight vector");
  double sum = 0.0;
  for (double w : raw) {
    if (!std::isfinite(w) || w <= 0.0)
      throw ValidationError("distribution: weights must be finite and positive");
    sum += w;
  }
  std::vector<double> w(raw.begin(), raw.end());
  for (double& x : w) x /= sum;
  if (w.size() == 1) w[0] = 1.0;
  const double check = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::abs(check - 1.0) > 1e-12)
    throw ValidationError("distribution: normalized weights do not sum to one");
  for (double x : w)
    if (!(x > 0.0)) throw ValidationError("distribution: weight underflows to zero");
  return UniverseDistribution(std::move(w));
}

UniverseDistribution UniverseDistribution::uniform(std::size_t u) {
  if (u == 0) throw ValidationError("distribution: universe size must be positive");
  return UniverseDistribution(std::vector<double>(u, 1.0 / static_cast<double>(u)));
}

double UniverseDistribution::min_weight() const noexcept {
  return *std::min_element(weights_.begin(), weights_.end());
}

UniverseDistribution UniverseDistribution::reversed() const {
  return UniverseDistribution(std::vector<double>(weights_.rbegin(), weights_.rend()));
}

Profile::Profile(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0})) {}

SampleParams SampleParams::from_k(int k) {
  if (k < 1 || k % 2 == 0) throw ValidationError("sample size k must be odd and positive");
  return SampleParams(k);
}

InputSequence InputSequence::from_values(std::span<const Value> values) {
  std::vector<Element> e;
  e.reserve(values.size());
  ElementId id = 1;
  for (Value v : values) {
    if (v < 1) throw ValidationError("values must be >= 1, got " + std::to_string(v));
    e.push_back({v, id++});
  }
  return InputSequence(std::move(e));
}

InputSequence InputSequence::from_elements(std::vector<Element> elements) {
  std::vector<bool> seen(elements.size() + 1, false);
  for (const Element& e : elements) {
    if (e.id == 0 || e.id > elements.size() || seen[e.id])
      throw ValidationError("input sequence: ids must be a permutation of 1..n");
    if (e.value < 1) throw ValidationError("values must be >= 1, got " + std::to_string(e.value));
    seen[e.id] = true;
  }
  return InputSequence(std::move(elements));
}

std::vector<Value> InputSequence::values() const {
  std::vector<Value> v;
  v.reserve(elements_.size());
  for (const Element& e : elements_) v.push_back(e.value);
  return v;
}

Value InputSequence::max_value() const {
  Value m = 0;
  for (const Element& e : elements_) m = std::max(m, e.value);
  return m;
}

std::vector<ComparisonEvent> ComparisonLedger::sorted_events() const {
  std::vector<ComparisonEvent> s = events;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace fatpivot
