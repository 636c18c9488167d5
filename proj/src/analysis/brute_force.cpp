#include "fatpivot/analysis/brute_force.hpp"

#include <algorithm>
#include <vector>

#include "fatpivot/quicksort.hpp"

namespace fatpivot::analysis {

namespace {

std::uint64_t cost_of(const std::vector<Value>& values, SampleParams params, CostConvention convention) {
  const SortOutcome out = quicksort_k(InputSequence::from_values(values), params, {.record_events = false});
  return convention == CostConvention::PartitionCmps ? out.ledger.partition_cmps : sedgewick_count(out.ledger);
}

void check_budget(std::uint64_t n) {
  if (n > kBruteForceMaxN) throw SizeError("brute force: input exceeds the enumeration budget (n <= 9)");
}

}  // namespace

Rational brute_force_expected_cost(const Profile& x, SampleParams params, CostConvention convention) {
  check_budget(x.total());
  if (x.total() == 0) throw ValidationError("brute force: empty multiset");
  std::vector<Value> values;
  for (std::size_t v = 0; v < x.universe_size(); ++v)
    values.insert(values.end(), x.counts()[v], static_cast<Value>(v + 1));

  std::int64_t sum = 0;
  std::int64_t arrangements = 0;
  do {
    sum += static_cast<std::int64_t>(cost_of(values, params, convention));
    ++arrangements;
  } while (std::next_permutation(values.begin(), values.end()));
  return Rational(sum, arrangements);
}

double brute_force_expected_cost(const UniverseDistribution& q, std::uint64_t n, SampleParams params,
                                 CostConvention convention) {
  check_budget(n);
  if (q.size() > kBruteForceMaxU)
    throw SizeError("brute force: iid enumeration needs u <= 4");
  if (n == 0) return 0.0;
  const auto u = static_cast<Value>(q.size());
  std::vector<Value> values(n, 1);
  long double expectation = 0.0L;
  while (true) {
    long double weight = 1.0L;
    for (Value v : values) weight *= q.weight(v);
    expectation += weight * static_cast<long double>(cost_of(values, params, convention));
    // odometer increment
    std::size_t i = 0;
    while (i < n && values[i] == u) values[i++] = 1;
    if (i == n) break;
    ++values[i];
  }
  return static_cast<double>(expectation);
}

}  // namespace fatpivot::analysis
