#pragma once

// Seeded generators for the two input models (discrete iid and random
// multiset permutation), the distribution file / shorthand parsers, and the
// profile-degeneracy predicate.

#include <cstddef>
#include <filesystem>
#include <string_view>
#include <vector>

#include "fatpivot/core.hpp"
#include "fatpivot/random.hpp"

namespace fatpivot {

/// Inverse-CDF sampler for D(q). Cumulative sums are computed once; a uniform
/// variate x maps to the smallest v with F(v) >= x.
class IidSampler {
 public:
  explicit IidSampler(const UniverseDistribution& q);
  Value operator()(Rng& rng) const;
  std::size_t universe_size() const noexcept { return cumulative_.size(); }

 private:
  std::vector<double> cumulative_;
};

/// n iid draws from q; ids 1..n in draw order.
InputSequence sample_iid(const UniverseDistribution& q, std::size_t n, Seed seed);
InputSequence sample_iid(const UniverseDistribution& q, std::size_t n, Rng& rng);

/// Uniformly random arrangement of the multiset with profile x
/// (Fisher-Yates over the expanded multiset). Throws ValidationError when
/// total(x) == 0.
InputSequence shuffle_multiset(const Profile& x, Seed seed);
InputSequence shuffle_multiset(const Profile& x, Rng& rng);

/// Throws ValidationError if some value lies outside [1..u].
Profile profile_of(const InputSequence& seq, std::size_t u);

struct DegeneracyParams {
  double nu;
  int k;

  /// n_T = ceil(n^nu), clamped to [1, n]. A power within 1e-9 (relative) of an
  /// integer is treated as that integer so that e.g. 10000^0.5 gives 100.
  std::size_t prefix_length(std::size_t n) const;
};

/// True iff some v in [1..u] occurs fewer than k times among the first n_T
/// elements of seq.
bool is_profile_degenerate(const InputSequence& seq, const DegeneracyParams& params,
                           std::size_t u);

/// Whitespace-separated positive reals, normalized on load.
UniverseDistribution load_distribution_file(const std::filesystem::path& path);
UniverseDistribution parse_distribution_text(std::string_view text);

/// Shorthands: "uniform:u", "two:p" for (p, 1-p), "weights:path".
UniverseDistribution parse_distribution_spec(std::string_view spec);

}  // namespace fatpivot
