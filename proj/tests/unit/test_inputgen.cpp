#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <vector>

#include "fatpivot/inputgen.hpp"

using namespace fatpivot;

TEST_CASE("sample_iid on a point mass") {
  const auto s = sample_iid(UniverseDistribution::uniform(1), 5, Seed{123});
  CHECK(s.values() == std::vector<Value>{1, 1, 1, 1, 1});
}

TEST_CASE("sample_iid frequencies") {
  // Hoeffding: P(|freq - p| >= 0.01) <= 2 exp(-2 * 1e-4 * 1e5) = 2e-8.7.
  const auto half = UniverseDistribution::normalize(std::vector<double>{1, 1});
  const auto s = sample_iid(half, 100000, Seed{1});
  const auto x = profile_of(s, 2);
  CHECK(std::abs(static_cast<double>(x.count(1)) / 1e5 - 0.5) <= 0.01);

  const auto skew = UniverseDistribution::normalize(std::vector<double>{0.25, 0.75});
  const auto t = sample_iid(skew, 100000, Seed{2});
  double sum = 0;
  for (Value v : t.values()) sum += v;
  CHECK(std::abs(sum / 1e5 - 1.75) <= 0.01);
}

TEST_CASE("sample_iid empirical profile converges") {
  for (std::size_t u : {2u, 5u, 17u, 64u}) {
    std::vector<double> raw(u);
    Rng wr(u);
    for (auto& w : raw) w = 0.1 + wr.uniform01();
    const auto q = UniverseDistribution::normalize(raw);
    const auto x = profile_of(sample_iid(q, 100000, Seed{u * 7}), u);
    double worst = 0;
    for (std::size_t v = 0; v < u; ++v)
      worst = std::max(worst, std::abs(static_cast<double>(x.counts()[v]) / 1e5 - q.weights()[v]));
    CHECK(worst <= 0.02);
  }
}

TEST_CASE("sample_iid is deterministic") {
  const auto q = UniverseDistribution::uniform(9);
  CHECK(sample_iid(q, 500, Seed{77}) == sample_iid(q, 500, Seed{77}));
  CHECK(sample_iid(q, 500, Seed{77}) != sample_iid(q, 500, Seed{78}));
  Rng r1(3), r2(3);
  CHECK(sample_iid(q, 50, r1) == sample_iid(q, 50, r2));
}

TEST_CASE("inverse cdf resolves ties to the lower value") {
  const auto q = UniverseDistribution::normalize(std::vector<double>{1, 1});
  const IidSampler sampler(q);
  CHECK(sampler.universe_size() == 2);
  // Values strictly inside (0, 1): the result is always in range.
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Value v = sampler(rng);
    CHECK(v >= 1);
    CHECK(v <= 2);
  }
}

TEST_CASE("shuffle_multiset keeps the profile") {
  CHECK(shuffle_multiset(Profile({3}), Seed{4}).values() == std::vector<Value>{1, 1, 1});
  Rng rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> counts(1 + rng.below(6));
    for (auto& c : counts) c = rng.below(5);
    counts[0] += 1;
    const Profile x(counts);
    const auto s = shuffle_multiset(x, rng);
    CHECK(s.size() == x.total());
    CHECK(profile_of(s, counts.size()) == x);
  }
  CHECK_THROWS_AS(shuffle_multiset(Profile({0, 0}), Seed{1}), ValidationError);
}

TEST_CASE("shuffle_multiset is uniform over arrangements") {
  std::map<std::vector<Value>, int> two;
  for (std::uint64_t i = 0; i < 10000; ++i) ++two[shuffle_multiset(Profile({1, 1}), trial_seed(1, i)).values()];
  REQUIRE(two.size() == 2);
  for (const auto& [arr, c] : two) CHECK(std::abs(c / 1e4 - 0.5) <= 0.02);

  std::map<std::vector<Value>, int> three;
  for (std::uint64_t i = 0; i < 30000; ++i)
    ++three[shuffle_multiset(Profile({2, 1}), trial_seed(2, i)).values()];
  REQUIRE(three.size() == 3);
  for (const auto& [arr, c] : three) CHECK(std::abs(c / 3e4 - 1.0 / 3) <= 0.02);
}

TEST_CASE("profile_of") {
  CHECK(profile_of(InputSequence::from_values(std::vector<Value>{1, 2, 1}), 2) == Profile({2, 1}));
  CHECK(profile_of(InputSequence{}, 3) == Profile({0, 0, 0}));
  CHECK(profile_of(InputSequence::from_values(std::vector<Value>{3, 3, 3}), 3) == Profile({0, 0, 3}));
  CHECK_THROWS_AS(profile_of(InputSequence::from_values(std::vector<Value>{4}), 3), ValidationError);
}

TEST_CASE("degeneracy prefix length") {
  CHECK(DegeneracyParams{0.5, 3}.prefix_length(10000) == 100);
  CHECK(DegeneracyParams{0.8, 3}.prefix_length(10000) == 1585);
  CHECK(DegeneracyParams{0.0, 3}.prefix_length(10000) == 1);
  CHECK(DegeneracyParams{0.5, 3}.prefix_length(10) == 4);
  CHECK_THROWS_AS(DegeneracyParams({1.0, 3}).prefix_length(10), ValidationError);
  CHECK_THROWS_AS(DegeneracyParams({-0.1, 3}).prefix_length(10), ValidationError);
}

TEST_CASE("is_profile_degenerate") {
  const auto seq = InputSequence::from_values(std::vector<Value>{1, 1, 1, 2, 2, 2});
  // 6^nu = 6 would need nu = 1; n_T is clamped to n, so use a longer input
  // padded after the prefix instead.
  std::vector<Value> longer{1, 1, 1, 2, 2, 2};
  longer.resize(36, 1);
  const auto padded = InputSequence::from_values(longer);
  CHECK(DegeneracyParams{0.5, 3}.prefix_length(36) == 6);
  CHECK_FALSE(is_profile_degenerate(padded, {0.5, 3}, 2));
  std::vector<Value> nine{1, 1, 1, 2, 2, 2, 2, 2, 2};
  CHECK(DegeneracyParams{0.5, 3}.prefix_length(9) == 3);
  CHECK(is_profile_degenerate(InputSequence::from_values(nine), {0.5, 3}, 2));
  (void)seq;

  // u = 1: degenerate iff n_T < k
  const auto ones = InputSequence::from_values(std::vector<Value>(100, 1));
  CHECK(is_profile_degenerate(ones, {0.0, 3}, 1));
  CHECK_FALSE(is_profile_degenerate(ones, {0.5, 3}, 1));
}

TEST_CASE("degeneracy frequency for uniform u=4") {
  const auto q = UniverseDistribution::uniform(4);
  int hits = 0;
  for (std::uint64_t i = 0; i < 1000; ++i)
    hits += is_profile_degenerate(sample_iid(q, 10000, trial_seed(5, i)), {0.8, 3}, 4);
  CHECK(hits < 10);
}

TEST_CASE("distribution shorthands") {
  CHECK(parse_distribution_spec("uniform:3") == UniverseDistribution::uniform(3));
  const auto two = parse_distribution_spec("two:0.25");
  CHECK(two.weight(1) == doctest::Approx(0.25));
  CHECK(two.weight(2) == doctest::Approx(0.75));
  CHECK_THROWS_AS(parse_distribution_spec("two:1"), ValidationError);
  CHECK_THROWS_AS(parse_distribution_spec("uniform:0"), ValidationError);
  CHECK_THROWS_AS(parse_distribution_spec("uniform:x"), ValidationError);
  CHECK_THROWS_AS(parse_distribution_spec("zipf:2"), ValidationError);

  const auto text = parse_distribution_text("2 1\n 1\n");
  CHECK(text.weight(1) == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_distribution_text("1 abc"), ValidationError);
  CHECK_THROWS_AS(parse_distribution_text(""), ValidationError);

  const auto path = std::filesystem::temp_directory_path() / "fatpivot_weights_test.txt";
  {
    std::ofstream f(path);
    f << "1 1 2\n";
  }
  const auto file = parse_distribution_spec("weights:" + path.string());
  CHECK(file.weight(3) == doctest::Approx(0.5));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_distribution_file(path), ValidationError);
}
