#include "fatpivot/inputgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace fatpivot {

IidSampler::IidSampler(const UniverseDistribution& q) {
  cumulative_.reserve(q.size());
  double acc = 0.0;
  for (double w : q.weights()) {
    acc += w;
    cumulative_.push_back(acc);
  }
  cumulative_.back() = 1.0;
}

Value IidSampler::operator()(Rng& rng) const {
  const double x = rng.uniform01();
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), x);
  return static_cast<Value>(it - cumulative_.begin()) + 1;
}

InputSequence sample_iid(const UniverseDistribution& q, std::size_t n, Rng& rng) {
  const IidSampler draw(q);
  std::vector<Value> values(n);
  for (Value& v : values) v = draw(rng);
  return InputSequence::from_values(values);
}

InputSequence sample_iid(const UniverseDistribution& q, std::size_t n, Seed seed) {
  Rng rng(seed);
  return sample_iid(q, n, rng);
}

InputSequence shuffle_multiset(const Profile& x, Rng& rng) {
  if (x.total() == 0) throw ValidationError("shuffle_multiset: profile has zero total");
  std::vector<Value> values;
  values.reserve(x.total());
  for (std::size_t v = 0; v < x.universe_size(); ++v)
    values.insert(values.end(), x.counts()[v], static_cast<Value>(v + 1));
  for (std::size_t i = values.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(values[i], values[j]);
  }
  return InputSequence::from_values(values);
}

InputSequence shuffle_multiset(const Profile& x, Seed seed) {
  Rng rng(seed);
  return shuffle_multiset(x, rng);
}

Profile profile_of(const InputSequence& seq, std::size_t u) {
  std::vector<std::uint64_t> counts(u, 0);
  for (const Element& e : seq.elements()) {
    if (e.value < 1 || static_cast<std::size_t>(e.value) > u)
      throw ValidationError("profile_of: value " + std::to_string(e.value) +
                            " outside universe [1.." + std::to_string(u) + "]");
    ++counts[static_cast<std::size_t>(e.value) - 1];
  }
  return Profile(std::move(counts));
}

std::size_t DegeneracyParams::prefix_length(std::size_t n) const {
  if (!(nu >= 0.0 && nu < 1.0)) throw ValidationError("degeneracy: nu must lie in [0,1)");
  if (n == 0) return 0;
  double p = std::pow(static_cast<double>(n), nu);
  const double r = std::round(p);
  if (std::abs(p - r) <= 1e-9 * r) p = r;
  const auto len = static_cast<std::size_t>(std::ceil(p));
  return std::clamp<std::size_t>(len, 1, n);
}

bool is_profile_degenerate(const InputSequence& seq, const DegeneracyParams& params,
                           std::size_t u) {
  const std::size_t n_t = params.prefix_length(seq.size());
  std::vector<std::uint64_t> counts(u, 0);
  for (const Element& e : seq.elements().first(n_t)) {
    if (e.value >= 1 && static_cast<std::size_t>(e.value) <= u)
      ++counts[static_cast<std::size_t>(e.value) - 1];
  }
  const auto k = static_cast<std::uint64_t>(params.k);
  return std::any_of(counts.begin(), counts.end(), [k](std::uint64_t c) { return c < k; });
}

UniverseDistribution parse_distribution_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<double> raw;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ValidationError("distribution: bad weight '" + token + "'");
    raw.push_back(w);
  }
  return UniverseDistribution::normalize(raw);
}

UniverseDistribution load_distribution_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("distribution: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_distribution_text(buf.str());
}

UniverseDistribution parse_distribution_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw ValidationError("distribution spec must be uniform:u, two:p or weights:path");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "uniform") {
    std::size_t u = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), u);
    if (ec != std::errc{} || ptr != arg.data() + arg.size() || u == 0)
      throw ValidationError("distribution: bad universe size in '" + std::string(spec) + "'");
    return UniverseDistribution::uniform(u);
  }
  if (kind == "two") {
    double p = 0.0;
    std::size_t used = 0;
    try {
      p = std::stod(std::string(arg), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != arg.size() || !(p > 0.0 && p < 1.0))
      throw ValidationError("distribution: two:p needs p in (0,1)");
    const double raw[] = {p, 1.0 - p};
    return UniverseDistribution::normalize(raw);
  }
  if (kind == "weights") return load_distribution_file(std::filesystem::path(arg));
  throw ValidationError("distribution: unknown kind '" + std::string(kind) + "'");
}

}  // namespace fatpivot
