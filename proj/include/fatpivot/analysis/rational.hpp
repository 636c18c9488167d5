#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace fatpivot::analysis {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace fatpivot::analysis
