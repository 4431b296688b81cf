#pragma once

#include <cstdint>
#include <vector>

#include "crosscap/cf_core.hpp"

namespace testutil {

inline std::vector<std::int64_t> as_vec(const crosscap::ContinuedFraction& cf) {
  std::vector<std::int64_t> out;
  for (auto c : cf.coefficients()) out.push_back(crosscap::to_int64(c));
  return out;
}

inline std::vector<crosscap::Int> to_int(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

// (numerator, denominator) as 64-bit values for readable assertions.
inline std::pair<std::int64_t, std::int64_t> frac(const crosscap::Rational& r) {
  return {crosscap::to_int64(r.numerator()), crosscap::to_int64(r.denominator())};
}

using F = std::pair<std::int64_t, std::int64_t>;
using V = std::vector<std::int64_t>;

}  // namespace testutil
