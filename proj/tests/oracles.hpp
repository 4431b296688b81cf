#pragma once

// Test-only reference computations. None of these call into the library's
// arithmetic paths; they use different algorithms on plain 64-bit integers.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

// Expansion by repeated subtraction (a walk down the Stern-Brocot tree).
// Only suitable for small inputs.
inline std::vector<std::int64_t> subtractive_expand(std::int64_t num, std::int64_t den) {
  if (num == 0) return {0};
  std::vector<std::int64_t> out;
  std::int64_t count = 0;
  while (true) {
    if (num >= den) {
      num -= den;
      ++count;
      if (num == 0) {
        out.push_back(count);
        break;
      }
    } else {
      out.push_back(count);
      count = 0;
      std::swap(num, den);
    }
  }
  return out;
}

// Forward convergent recurrence h_k = a_k h_{k-1} + h_{k-2}.
inline std::pair<std::int64_t, std::int64_t> forward_value(const std::vector<std::int64_t>& a) {
  std::int64_t h_prev = 1, h = a[0];
  std::int64_t k_prev = 0, k = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto h_next = a[i] * h + h_prev;
    const auto k_next = a[i] * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  const auto g = std::gcd(h, k);
  return {h / g, k / g};
}

inline std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      result -= result / f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Number of coprime pairs 2 <= q < p <= max_p.
inline std::int64_t coprime_pair_count(std::int64_t max_p) {
  std::int64_t total = 0;
  for (std::int64_t p = 3; p <= max_p; ++p) total += totient(p) - 1;
  return total;
}

// Smallest x in [1, p - 1] with 3x = -1 (mod p), by exhaustion.
inline std::int64_t solve_3x_minus1(std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if ((3 * x + 1) % p == 0) return x;
  return 0;
}

}  // namespace oracle
