#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wdegen {

// Closed-form Wiener-index bounds for maximal k-degenerate graphs of
// order n. Everything is exact 64-bit integer arithmetic; intermediate
// products run in 128 bits and overflow of the result raises
// std::overflow_error instead of wrapping. Domain violations raise
// std::invalid_argument.

// n^2 - (k+1)n + C(k+1,2); requires n >= k >= 1. Attained exactly by the
// maximal k-degenerate graphs of diameter <= 2.
std::int64_t lower_bound(std::int64_t n, std::int64_t k);

// sum_{j=0..D} C(n-jk, 2) with D = floor((n-2)/k); requires n >= 2,
// k >= 1. Equals the Wiener index of the k-th power of the path P_n.
std::int64_t upper_bound_sum(std::int64_t n, std::int64_t k);

// Same value as upper_bound_sum via the cubic over the common
// denominator 12k, with residue i = (n-2) mod k:
//   [2n^3 + 3(k-1)n^2 + k(k-3)n
//    - 2i^3 + 3i^2(k-3) - i(k^2-9k+12) - 2k^2 + 6k - 4] / (12k)
// The division is checked to be exact.
std::int64_t upper_bound_closed(std::int64_t n, std::int64_t k);

// floor((2n^3 + 3(k-1)n^2 + k(k-3)n) / (12k)), valid only for 1 <= k <= 5
// (the floor absorbs the residue term only there); requires n >= 2.
std::int64_t floor_formula(std::int64_t n, std::int64_t k);

// Largest possible distance sum of a single vertex:
// (D+1)(n-1 - (k/2)D) with D = floor((n-2)/k); requires n >= k+1, k >= 1.
// Computed in doubled integers; the result is always integral.
std::int64_t status_bound(std::int64_t n, std::int64_t k);

// First m values of the maximum Wiener index by order: n = 1 contributes
// 0, n >= 2 contributes upper_bound_sum(n, k). Requires m >= 1, k >= 1.
std::vector<std::int64_t> sequence(std::int64_t k, std::int64_t m);

struct BoundsReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t D = 0;        // floor((n-2)/k)
  std::int64_t residue = 0;  // (n-2) mod k
  std::int64_t lower = 0;
  std::int64_t upper_sum = 0;
  std::int64_t upper_closed = 0;
  std::optional<std::int64_t> status_bound_value;  // absent when n == k
  bool coincide = false;  // lower == upper_sum; always true for n <= 2k+1
};

// Requires n >= k >= 1 and n >= 2.
BoundsReport bounds_report(std::int64_t n, std::int64_t k);

}  // namespace wdegen
