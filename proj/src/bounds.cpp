#include "wienerdegen/bounds.hpp"

#include <limits>
#include <stdexcept>

namespace wdegen {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(std::string(what) + " overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 choose2(i128 m) { return m * (m - 1) / 2; }

}  // namespace

std::int64_t lower_bound(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < k) throw std::invalid_argument("lower_bound needs n >= k >= 1");
  const i128 N = n, K = k;
  return narrow(N * N - (K + 1) * N + choose2(K + 1), "lower bound");
}

std::int64_t upper_bound_sum(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < 2) throw std::invalid_argument("upper_bound_sum needs n >= 2, k >= 1");
  const std::int64_t D = (n - 2) / k;
  i128 total = 0;
  for (std::int64_t j = 0; j <= D; ++j) total += choose2(static_cast<i128>(n) - static_cast<i128>(j) * k);
  return narrow(total, "upper bound");
}

std::int64_t upper_bound_closed(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < 2) throw std::invalid_argument("upper_bound_closed needs n >= 2, k >= 1");
  const i128 N = n, K = k, I = (n - 2) % k;
  const i128 numerator = 2 * N * N * N + 3 * (K - 1) * N * N + K * (K - 3) * N -
                         2 * I * I * I + 3 * I * I * (K - 3) -
                         I * (K * K - 9 * K + 12) - 2 * K * K + 6 * K - 4;
  const i128 denominator = 12 * K;
  if (numerator % denominator != 0)
    throw std::logic_error("closed form is not integral; formula violated");
  return narrow(numerator / denominator, "upper bound");
}

std::int64_t floor_formula(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > 5) throw std::invalid_argument("floor formula only covers 1 <= k <= 5");
  if (n < 2) throw std::invalid_argument("floor formula needs n >= 2");
  const i128 N = n, K = k;
  const i128 numerator = 2 * N * N * N + 3 * (K - 1) * N * N + K * (K - 3) * N;
  // Nonnegative for n >= 2, so plain integer division is the floor.
  return narrow(numerator / (12 * K), "floor formula");
}

std::int64_t status_bound(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < k + 1) throw std::invalid_argument("status_bound needs n >= k+1, k >= 1");
  const i128 D = (n - 2) / k;
  const i128 doubled = (D + 1) * (2 * (static_cast<i128>(n) - 1) - k * D);
  if (doubled % 2 != 0) throw std::logic_error("status bound is not integral");
  return narrow(doubled / 2, "status bound");
}

std::vector<std::int64_t> sequence(std::int64_t k, std::int64_t m) {
  if (k < 1 || m < 1) throw std::invalid_argument("sequence needs k >= 1, m >= 1");
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(m));
  values.push_back(0);  // a single vertex has Wiener index 0
  for (std::int64_t n = 2; n <= m; ++n) values.push_back(upper_bound_sum(n, k));
  return values;
}

BoundsReport bounds_report(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < k || n < 2)
    throw std::invalid_argument("bounds_report needs n >= k >= 1 and n >= 2");
  BoundsReport r;
  r.n = n;
  r.k = k;
  r.D = (n - 2) / k;
  r.residue = (n - 2) % k;
  r.lower = lower_bound(n, k);
  r.upper_sum = upper_bound_sum(n, k);
  r.upper_closed = upper_bound_closed(n, k);
  if (n >= k + 1) r.status_bound_value = status_bound(n, k);
  r.coincide = r.lower == r.upper_sum;
  return r;
}

}  // namespace wdegen
