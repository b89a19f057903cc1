#include "vlp/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vlp/error.hpp"

namespace vlp {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // r can be off by one either way after rounding; r <= 2^32 always.
  r = std::min<std::uint64_t>(r, 0xFFFFFFFFull);
  while (r * r > n) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t circle_count(std::uint64_t r) {
  const std::uint64_t k = isqrt(r);
  std::uint64_t total = 2 * k + 1;  // x = 0 column
  for (std::uint64_t x = 1; x <= k; ++x) total += 2 * (2 * isqrt(r - x * x) + 1);
  return total;
}

std::uint64_t circle_count(double r) {
  if (std::isnan(r) || r < 0) throw DomainError("circle_count: r must be >= 0");
  if (r >= 0x1p63) throw OutOfRange("circle_count: r too large");
  return circle_count(static_cast<std::uint64_t>(std::floor(r)));
}

std::vector<std::uint64_t> circle_count_table(std::uint64_t r_max) {
  std::vector<std::uint64_t> N(r_max + 1, 0);
  const std::uint64_t k = isqrt(r_max);
  // quadrant x >= 1, y >= 0 covers the plane minus the origin four times
  for (std::uint64_t x = 1; x <= k; ++x)
    for (std::uint64_t y = 0; x * x + y * y <= r_max; ++y) N[x * x + y * y] += 4;
  N[0] += 1;
  for (std::uint64_t r = 1; r <= r_max; ++r) N[r] += N[r - 1];
  return N;
}

CircleIdentityReport check_circle_ideal_identity(const CoefficientTable& table,
                                                 std::uint64_t r_max) {
  if (table.field.disc != -4)
    throw DomainError("circle identity needs the table of Q(sqrt(-1))");
  if (r_max > table.limit)
    throw OutOfRange("circle identity: r_max exceeds table limit");
  const auto N = circle_count_table(r_max);
  for (std::uint64_t r = 1; r <= r_max; ++r) {
    if (N[r] != 4 * table.j_cum[r] + 1)
      throw IdentityViolation("N(r) != 4 j(r) + 1 at r = " + std::to_string(r), r);
  }
  return {r_max};
}

CircleScan residual_scan(std::uint64_t r_max, std::uint64_t stride) {
  if (r_max < 1 || stride < 1) throw DomainError("residual_scan: need r_max, stride >= 1");
  CircleScan scan;
  const std::uint64_t samples = r_max / stride;
  // dense scans are cheaper from the histogram than point by point
  const bool dense = samples > isqrt(r_max) && r_max <= (std::uint64_t{1} << 27);
  std::vector<std::uint64_t> table;
  if (dense) table = circle_count_table(r_max);
  for (std::uint64_t r = stride; r <= r_max; r += stride) {
    const std::uint64_t n = dense ? table[r] : circle_count(r);
    scan.r_values.push_back(static_cast<double>(r));
    scan.N.push_back(n);
    scan.residuals.push_back(static_cast<double>(n) - std::numbers::pi * static_cast<double>(r));
  }
  return scan;
}

CircleScan residual_scan(const std::vector<double>& r_values) {
  if (!std::is_sorted(r_values.begin(), r_values.end()))
    throw DomainError("residual_scan: radii must be increasing");
  CircleScan scan;
  for (double r : r_values) {
    const std::uint64_t n = circle_count(r);
    scan.r_values.push_back(r);
    scan.N.push_back(n);
    scan.residuals.push_back(static_cast<double>(n) - std::numbers::pi * r);
  }
  return scan;
}

}  // namespace vlp
