#pragma once

#include <cstdint>
#include <vector>

#include "vlp/sieve.hpp"

namespace vlp {

/// floor(sqrt(n)), exact for every 64-bit n.
std::uint64_t isqrt(std::uint64_t n);

/// N(r) = #{(x, y) in Z^2 : x^2 + y^2 <= r}, origin included.
std::uint64_t circle_count(double r);
std::uint64_t circle_count(std::uint64_t r);

/// N(0..r_max) from a histogram of x^2 + y^2 over every lattice point in
/// the disc. Independent of circle_count.
std::vector<std::uint64_t> circle_count_table(std::uint64_t r_max);

struct CircleIdentityReport {
  std::uint64_t checked = 0;
};

/// Checks N(r) = 4 j_{Q(i)}(r) + 1 for 1 <= r <= r_max; the +1 is the
/// origin. Throws IdentityViolation carrying the first failing r.
CircleIdentityReport check_circle_ideal_identity(const CoefficientTable& table,
                                                 std::uint64_t r_max);

struct CircleScan {
  std::vector<double> r_values;
  std::vector<std::uint64_t> N;
  std::vector<double> residuals;  // N(r) - pi r
};

/// r = stride, 2 stride, ..., <= r_max.
CircleScan residual_scan(std::uint64_t r_max, std::uint64_t stride = 1);

/// Residuals on an arbitrary increasing list of radii-squared.
CircleScan residual_scan(const std::vector<double>& r_values);

}  // namespace vlp
