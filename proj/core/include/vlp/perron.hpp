#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

#include "vlp/sieve.hpp"

namespace vlp {

struct PerronResult {
  double x = 0.0;
  double T = 0.0;
  std::complex<double> estimate;
  double reference = 0.0;
  double abs_error = 0.0;
  std::uint64_t nodes = 0;
};

struct QuadratureOptions {
  std::uint64_t max_nodes = 200'000'000;
  // absolute accuracy target for one kernel integral, in units of x^2
  double tol = 1e-13;
};

/// |I(x, T) - [x > 1]| < K x^2 / (T |log x|) on the line Re s = 2.
inline constexpr double kKernelErrorConstant = 1.0 / std::numbers::pi;
/// At x = 1 the error is (1/pi) arctan(2/T) < K1 / T.
inline constexpr double kKernelErrorConstantAtOne = 2.0 / std::numbers::pi;

double kernel_error_bound(double x, double T);

/// (1 / 2 pi i) * integral of x^s / s over the segment [2 - iT, 2 + iT], by
/// adaptive Gauss-Kronrod panels no wider than a quarter period of x^{it}.
/// reference is 1 for x > 1, 1/2 at x = 1, 0 for x < 1.
PerronResult kernel_quadrature(double x, double T, std::uint64_t nodes = 64,
                               const QuadratureOptions& opts = {});

/// sum_{n <= n_cut} a[n] I(x/n, T) against j_K(x), x a half-integer.
/// n_cut = 0 picks ceil(2x).
PerronResult perron_j_reconstruction(const CoefficientTable& table, double x,
                                     double T, std::uint64_t n_cut = 0,
                                     const QuadratureOptions& opts = {});

}  // namespace vlp
