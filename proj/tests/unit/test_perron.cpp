#include <cmath>
#include <numbers>

#include "doctest.h"
#include "vlp/error.hpp"
#include "vlp/perron.hpp"

using namespace vlp;

namespace {

// Composite Simpson on a fine uniform grid: an independent route to the
// real part of the kernel integral.
double simpson_kernel(double x, double T, std::uint64_t intervals) {
  const double L = std::log(x);
  auto f = [&](double t) {
    return x * x * (2.0 * std::cos(t * L) + t * std::sin(t * L)) / (4.0 + t * t) /
           (2.0 * std::numbers::pi);
  };
  const double h = 2.0 * T / static_cast<double>(intervals);
  double s = f(-T) + f(T);
  for (std::uint64_t k = 1; k < intervals; ++k) s += (k % 2 ? 4.0 : 2.0) * f(-T + k * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("kernel at x = 2 and x = 1/2 against Simpson") {
  for (double x : {2.0, 0.5, 1.3}) {
    const PerronResult r = kernel_quadrature(x, 250.0);
    CAPTURE(x);
    CHECK(std::abs(r.estimate.real() - simpson_kernel(x, 250.0, 2000000)) < 1e-9);
    CHECK(std::abs(r.estimate.imag()) < 1e-8);
  }
}

TEST_CASE("kernel error obeys x^2 / (pi T |log x|)") {
  for (double x : {0.3, 0.5, 0.9, 1.1, 1.5, 2.0, 5.0, 20.5}) {
    for (double T : {10.0, 100.0, 1000.0}) {
      const PerronResult r = kernel_quadrature(x, T);
      CAPTURE(x);
      CAPTURE(T);
      CHECK(r.reference == (x > 1 ? 1.0 : 0.0));
      CHECK(r.abs_error < kernel_error_bound(x, T));
      CHECK(std::abs(r.estimate.imag()) < 1e-8);
    }
  }
  const PerronResult two = kernel_quadrature(2.0, 1000.0);
  CHECK(std::abs(two.estimate.real() - 1.0) < 4.0 / (1000.0 * std::log(2.0)) * kKernelErrorConstant);
}

TEST_CASE("kernel at x = 1 is 1/2 + O(1/T)") {
  for (double T : {10.0, 1000.0}) {
    const PerronResult r = kernel_quadrature(1.0, T);
    CHECK(r.reference == 0.5);
    // closed form (1/pi) arctan(T/2)
    CHECK(std::abs(r.estimate.real() - std::atan(T / 2) / std::numbers::pi) < 1e-12);
    CHECK(r.abs_error <= kernel_error_bound(1.0, T));
  }
}

TEST_CASE("kernel error shrinks with T, up to the oscillation slack") {
  double prev = kernel_quadrature(2.0, 250.0).abs_error;
  for (double T : {500.0, 1000.0, 2000.0}) {
    const double e = kernel_quadrature(2.0, T).abs_error;
    CAPTURE(T);
    // halving with factor 4 slack
    CHECK(e <= 4.0 * prev / 2.0);
    prev = e;
  }
}

TEST_CASE("kernel preconditions") {
  CHECK_THROWS_AS(kernel_quadrature(0.0, 10.0), DomainError);
  CHECK_THROWS_AS(kernel_quadrature(2.0, -1.0), DomainError);
  CHECK_THROWS_AS(kernel_quadrature(2.0, 10.0, 32), DomainError);
  QuadratureOptions small;
  small.max_nodes = 100;
  CHECK_THROWS_AS(kernel_quadrature(2.0, 1000.0, 64, small), NumericFailure);
  CHECK(kernel_quadrature(2.0, 10.0, 6400).nodes >= 6400);
}

TEST_CASE("j_K reconstruction examples") {
  const auto gi = build_coefficients(make_field(-1), 100);
  const PerronResult a = perron_j_reconstruction(gi, 10.5, std::pow(10.5, 3));
  CHECK(a.reference == 9);
  CHECK(std::lround(a.estimate.real()) == 9);
  CHECK(std::abs(a.estimate.imag()) < 1e-8);

  const auto q = build_coefficients(make_field(0), 100);
  CHECK(std::lround(perron_j_reconstruction(q, 5.5, std::pow(5.5, 3)).estimate.real()) == 5);

  const auto e = build_coefficients(make_field(-3), 100);
  const PerronResult c = perron_j_reconstruction(e, 7.5, std::pow(7.5, 3));
  CHECK(c.reference == static_cast<double>(j_K(e, 7.5)));
  CHECK(std::lround(c.estimate.real()) == static_cast<long>(c.reference));
}

TEST_CASE("reconstruction rounds to j_K on every field") {
  for (std::int64_t d : {0, -1, -3, 2}) {
    const auto t = build_coefficients(make_field(d), 64);
    for (double x = 1.5; x <= 12.5; x += 1.0) {
      const PerronResult r = perron_j_reconstruction(t, x, x * x * x);
      CAPTURE(d);
      CAPTURE(x);
      CHECK(std::lround(r.estimate.real()) == static_cast<long>(r.reference));
    }
  }
}

TEST_CASE("reconstruction preconditions") {
  const auto t = build_coefficients(make_field(-1), 20);
  CHECK_THROWS_AS(perron_j_reconstruction(t, 10.0, 1000.0), DomainError);
  CHECK_THROWS_AS(perron_j_reconstruction(t, 0.5, 1000.0), DomainError);
  CHECK_THROWS_AS(perron_j_reconstruction(t, 10.5, 1000.0), OutOfRange);
  CHECK_THROWS_AS(perron_j_reconstruction(t, 5.5, 1000.0, 10), DomainError);
}
