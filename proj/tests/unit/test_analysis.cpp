#include <cmath>

#include "doctest.h"
#include "vlp/analysis.hpp"
#include "vlp/error.hpp"

using namespace vlp;

namespace {

std::vector<double> grid(double lo, double hi, double ratio) { return geometric_grid(lo, hi, ratio); }

}  // namespace

TEST_CASE("exact power law") {
  const auto xs = grid(10, 1e6, 1.3);
  std::vector<double> vs;
  for (double x : xs) vs.push_back(x * x);
  const ExponentFit f = fit_exponent(xs, vs);
  CHECK(std::abs(f.slope - 2.0) < 1e-12);
  CHECK(f.r_squared == doctest::Approx(1.0));
  CHECK(f.n_points == xs.size());
  CHECK(f.dropped_zeros == 0);
}

TEST_CASE("synthetic exponent with log-periodic wobble") {
  const auto xs = grid(10, 1e7, 1.2);
  std::vector<double> vs;
  for (double x : xs) vs.push_back(5.0 * std::pow(x, 1.3) * (1 + 0.01 * std::sin(std::log(x))));
  const ExponentFit f = fit_exponent(xs, vs);
  CHECK(f.slope >= 1.25);
  CHECK(f.slope <= 1.35);
  CHECK(f.intercept == doctest::Approx(std::log(5.0)).epsilon(0.02));
}

TEST_CASE("scale equivariance and reparameterisation") {
  const auto xs = grid(3, 1e5, 1.25);
  std::vector<double> vs;
  for (double x : xs) vs.push_back(std::pow(x, 0.7) * (2 + std::cos(x)));
  const ExponentFit base = fit_exponent(xs, vs);

  for (double lambda : {1e-3, 7.0, 1e6}) {
    std::vector<double> scaled;
    for (double v : vs) scaled.push_back(lambda * v);
    const ExponentFit f = fit_exponent(xs, scaled);
    CHECK(std::abs(f.slope - base.slope) < 1e-10);
    CHECK(std::abs(f.intercept - (base.intercept + std::log(lambda))) < 1e-10);
  }
  for (double k : {0.5, 2.0, 3.0}) {
    std::vector<double> xk;
    for (double x : xs) xk.push_back(std::pow(x, k));
    const ExponentFit f = fit_exponent(xk, vs);
    CHECK(std::abs(f.slope - base.slope / k) < 1e-10);
  }
}

TEST_CASE("zeros are dropped, too few points refused") {
  std::vector<double> xs = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> vs = {1, 0, 3, 4, 5, 6, 7, 8, 9, 10};
  const ExponentFit f = fit_exponent(xs, vs);
  CHECK(f.dropped_zeros == 1);
  CHECK(f.n_points == 9);
  vs[2] = 0;
  vs[3] = 0;
  CHECK_THROWS_AS(fit_exponent(xs, vs), FitRefused);
  CHECK_THROWS_AS(fit_exponent(std::vector<double>{2, 1}, std::vector<double>{1, 1}), DomainError);
  CHECK_THROWS_AS(fit_exponent(std::vector<double>{1, 2}, std::vector<double>{1}), DomainError);
}

TEST_CASE("report bounds") {
  CountSeries gi;
  gi.field = make_field(-1);
  gi.m = 2;
  gi.s = 1;
  gi.xs = {1, 2, 3};
  const auto r = make_report(gi, ExponentFit{});
  CHECK(r["kind"] == "visible");
  CHECK(r["bounds"]["bound_conditional"].get<double>() == 1.5);
  CHECK(r["bounds"]["bound_window"]["lower"].get<double>() == doctest::Approx(1.25));
  CHECK(r["bounds"]["bound_window"]["upper"].get<double>() == doctest::Approx(1.3149));
  CHECK(r["bounds"]["bound_window"]["log_factor"].get<bool>());
  CHECK(r["bounds"]["bound_unconditional"].get<double>() == 1.5);

  CountSeries q3;
  q3.field = make_field(0);
  q3.m = 3;
  q3.s = 1;
  const auto r3 = make_report(q3, ExponentFit{});
  CHECK(r3["bounds"]["bound_unconditional"].get<double>() == 2.0);
  CHECK(r3["bounds"]["bound_conditional"].get<double>() == 2.5);
  CHECK_FALSE(r3["bounds"].contains("bound_window"));

  const auto circle = make_report(CircleScan{}, ExponentFit{});
  CHECK(circle["kind"] == "circle");
  CHECK(circle["bounds"]["bound_window"]["lower"].get<double>() == 0.25);
  CHECK(circle["bounds"]["bound_window"]["upper"].get<double>() == 0.3149);
}

TEST_CASE("appendix bounds for s-prime tuples") {
  const FieldSpec gi = make_field(-1);
  CHECK(*error_bounds(gi, 1, 2).conditional == 0.75);
  CHECK_FALSE(error_bounds(gi, 1, 2).circle_window.has_value());
  CHECK_FALSE(error_bounds(gi, 1, 4).circle_window.has_value());
  CHECK(error_bounds(gi, 1, 5).circle_window->upper == doctest::Approx(0.3149));
  CHECK(error_bounds(gi, 2, 2).circle_window->lower == doctest::Approx(1.25));
  CHECK_FALSE(error_bounds(gi, 2, 2).circle_window->log_factor);
  CHECK(*error_bounds(gi, 3, 2).conditional == 2.5);
  CHECK_FALSE(error_bounds(gi, 3, 2).unconditional.has_value());
  CHECK_FALSE(error_bounds(make_field(2), 2, 1).circle_window.has_value());
}
