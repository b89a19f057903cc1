#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "vlp/circle.hpp"
#include "vlp/counts.hpp"

namespace vlp {

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
  std::size_t dropped_zeros = 0;
};

inline constexpr std::size_t kMinFitPoints = 8;

// Known window for the circle-problem exponent: the Hardy-Landau lower
// bound and Huxley's upper bound.
inline constexpr double kCircleExponentLower = 0.25;
inline constexpr double kCircleExponentUpper = 0.3149;

/// Least squares line through (log x, log |v|); points with v == 0 are
/// dropped and counted. Throws FitRefused below kMinFitPoints survivors.
ExponentFit fit_exponent(std::span<const double> xs, std::span<const double> vs);

struct ExponentWindow {
  double lower = 0.0;
  double upper = 0.0;
  bool log_factor = false;
};

/// Exponent bounds that apply to E_m^s over a field.
struct ErrorBounds {
  std::optional<double> conditional;      // under the Lindelof hypothesis
  std::optional<double> unconditional;    // unconditional, s = 1 only
  bool unconditional_log_factor = false;
  std::optional<ExponentWindow> circle_window;  // Q(sqrt(-1)) only
};

ErrorBounds error_bounds(const FieldSpec& field, unsigned m, unsigned s);

nlohmann::json to_json(const FieldSpec& field);
nlohmann::json to_json(const ExponentFit& fit);

nlohmann::json make_report(const CountSeries& series, const ExponentFit& fit);
nlohmann::json make_report(const CircleScan& scan, const ExponentFit& fit);

}  // namespace vlp
