#include "vlp/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "vlp/error.hpp"

namespace vlp {

ExponentFit fit_exponent(std::span<const double> xs, std::span<const double> vs) {
  if (xs.size() != vs.size()) throw DomainError("fit_exponent: length mismatch");
  ExponentFit fit;
  std::vector<double> lx;
  std::vector<double> lv;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0)) throw DomainError("fit_exponent: x must be positive");
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw DomainError("fit_exponent: x must be strictly increasing");
    if (vs[i] == 0.0) {
      ++fit.dropped_zeros;
      continue;
    }
    lx.push_back(std::log(xs[i]));
    lv.push_back(std::log(std::abs(vs[i])));
  }
  fit.n_points = lx.size();
  if (fit.n_points < kMinFitPoints)
    throw FitRefused("fit_exponent: " + std::to_string(fit.n_points) +
                     " usable points, need " + std::to_string(kMinFitPoints));

  const double n = static_cast<double>(fit.n_points);
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += lv[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double dx = lx[i] - mx;
    const double dy = lv[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      const double r = lv[i] - (fit.intercept + fit.slope * lx[i]);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

ErrorBounds error_bounds(const FieldSpec& field, unsigned m, unsigned s) {
  ErrorBounds b;
  const double md = m;
  if (s == 1) {
    if (m >= 2) b.conditional = md - 0.5;
    if (m >= 2) {
      b.unconditional = md - 1.0 / field.degree;
      b.unconditional_log_factor = m == 2;
    }
  } else {
    b.conditional = (m == 1 && s == 2) ? 0.75 : md - 0.5;
  }

  if (field.disc == -4 && static_cast<std::uint64_t>(m) * s >= 2) {
    if (m >= 2) {
      // E_m^s for m >= 2 carries the circle exponent on top of x^{m-1};
      // the m = 2, s = 1 case has an extra log.
      b.circle_window = ExponentWindow{md - 1.0 + kCircleExponentLower,
                                       md - 1.0 + kCircleExponentUpper, m == 2 && s == 1};
    } else if (s >= 5) {
      b.circle_window = ExponentWindow{kCircleExponentLower, kCircleExponentUpper, false};
    }
    // m = 1, s in {2, 3, 4}: no window is asserted.
  }
  return b;
}

nlohmann::json to_json(const FieldSpec& f) {
  return {{"d", f.d},   {"disc", f.disc}, {"degree", f.degree}, {"r1", f.r1},
          {"r2", f.r2}, {"w", f.w},       {"residue_c", f.residue_c}};
}

nlohmann::json to_json(const ExponentFit& fit) {
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"r_squared", fit.r_squared},
          {"n_points", fit.n_points},
          {"dropped_zeros", fit.dropped_zeros}};
}

namespace {

nlohmann::json window_json(const ExponentWindow& w) {
  return {{"lower", w.lower}, {"upper", w.upper}, {"log_factor", w.log_factor}};
}

nlohmann::json grid_json(const std::vector<double>& xs) {
  nlohmann::json g = {{"points", xs.size()}};
  if (!xs.empty()) {
    g["x_min"] = xs.front();
    g["x_max"] = xs.back();
  }
  return g;
}

}  // namespace

nlohmann::json make_report(const CountSeries& series, const ExponentFit& fit) {
  nlohmann::json r;
  r["kind"] = series.s == 1 ? "visible" : "sprime";
  r["field"] = to_json(series.field);
  r["m"] = series.m;
  r["s"] = series.s;
  r["grid"] = grid_json(series.xs);
  r["fit"] = to_json(fit);

  const ErrorBounds b = error_bounds(series.field, series.m, series.s);
  nlohmann::json bounds = nlohmann::json::object();
  if (b.conditional) bounds["bound_conditional"] = *b.conditional;
  if (b.unconditional) {
    bounds["bound_unconditional"] = *b.unconditional;
    bounds["bound_unconditional_log_factor"] = b.unconditional_log_factor;
  }
  if (b.circle_window) bounds["bound_window"] = window_json(*b.circle_window);
  r["bounds"] = bounds;
  return r;
}

nlohmann::json make_report(const CircleScan& scan, const ExponentFit& fit) {
  nlohmann::json r;
  r["kind"] = "circle";
  r["grid"] = grid_json(scan.r_values);
  r["fit"] = to_json(fit);
  r["bounds"] = {{"bound_window", window_json({kCircleExponentLower,
                                               kCircleExponentUpper, false})}};
  return r;
}

}  // namespace vlp
