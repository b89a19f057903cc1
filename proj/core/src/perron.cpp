#include "vlp/perron.hpp"

#include <array>
#include <cmath>

#include "vlp/error.hpp"

namespace vlp {

namespace {

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with weights; the
// odd-indexed nodes are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxDepth = 30;

struct Integrand {
  double x2;
  double log_x;

  // x^{2+it} / (2 + it) / (2 pi)
  std::complex<double> operator()(double t) const {
    const double phase = t * log_x;
    const std::complex<double> num(x2 * std::cos(phase), x2 * std::sin(phase));
    return num / std::complex<double>(2.0, t) / (2.0 * std::numbers::pi);
  }
};

struct Panel {
  std::complex<double> kronrod;
  double error;
};

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const std::complex<double> fc = f(c);
  std::complex<double> k = fc * kWgk[7];
  std::complex<double> g = fc * kWg[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kXgk[i];
    const std::complex<double> sum = f(c - dx) + f(c + dx);
    k += kWgk[i] * sum;
    if (i % 2 == 1) g += kWg[i / 2] * sum;
  }
  return {k * h, std::abs((k - g) * h)};
}

struct Accumulator {
  std::complex<double> total;
  double error = 0.0;
  std::uint64_t nodes = 0;
};

void integrate_panel(const Integrand& f, double a, double b, double tol_density,
                     int depth, Accumulator& acc) {
  const Panel p = gauss_kronrod(f, a, b);
  acc.nodes += 15;
  if (p.error <= tol_density * (b - a) || depth >= kMaxDepth) {
    acc.total += p.kronrod;
    acc.error += p.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  integrate_panel(f, a, mid, tol_density, depth + 1, acc);
  integrate_panel(f, mid, b, tol_density, depth + 1, acc);
}

}  // namespace

double kernel_error_bound(double x, double T) {
  if (x == 1.0) return kKernelErrorConstantAtOne / T;
  return kKernelErrorConstant * x * x / (T * std::abs(std::log(x)));
}

PerronResult kernel_quadrature(double x, double T, std::uint64_t nodes,
                               const QuadratureOptions& opts) {
  if (!(x > 0)) throw DomainError("kernel_quadrature: x must be positive");
  if (!(T > 0)) throw DomainError("kernel_quadrature: T must be positive");
  if (nodes < 64) throw DomainError("kernel_quadrature: need at least 64 nodes");

  const double log_x = std::log(x);
  const Integrand f{x * x, log_x};

  double width = 1.0;
  if (log_x != 0.0) width = std::min(width, std::numbers::pi / (2.0 * std::abs(log_x)));
  auto panels = static_cast<std::uint64_t>(std::ceil(2.0 * T / width));
  panels = std::max<std::uint64_t>(panels, (nodes + 14) / 15);
  if (panels * 15 > opts.max_nodes)
    throw NumericFailure("kernel_quadrature: node budget too small for T", 0.0, 0.0);

  const double h = 2.0 * T / static_cast<double>(panels);
  const double tol_density = opts.tol * std::max(1.0, x * x) / (2.0 * T);
  Accumulator acc;
  for (std::uint64_t k = 0; k < panels; ++k) {
    const double a = -T + static_cast<double>(k) * h;
    const double b = k + 1 == panels ? T : -T + static_cast<double>(k + 1) * h;
    integrate_panel(f, a, b, tol_density, 0, acc);
    if (acc.nodes > opts.max_nodes)
      throw NumericFailure("kernel_quadrature: node budget exhausted",
                           acc.total.real(), acc.error);
  }

  PerronResult r;
  r.x = x;
  r.T = T;
  r.estimate = acc.total;
  r.reference = x > 1.0 ? 1.0 : x == 1.0 ? 0.5 : 0.0;
  r.abs_error = std::abs(r.estimate - r.reference);
  r.nodes = acc.nodes;
  return r;
}

PerronResult perron_j_reconstruction(const CoefficientTable& table, double x,
                                     double T, std::uint64_t n_cut,
                                     const QuadratureOptions& opts) {
  const double frac = x - std::floor(x);
  if (!(x >= 1.5) || std::abs(frac - 0.5) > 1e-12)
    throw DomainError("perron_j_reconstruction: x must be n + 1/2 with n >= 1");
  if (n_cut == 0) n_cut = static_cast<std::uint64_t>(std::ceil(2.0 * x));
  if (static_cast<double>(n_cut) < 2.0 * x)
    throw DomainError("perron_j_reconstruction: n_cut must be >= 2x");
  if (n_cut > table.limit)
    throw OutOfRange("perron_j_reconstruction: n_cut exceeds table limit");

  PerronResult r;
  r.x = x;
  r.T = T;
  for (std::uint64_t n = 1; n <= n_cut; ++n) {
    if (table.a[n] == 0) continue;
    const PerronResult k = kernel_quadrature(x / static_cast<double>(n), T, 64, opts);
    r.estimate += static_cast<double>(table.a[n]) * k.estimate;
    r.nodes += k.nodes;
  }
  r.reference = static_cast<double>(j_K(table, x));
  r.abs_error = std::abs(r.estimate - r.reference);
  return r;
}

}  // namespace vlp
