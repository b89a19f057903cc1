#include "vlp/zeta.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "vlp/error.hpp"

namespace vlp {

namespace {

// B_2, B_4, ..., B_20.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,         -1.0 / 30.0,      1.0 / 42.0,       -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,  7.0 / 6.0,        -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0};
constexpr int kCorrections = static_cast<int>(kBernoulli.size());
constexpr double kZeta20Upper = 1.000001;
constexpr std::uint64_t kMaxTerms = 100'000'000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier compensated sum; also tracks sum |x| for the rounding allowance.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  double abs_sum = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
    abs_sum += std::abs(x);
  }
  double value() const { return sum + comp; }
};

struct Tail {
  double value;
  double bound;
};

// sum_{k>=M} (a + k q)^{-s} by Euler-Maclaurin. For s == 1 (or any s when
// `regularize` is set) the integral term drops its a-independent constant;
// callers only do that when the weights over a sum to zero.
Tail residue_class_tail(double a, double q, std::uint64_t M, double s,
                        bool regularize) {
  const double u = a + static_cast<double>(M) * q;
  const double log_u = std::log(u);

  double integral;
  if (regularize) {
    // (u^{1-s} - 1) / (q (s - 1)), tending to -log(u)/q as s -> 1.
    integral = s == 1.0 ? -log_u / q
                        : std::expm1((1.0 - s) * log_u) / (q * (s - 1.0));
  } else {
    integral = std::exp((1.0 - s) * log_u) / (q * (s - 1.0));
  }

  const double f0 = std::exp(-s * log_u);
  double total = integral + 0.5 * f0;

  // deriv holds f^{(r)}(M) = (-1)^r s (s+1) ... (s+r-1) q^r u^{-s-r}.
  double deriv = f0;
  double factorial = 1.0;
  int r = 0;
  double last_odd = 0.0;
  for (int j = 1; j <= kCorrections; ++j) {
    while (r < 2 * j - 1) {
      deriv *= -(s + r) * q / u;
      ++r;
      factorial *= r;
    }
    total -= kBernoulli[j - 1] / (factorial * (2 * j)) * deriv;
    last_odd = deriv;
  }
  const double two_pi_pow = std::pow(2.0 * std::numbers::pi, 2 * kCorrections);
  const double bound = 2.0 * kZeta20Upper / two_pi_pow * std::abs(last_odd);
  return {total, bound};
}

}  // namespace

ZetaValue dirichlet_l(std::int64_t disc, double s, double tol) {
  if (!(tol > 0)) throw DomainError("dirichlet_l: tol must be positive");
  const bool trivial = disc == 1;
  if (trivial ? !(s > 1.0) : !(s >= 1.0))
    throw DomainError("dirichlet_l: series diverges at s = " + std::to_string(s));

  const std::uint64_t q = static_cast<std::uint64_t>(disc < 0 ? -disc : disc);
  std::vector<int> chi(q + 1, 0);
  for (std::uint64_t a = 1; a <= q; ++a) chi[a] = kronecker(disc, a);

  CompensatedSum direct;
  std::uint64_t blocks = 0;
  std::uint64_t M = std::max<std::uint64_t>(16, 64 / q + 1);
  const double qd = static_cast<double>(q);

  while (true) {
    for (; blocks < M; ++blocks) {
      for (std::uint64_t a = 1; a <= q; ++a) {
        if (chi[a] == 0) continue;
        const double n = static_cast<double>(blocks * q + a);
        direct.add(chi[a] * std::exp(-s * std::log(n)));
      }
    }
    CompensatedSum tail;
    double bound = 0.0;
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (chi[a] == 0) continue;
      const Tail t = residue_class_tail(static_cast<double>(a), qd, M, s, !trivial);
      tail.add(chi[a] * t.value);
      bound += t.bound;
    }
    const double value = direct.value() + tail.value();
    bound += 4.0 * kEps * (direct.abs_sum + tail.abs_sum);
    if (bound <= tol) return {value, bound, M * q};
    if (2 * M * q > kMaxTerms)
      throw NumericFailure("dirichlet_l: term budget exhausted", value, bound);
    M *= 2;
  }
}

ZetaValue riemann_zeta(double s, double tol) { return dirichlet_l(1, s, tol); }

ZetaValue zeta_K_at(const FieldSpec& field, double m, double tol) {
  if (!(m > 1.0))
    throw DomainError("zeta_K_at: zeta_K diverges at m = " + std::to_string(m));
  if (!(tol > 0)) throw DomainError("zeta_K_at: tol must be positive");
  if (field.is_rational()) return riemann_zeta(m, tol);

  const ZetaValue z = riemann_zeta(m, tol / 4);
  const ZetaValue l = dirichlet_l(field.disc, m, tol / (4 * z.value));
  ZetaValue out;
  out.value = z.value * l.value;
  out.tail_bound = z.value * l.tail_bound + std::abs(l.value) * z.tail_bound +
                   z.tail_bound * l.tail_bound;
  out.terms_used = z.terms_used + l.terms_used;
  if (out.tail_bound > tol)
    throw NumericFailure("zeta_K_at: tolerance not reached", out.value,
                         out.tail_bound);
  return out;
}

double unit_tail_bound(double sigma, std::uint64_t N) {
  if (!(sigma > 1.0) || N == 0) throw DomainError("unit_tail_bound: need sigma > 1, N >= 1");
  return std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0);
}

double divisor_tail_bound(double sigma, std::uint64_t N) {
  if (!(sigma > 1.0) || N == 0) throw DomainError("divisor_tail_bound: need sigma > 1, N >= 1");
  const double n = static_cast<double>(N);
  const double k = sigma - 1.0;
  return sigma * std::pow(n, -k) * ((1.0 + std::log(n)) / k + 1.0 / (k * k));
}

LineValue zeta_K_line(const CoefficientTable& table, double sigma, double t,
                      std::uint64_t N) {
  if (!(sigma >= 2.0))
    throw DomainError("zeta_K_line: only sigma >= 2 is supported");
  if (N == 0) throw DomainError("zeta_K_line: N must be >= 1");
  if (N > table.limit)
    throw OutOfRange("zeta_K_line: N exceeds coefficient table limit");

  CompensatedSum re;
  CompensatedSum im;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const std::uint32_t a = table.a[n];
    if (a == 0) continue;
    const double log_n = std::log(static_cast<double>(n));
    const double mag = a * std::exp(-sigma * log_n);
    re.add(mag * std::cos(t * log_n));
    im.add(-mag * std::sin(t * log_n));
  }
  LineValue out;
  out.value = {re.value(), im.value()};
  out.tail_bound = table.field.is_rational() ? unit_tail_bound(sigma, N)
                                             : divisor_tail_bound(sigma, N);
  out.terms_used = N;
  return out;
}

LineValue zeta_K_line(const FieldSpec& field, double sigma, double t,
                      std::uint64_t N) {
  return zeta_K_line(build_coefficients(field, N), sigma, t, N);
}

}  // namespace vlp
