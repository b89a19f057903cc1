#pragma once

#include <complex>
#include <cstdint>

#include "vlp/fields.hpp"
#include "vlp/sieve.hpp"

namespace vlp {

struct ZetaValue {
  double value = 0.0;
  double tail_bound = 0.0;  // rigorous bound on the truncation error
  std::uint64_t terms_used = 0;
};

/// L(s, chi_disc) for real s >= 1 (s = 1 only for a non-trivial character).
/// Sums complete character blocks directly and closes each residue class
/// with an Euler-Maclaurin tail whose remainder is bounded explicitly.
ZetaValue dirichlet_l(std::int64_t disc, double s, double tol);

/// Riemann zeta at real s > 1.
ZetaValue riemann_zeta(double s, double tol);

/// zeta_K(m) for real m > 1, as zeta(m) * L(m, chi) for quadratic K.
ZetaValue zeta_K_at(const FieldSpec& field, double m, double tol);

struct LineValue {
  std::complex<double> value;
  double tail_bound = 0.0;  // independent of t
  std::uint64_t terms_used = 0;
};

/// Truncated Dirichlet series sum_{n<=N} a(n) n^{-sigma-it}, sigma >= 2.
LineValue zeta_K_line(const CoefficientTable& table, double sigma, double t,
                      std::uint64_t N);
LineValue zeta_K_line(const FieldSpec& field, double sigma, double t,
                      std::uint64_t N);

/// Upper bound for sum_{n>N} d(n) n^{-sigma} (sigma > 1), from
/// sum_{n<=x} d(n) <= x (1 + log x) and partial summation.
double divisor_tail_bound(double sigma, std::uint64_t N);

/// Upper bound for sum_{n>N} n^{-sigma}.
double unit_tail_bound(double sigma, std::uint64_t N);

}  // namespace vlp
