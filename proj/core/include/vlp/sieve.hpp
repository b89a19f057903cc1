#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vlp/fields.hpp"

namespace vlp {

struct SieveOptions {
  std::size_t workers = 1;
  // Above this limit the coefficient sieve runs segment by segment.
  std::uint64_t segment_threshold = std::uint64_t{1} << 22;
  std::uint64_t segment_size = std::uint64_t{1} << 18;
  // Capacity guard: bytes allowed for one table build.
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
};

/// a[n] = number of ideals of norm exactly n, and the cumulative j_K.
/// Index 0 is unused (a[0] = j_cum[0] = 0).
struct CoefficientTable {
  FieldSpec field;
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> a;
  std::vector<std::uint64_t> j_cum;
};

/// b[n] = sum of mu over ideals of norm n; Dirichlet inverse of a.
struct MoebiusTable {
  FieldSpec field;
  std::uint64_t limit = 0;
  std::vector<std::int32_t> b;
};

CoefficientTable build_coefficients(const FieldSpec& field, std::uint64_t limit,
                                    const SieveOptions& opts = {});

/// Number of ideals with norm <= x.
std::uint64_t j_K(const CoefficientTable& table, double x);
std::uint64_t j_K(const CoefficientTable& table, std::uint64_t x);

/// Dirichlet inversion b[1] = 1, b[n] = -sum_{d|n, d<n} b[d] a[n/d].
MoebiusTable build_moebius(const CoefficientTable& coeffs);
MoebiusTable build_moebius(const FieldSpec& field, std::uint64_t limit,
                           const SieveOptions& opts = {});

/// Independent construction from local Euler factors per splitting type:
/// split (1-u)^2, inert (1-u^2), ramified and rational (1-u).
MoebiusTable build_moebius_by_factorization(const FieldSpec& field,
                                            std::uint64_t limit);

/// Primes <= limit by a plain Eratosthenes sieve.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

}  // namespace vlp
