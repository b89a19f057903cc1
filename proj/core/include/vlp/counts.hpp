#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vlp/fields.hpp"
#include "vlp/sieve.hpp"

namespace vlp {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficient and Moebius tables for one field, plus the running sums of b
/// used for block summation over equal values of floor(x/n).
struct CountTables {
  CoefficientTable coeffs;
  MoebiusTable moebius;
  std::vector<std::int64_t> moebius_cum;

  const FieldSpec& field() const noexcept { return coeffs.field; }
  std::uint64_t limit() const noexcept { return coeffs.limit; }
};

CountTables make_count_tables(const FieldSpec& field, std::uint64_t limit,
                              const SieveOptions& opts = {});

/// V_m(x, K) = sum_{n <= x} b[n] j_K(floor(x/n))^m, exactly.
BigInt visible_count(const CountTables& tables, unsigned m, double x);

/// V_m^s(x, K) = sum_{n^s <= x} b[n] j_K(floor(x/n^s))^m, exactly. Summed
/// term by term, so s = 1 is an independent route to visible_count.
BigInt sprime_count(const CountTables& tables, unsigned m, unsigned s, double x);

/// E = count - (c x)^m / zeta_K(m s). Requires m s >= 2.
double error_term(const FieldSpec& field, unsigned m, unsigned s, double x,
                  const BigInt& count);

/// (c x)^m / zeta_K(m s).
double main_term(const FieldSpec& field, unsigned m, unsigned s, double x);

struct CountSeries {
  FieldSpec field;
  unsigned m = 1;
  unsigned s = 1;
  std::vector<double> xs;
  std::vector<BigInt> counts;
  std::vector<double> main_terms;
  std::vector<double> errors;  // empty when m s < 2
};

/// x_k = x_min ratio^k for every k with x_k <= x_max.
std::vector<double> geometric_grid(double x_min, double x_max, double ratio);

/// Evaluates every grid point; points are spread over `workers` lanes and
/// written back by index, so the result does not depend on `workers`.
CountSeries count_series(const CountTables& tables, unsigned m, unsigned s,
                         const std::vector<double>& xs, std::size_t workers = 1);

// ---------------------------------------------------------------------------
// Brute-force oracle over explicitly enumerated ideals.

/// A prime ideal: rational prime p, and index 0/1 to tell the two primes
/// above a split p apart. Residue degree 2 for inert primes, 1 otherwise.
struct PrimeIdeal {
  std::uint32_t p = 0;
  std::uint8_t index = 0;
  std::uint8_t residue_degree = 1;

  std::uint64_t norm() const noexcept {
    return residue_degree == 2 ? std::uint64_t{p} * p : p;
  }
  auto operator<=>(const PrimeIdeal&) const = default;
};

struct Ideal {
  std::uint64_t norm = 1;
  // (position in IdealList::primes, exponent), positions increasing
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
};

struct IdealList {
  FieldSpec field;
  std::uint64_t limit = 0;
  std::vector<PrimeIdeal> primes;  // every prime ideal of norm <= limit
  std::vector<Ideal> ideals;       // sorted by norm
};

inline constexpr std::uint64_t kOracleIdealCap = 10'000;
inline constexpr double kOracleTupleBudget = 1e8;

IdealList enumerate_ideals(const FieldSpec& field, std::uint64_t limit);

/// Counts m-tuples of ideals of norm <= X with no prime ideal P such that
/// every entry lies in P^s.
BigInt brute_force_count(const FieldSpec& field, unsigned m, unsigned s,
                         std::uint64_t X);

/// Same oracle for every X' in 0..X at once: entry X' is the count with
/// all norms <= X'.
std::vector<BigInt> brute_force_counts_upto(const FieldSpec& field, unsigned m,
                                            unsigned s, std::uint64_t X);

}  // namespace vlp
