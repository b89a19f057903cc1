#include "vlp/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "vlp/error.hpp"

namespace vlp {

namespace {

void check_capacity(std::uint64_t limit, std::uint64_t bytes_per_entry,
                    const SieveOptions& opts) {
  if (limit == 0) throw DomainError("table limit must be >= 1");
  const std::uint64_t need = (limit + 1) * bytes_per_entry;
  if (need / bytes_per_entry != limit + 1 || need > opts.memory_budget)
    throw CapacityError("table of limit " + std::to_string(limit) +
                        " exceeds the memory budget");
}

// chi(k) = table[k mod q]; the Kronecker symbol of a fundamental
// discriminant is periodic modulo |disc|.
std::vector<std::uint32_t> character_table(const FieldSpec& field) {
  const std::uint64_t q = field.modulus();
  std::vector<std::uint32_t> chi(q, 0);
  for (std::uint64_t r = 1; r <= q; ++r)
    chi[r % q] = static_cast<std::uint32_t>(kronecker(field.disc, r));
  return chi;
}

// Entries are accumulated with unsigned wrap-around; every final value is a
// non-negative divisor-character sum, so the wrap is exact.
void sieve_plain(std::vector<std::uint32_t>& a, std::uint64_t limit,
                 const std::vector<std::uint32_t>& chi) {
  const std::uint64_t q = chi.size();
  for (std::uint64_t e = 1; e <= limit; ++e) {
    const std::uint32_t c = chi[e % q];
    if (c == 0) continue;
    for (std::uint64_t n = e; n <= limit; n += e) a[n] += c;
  }
}

// Segment [lo, hi]: every n = e k with e <= k gets chi(e) + chi(k), once.
void sieve_segment(std::vector<std::uint32_t>& a, std::uint64_t lo,
                   std::uint64_t hi, const std::vector<std::uint32_t>& chi) {
  const std::uint64_t q = chi.size();
  for (std::uint64_t e = 1; e * e <= hi; ++e) {
    const std::uint32_t ce = chi[e % q];
    std::uint64_t k = std::max(e, (lo + e - 1) / e);
    for (std::uint64_t n = e * k; n <= hi; n += e, ++k) {
      std::uint32_t add = ce;
      if (k != e) add += chi[k % q];
      a[n] += add;
    }
  }
}

void sieve_segmented(std::vector<std::uint32_t>& a, std::uint64_t limit,
                     const std::vector<std::uint32_t>& chi,
                     const SieveOptions& opts) {
  const std::uint64_t seg = std::max<std::uint64_t>(opts.segment_size, 1);
  const std::uint64_t n_segments = (limit + seg - 1) / seg;
  const std::size_t workers = static_cast<std::size_t>(std::clamp<std::uint64_t>(
      opts.workers, 1, n_segments));

  auto run = [&](std::size_t lane) {
    for (std::uint64_t i = lane; i < n_segments; i += workers) {
      const std::uint64_t lo = 1 + i * seg;
      const std::uint64_t hi = std::min(limit, lo + seg - 1);
      sieve_segment(a, lo, hi, chi);
    }
  };
  if (workers == 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t lane = 0; lane < workers; ++lane) pool.emplace_back(run, lane);
}

}  // namespace

CoefficientTable build_coefficients(const FieldSpec& field, std::uint64_t limit,
                                    const SieveOptions& opts) {
  check_capacity(limit, sizeof(std::uint32_t) + sizeof(std::uint64_t), opts);

  CoefficientTable t;
  t.field = field;
  t.limit = limit;
  t.a.assign(limit + 1, 0);
  if (field.is_rational()) {
    std::fill(t.a.begin() + 1, t.a.end(), 1u);
  } else {
    const auto chi = character_table(field);
    if (limit > opts.segment_threshold)
      sieve_segmented(t.a, limit, chi, opts);
    else
      sieve_plain(t.a, limit, chi);
  }

  t.j_cum.assign(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) t.j_cum[n] = t.j_cum[n - 1] + t.a[n];
  return t;
}

std::uint64_t j_K(const CoefficientTable& table, std::uint64_t x) {
  if (x > table.limit)
    throw OutOfRange("j_K: x = " + std::to_string(x) + " exceeds table limit " +
                     std::to_string(table.limit));
  return table.j_cum[x];
}

std::uint64_t j_K(const CoefficientTable& table, double x) {
  if (std::isnan(x) || x < 0) throw DomainError("j_K: x must be non-negative");
  if (x > static_cast<double>(table.limit))
    throw OutOfRange("j_K: x exceeds table limit " + std::to_string(table.limit));
  return table.j_cum[static_cast<std::uint64_t>(std::floor(x))];
}

MoebiusTable build_moebius(const CoefficientTable& coeffs) {
  const std::uint64_t limit = coeffs.limit;
  MoebiusTable m;
  m.field = coeffs.field;
  m.limit = limit;
  m.b.assign(limit + 1, 0);

  // acc[n] collects sum_{d|n, d<n} b[d] a[n/d] before b[n] is read.
  std::vector<std::int64_t> acc(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    const std::int64_t bd = d == 1 ? 1 : -acc[d];
    m.b[d] = static_cast<std::int32_t>(bd);
    if (bd == 0) continue;
    for (std::uint64_t k = 2, n = 2 * d; n <= limit; ++k, n += d)
      acc[n] += bd * coeffs.a[k];
  }
  return m;
}

MoebiusTable build_moebius(const FieldSpec& field, std::uint64_t limit,
                           const SieveOptions& opts) {
  return build_moebius(build_coefficients(field, limit, opts));
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t k = p * p; k <= limit; k += p) composite[k] = true;
  }
  return primes;
}

MoebiusTable build_moebius_by_factorization(const FieldSpec& field,
                                            std::uint64_t limit) {
  check_capacity(limit, sizeof(std::int32_t) + sizeof(std::uint32_t), {});

  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (spf[p] != 0) continue;
    for (std::uint64_t k = p; k <= limit; k += p)
      if (spf[k] == 0) spf[k] = static_cast<std::uint32_t>(p);
  }

  auto local = [&](std::uint64_t p, int k) -> std::int32_t {
    const SplittingType type =
        field.is_rational() ? SplittingType::ramified : splitting_type(field, p);
    switch (type) {
      case SplittingType::split: return k == 1 ? -2 : k == 2 ? 1 : 0;
      case SplittingType::inert: return k == 2 ? -1 : 0;
      case SplittingType::ramified: return k == 1 ? -1 : 0;
    }
    return 0;
  };

  MoebiusTable m;
  m.field = field;
  m.limit = limit;
  m.b.assign(limit + 1, 0);
  if (limit >= 1) m.b[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const std::uint64_t p = spf[n];
    std::uint64_t rest = n;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    m.b[n] = m.b[rest] == 0 ? 0 : m.b[rest] * local(p, k);
  }
  return m;
}

}  // namespace vlp
