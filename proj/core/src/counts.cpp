#include "vlp/counts.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "vlp/error.hpp"
#include "vlp/zeta.hpp"

namespace vlp {

namespace {

constexpr double kMainTermTol = 1e-12;

std::uint64_t checked_floor(const CountTables& tables, double x) {
  if (std::isnan(x) || x < 0) throw DomainError("count: x must be non-negative");
  if (x > static_cast<double>(tables.limit()))
    throw OutOfRange("count: x exceeds table limit " + std::to_string(tables.limit()));
  return static_cast<std::uint64_t>(std::floor(x));
}

BigInt power(std::uint64_t base, unsigned m) {
  return boost::multiprecision::pow(BigInt(base), m);
}

}  // namespace

CountTables make_count_tables(const FieldSpec& field, std::uint64_t limit,
                              const SieveOptions& opts) {
  CountTables t;
  t.coeffs = build_coefficients(field, limit, opts);
  t.moebius = build_moebius(t.coeffs);
  t.moebius_cum.assign(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n)
    t.moebius_cum[n] = t.moebius_cum[n - 1] + t.moebius.b[n];
  return t;
}

BigInt visible_count(const CountTables& tables, unsigned m, double x) {
  if (m == 0) throw DomainError("visible_count: m must be >= 1");
  const std::uint64_t X = checked_floor(tables, x);
  const auto& j = tables.coeffs.j_cum;
  const auto& cum = tables.moebius_cum;

  BigInt total = 0;
  for (std::uint64_t n = 1; n <= X;) {
    const std::uint64_t q = X / n;
    const std::uint64_t hi = X / q;
    const std::int64_t weight = cum[hi] - cum[n - 1];
    if (weight != 0 && j[q] != 0) total += weight * power(j[q], m);
    n = hi + 1;
  }
  return total;
}

BigInt sprime_count(const CountTables& tables, unsigned m, unsigned s, double x) {
  if (m == 0) throw DomainError("sprime_count: m must be >= 1");
  if (s == 0) throw DomainError("sprime_count: s must be >= 1");
  const std::uint64_t X = checked_floor(tables, x);
  const auto& j = tables.coeffs.j_cum;
  const auto& b = tables.moebius.b;

  BigInt total = 0;
  for (std::uint64_t n = 1;; ++n) {
    std::uint64_t ns = 1;
    for (unsigned k = 0; k < s && ns <= X; ++k) ns *= n;
    if (ns > X) break;
    if (b[n] != 0) total += b[n] * power(j[X / ns], m);
  }
  return total;
}

double main_term(const FieldSpec& field, unsigned m, unsigned s, double x) {
  if (static_cast<std::uint64_t>(m) * s < 2)
    throw DomainError("main term undefined: zeta_K(m s) diverges for m s < 2");
  const double zeta = zeta_K_at(field, static_cast<double>(m) * s, kMainTermTol).value;
  const long double cx = static_cast<long double>(field.residue_c) * x;
  return static_cast<double>(std::pow(cx, static_cast<long double>(m)) / zeta);
}

double error_term(const FieldSpec& field, unsigned m, unsigned s, double x,
                  const BigInt& count) {
  const double main = main_term(field, m, s, x);
  return static_cast<double>(count.convert_to<long double>() -
                             static_cast<long double>(main));
}

std::vector<double> geometric_grid(double x_min, double x_max, double ratio) {
  if (!(ratio > 1.0)) throw DomainError("geometric_grid: ratio must exceed 1");
  if (!(x_min > 0) || !(x_max >= x_min))
    throw DomainError("geometric_grid: need 0 < x_min <= x_max");
  std::vector<double> xs;
  for (int k = 0;; ++k) {
    const double x = x_min * std::pow(ratio, k);
    if (x > x_max * (1 + 1e-12)) break;
    xs.push_back(std::min(x, x_max));
  }
  return xs;
}

CountSeries count_series(const CountTables& tables, unsigned m, unsigned s,
                         const std::vector<double>& xs, std::size_t workers) {
  if (!std::is_sorted(xs.begin(), xs.end()))
    throw DomainError("count_series: grid must be increasing");
  CountSeries out;
  out.field = tables.field();
  out.m = m;
  out.s = s;
  out.xs = xs;
  out.counts.assign(xs.size(), 0);
  const bool has_main = static_cast<std::uint64_t>(m) * s >= 2;
  if (has_main) {
    out.main_terms.assign(xs.size(), 0.0);
    out.errors.assign(xs.size(), 0.0);
  }

  auto eval = [&](std::size_t i) {
    out.counts[i] = s == 1 ? visible_count(tables, m, xs[i])
                           : sprime_count(tables, m, s, xs[i]);
    if (has_main) {
      out.main_terms[i] = main_term(out.field, m, s, xs[i]);
      out.errors[i] = static_cast<double>(out.counts[i].convert_to<long double>() -
                                          static_cast<long double>(out.main_terms[i]));
    }
  };

  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(xs.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) eval(i);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (std::size_t lane = 0; lane < workers; ++lane) {
      pool.emplace_back([&, lane] {
        for (std::size_t i = lane; i < xs.size(); i += workers) eval(i);
      });
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

IdealList enumerate_ideals(const FieldSpec& field, std::uint64_t limit) {
  if (limit > kOracleIdealCap)
    throw CapacityError("enumerate_ideals: oracle scale is limited to norm <= " +
                        std::to_string(kOracleIdealCap));
  IdealList list;
  list.field = field;
  list.limit = limit;

  for (std::uint32_t p : primes_up_to(limit)) {
    if (field.is_rational()) {
      list.primes.push_back({p, 0, 1});
      continue;
    }
    switch (splitting_type(field, p)) {
      case SplittingType::split:
        list.primes.push_back({p, 0, 1});
        list.primes.push_back({p, 1, 1});
        break;
      case SplittingType::inert:
        if (std::uint64_t{p} * p <= limit) list.primes.push_back({p, 0, 2});
        break;
      case SplittingType::ramified:
        list.primes.push_back({p, 0, 1});
        break;
    }
  }
  std::stable_sort(list.primes.begin(), list.primes.end(),
                   [](const PrimeIdeal& x, const PrimeIdeal& y) { return x.norm() < y.norm(); });

  if (limit == 0) return list;

  Ideal current;
  auto extend = [&](auto&& self, std::size_t start) -> void {
    list.ideals.push_back(current);
    for (std::size_t i = start; i < list.primes.size(); ++i) {
      const std::uint64_t np = list.primes[i].norm();
      if (current.norm * np > limit) break;
      const std::uint64_t saved = current.norm;
      for (std::uint32_t e = 1; current.norm * np <= limit; ++e) {
        current.norm *= np;
        current.factors.emplace_back(static_cast<std::uint32_t>(i), e);
        self(self, i + 1);
        current.factors.pop_back();
      }
      current.norm = saved;
    }
  };
  extend(extend, 0);

  std::stable_sort(list.ideals.begin(), list.ideals.end(),
                   [](const Ideal& x, const Ideal& y) { return x.norm < y.norm; });
  return list;
}

std::vector<BigInt> brute_force_counts_upto(const FieldSpec& field, unsigned m,
                                            unsigned s, std::uint64_t X) {
  if (m == 0 || s == 0) throw DomainError("brute_force_count: m, s must be >= 1");
  const IdealList list = enumerate_ideals(field, X);
  const std::size_t n = list.ideals.size();
  if (std::pow(static_cast<double>(n), m) > kOracleTupleBudget)
    throw CapacityError("brute_force_count: tuple enumeration budget exceeded");

  // For each ideal, the prime ideals P with ideal in P^s (sorted positions).
  std::vector<std::vector<std::uint32_t>> deep(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto [pos, e] : list.ideals[i].factors)
      if (e >= s) deep[i].push_back(pos);

  std::vector<std::uint64_t> hist(X + 1, 0);
  std::vector<std::vector<std::uint32_t>> common(m + 1);

  // Ideals are sorted by norm, so the tuple's largest norm belongs to its
  // largest index.
  auto walk = [&](auto&& self, unsigned level, std::size_t max_index) -> void {
    if (level == m) {
      if (common[m].empty()) ++hist[list.ideals[max_index].norm];
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto& next = common[level + 1];
      next.clear();
      if (level == 0) {
        next = deep[i];
      } else if (!common[level].empty()) {
        std::set_intersection(common[level].begin(), common[level].end(),
                              deep[i].begin(), deep[i].end(), std::back_inserter(next));
      }
      self(self, level + 1, std::max(max_index, i));
    }
  };
  if (n > 0) walk(walk, 0, 0);

  std::vector<BigInt> out(X + 1, 0);
  std::uint64_t running = 0;
  for (std::uint64_t x = 0; x <= X; ++x) {
    running += hist[x];
    out[x] = running;
  }
  return out;
}

BigInt brute_force_count(const FieldSpec& field, unsigned m, unsigned s,
                         std::uint64_t X) {
  return brute_force_counts_upto(field, m, s, X)[X];
}

}  // namespace vlp
