#include <numeric>
#include <vector>

#include "doctest.h"
#include "vlp/error.hpp"
#include "vlp/sieve.hpp"

using namespace vlp;

namespace {

const std::int64_t kFields[] = {0, -1, -3, 2};

std::vector<std::uint32_t> divisor_counts(std::uint64_t limit) {
  std::vector<std::uint32_t> d(limit + 1, 0);
  for (std::uint64_t e = 1; e <= limit; ++e)
    for (std::uint64_t n = e; n <= limit; n += e) ++d[n];
  return d;
}

// a * b by the double loop over d e = n.
std::vector<std::int64_t> dirichlet_product(const CoefficientTable& c, const MoebiusTable& m) {
  std::vector<std::int64_t> out(c.limit + 1, 0);
  for (std::uint64_t d = 1; d <= c.limit; ++d) {
    if (m.b[d] == 0) continue;
    for (std::uint64_t e = 1; d * e <= c.limit; ++e) out[d * e] += std::int64_t{m.b[d]} * c.a[e];
  }
  return out;
}

}  // namespace

TEST_CASE("coefficient examples") {
  const auto q = build_coefficients(make_field(0), 10);
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(q.a[n] == 1);

  const auto gi = build_coefficients(make_field(-1), 25);
  const std::uint32_t expected[] = {1, 1, 0, 1, 2, 0, 0, 1, 1, 2};
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(gi.a[n] == expected[n - 1]);
  CHECK(gi.a[25] == 3);

  CHECK(j_K(gi, 10.0) == 9);
  CHECK(j_K(gi, 0.5) == 0);
  CHECK(j_K(q, 7.9) == 7);
  CHECK_THROWS_AS(j_K(gi, 26.0), OutOfRange);
  CHECK_THROWS_AS(j_K(gi, -1.0), DomainError);
}

TEST_CASE("coefficients are multiplicative") {
  for (std::int64_t d : kFields) {
    const auto t = build_coefficients(make_field(d), 10000);
    REQUIRE(t.a[1] == 1);
    for (std::uint64_t u = 1; u <= 10000; ++u)
      for (std::uint64_t v = 1; u * v <= 10000; ++v)
        if (std::gcd(u, v) == 1) REQUIRE(t.a[u * v] == t.a[u] * t.a[v]);
  }
}

TEST_CASE("j_K grows like c x") {
  for (std::int64_t d : kFields) {
    const FieldSpec f = make_field(d);
    const auto t = build_coefficients(f, 100000);
    for (std::uint64_t n = 1; n <= t.limit; ++n) REQUIRE(t.j_cum[n] >= t.j_cum[n - 1]);
    for (std::uint64_t X : {1000u, 10000u, 100000u})
      CHECK(static_cast<double>(t.j_cum[X]) <= f.residue_c * X * 1.1);
  }
}

TEST_CASE("moebius examples") {
  const auto q = build_moebius(make_field(0), 6);
  const std::int32_t mu[] = {1, -1, -1, 0, -1, 1};
  for (std::uint64_t n = 1; n <= 6; ++n) CHECK(q.b[n] == mu[n - 1]);

  const auto gi = build_moebius(make_field(-1), 125);
  CHECK(gi.b[2] == -1);
  CHECK(gi.b[5] == -2);
  CHECK(gi.b[9] == -1);
  CHECK(gi.b[10] == 2);
  for (std::uint64_t n : {3u, 4u, 6u, 7u, 8u}) CHECK(gi.b[n] == 0);
  CHECK(gi.b[25] == 1);
  CHECK(gi.b[125] == 0);

  const auto a = build_coefficients(make_field(-1), 25);
  std::int64_t sum = 0;
  for (std::uint64_t d : {1u, 5u, 25u}) sum += std::int64_t{gi.b[d]} * a.a[25 / d];
  CHECK(sum == 0);
}

TEST_CASE("factorization route: local Euler factors") {
  const auto gi = build_moebius_by_factorization(make_field(-1), 125);
  CHECK(gi.b[5] == -2);
  CHECK(gi.b[25] == 1);
  CHECK(gi.b[125] == 0);
  CHECK(gi.b[3] == 0);
  CHECK(gi.b[9] == -1);
  CHECK(gi.b[2] == -1);
  CHECK(gi.b[4] == 0);
}

TEST_CASE("Dirichlet inversion and factorization agree up to 10^6") {
  for (std::int64_t d : kFields) {
    const FieldSpec f = make_field(d);
    const auto inv = build_moebius(f, 1000000);
    const auto fac = build_moebius_by_factorization(f, 1000000);
    CAPTURE(d);
    CHECK(inv.b == fac.b);
  }
}

TEST_CASE("b is the Dirichlet inverse of a") {
  for (std::int64_t d : kFields) {
    const auto c = build_coefficients(make_field(d), 100000);
    const auto m = build_moebius(c);
    const auto prod = dirichlet_product(c, m);
    CHECK(prod[1] == 1);
    for (std::uint64_t n = 2; n <= c.limit; ++n) REQUIRE(prod[n] == 0);
  }
}

TEST_CASE("b is multiplicative and bounded by d(n)^2") {
  const auto dn = divisor_counts(10000);
  for (std::int64_t d : kFields) {
    const auto m = build_moebius(make_field(d), 10000);
    for (std::uint64_t n = 1; n <= 10000; ++n)
      REQUIRE(std::abs(std::int64_t{m.b[n]}) <= std::int64_t{dn[n]} * dn[n]);
    for (std::uint64_t u = 1; u <= 100; ++u)
      for (std::uint64_t v = 1; u * v <= 10000; ++v)
        if (std::gcd(u, v) == 1) REQUIRE(m.b[u * v] == m.b[u] * m.b[v]);
  }
}

TEST_CASE("sum b[n] j(X/n) telescopes to 1") {
  for (std::int64_t d : kFields) {
    const auto c = build_coefficients(make_field(d), 3000);
    const auto m = build_moebius(c);
    for (std::uint64_t X = 1; X <= 3000; ++X) {
      std::int64_t s = 0;
      for (std::uint64_t n = 1; n <= X; ++n) s += std::int64_t{m.b[n]} * static_cast<std::int64_t>(c.j_cum[X / n]);
      REQUIRE(s == 1);
    }
  }
}

TEST_CASE("Q(i): 4 a[n] counts lattice points on x^2 + y^2 = n") {
  const std::uint64_t limit = 10000;
  std::vector<std::uint64_t> r2(limit + 1, 0);
  for (std::int64_t x = -100; x <= 100; ++x)
    for (std::int64_t y = -100; y <= 100; ++y) {
      const auto n = static_cast<std::uint64_t>(x * x + y * y);
      if (n >= 1 && n <= limit) ++r2[n];
    }
  const auto t = build_coefficients(make_field(-1), limit);
  for (std::uint64_t n = 1; n <= limit; ++n) REQUIRE(4 * t.a[n] == r2[n]);
}

TEST_CASE("segment boundaries and worker count do not change the table") {
  for (std::int64_t d : {-1, -3, 2, 5}) {
    const FieldSpec f = make_field(d);
    const auto plain = build_coefficients(f, 200000);
    for (std::size_t workers : {1u, 3u, 4u}) {
      for (std::uint64_t seg : {1000u, 4093u, 65536u}) {
        SieveOptions opts;
        opts.segment_threshold = 1;
        opts.segment_size = seg;
        opts.workers = workers;
        const auto seg_table = build_coefficients(f, 200000, opts);
        CAPTURE(seg);
        CAPTURE(workers);
        REQUIRE(seg_table.a == plain.a);
        REQUIRE(seg_table.j_cum == plain.j_cum);
      }
    }
  }
}

TEST_CASE("capacity and domain errors") {
  SieveOptions tiny;
  tiny.memory_budget = 1000;
  CHECK_THROWS_AS(build_coefficients(make_field(-1), 1000, tiny), CapacityError);
  CHECK_THROWS_AS(build_coefficients(make_field(-1), 0), DomainError);
}

TEST_CASE("primes_up_to") {
  const auto p = primes_up_to(30);
  CHECK(p == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(1000000).size() == 78498);
}
