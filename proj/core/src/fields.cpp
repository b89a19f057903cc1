#include "vlp/fields.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "vlp/error.hpp"
#include "vlp/zeta.hpp"

namespace vlp {

namespace {

constexpr std::int64_t kMaxAbsD = std::int64_t{1} << 40;
constexpr double kResidueTol = 1e-12;

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Jacobi symbol (a / n), n odd and positive.
int jacobi(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int t = 1;
  while (a != 0) {
    const int twos = std::countr_zero(a);
    a >>= twos;
    const std::uint64_t r = n % 8;
    if ((twos & 1) && (r == 3 || r == 5)) t = -t;
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace

std::string FieldSpec::name() const {
  if (is_rational()) return "Q";
  return "Q(sqrt(" + std::to_string(d) + "))";
}

const char* to_string(SplittingType t) noexcept {
  switch (t) {
    case SplittingType::split: return "split";
    case SplittingType::inert: return "inert";
    case SplittingType::ramified: return "ramified";
  }
  return "?";
}

bool is_squarefree(std::int64_t d) {
  std::uint64_t n = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

FieldSpec make_field(std::int64_t d) {
  FieldSpec f;
  if (d == 0) return f;
  if (d == 1) throw InvalidField("d = 1 does not define a quadratic field");
  if (d > kMaxAbsD || d < -kMaxAbsD)
    throw InvalidField("|d| too large: " + std::to_string(d));
  if (!is_squarefree(d))
    throw InvalidField("d must be squarefree, got " + std::to_string(d));

  f.d = d;
  f.degree = 2;
  f.disc = mod_floor(d, 4) == 1 ? d : 4 * d;
  if (d < 0) {
    f.r1 = 0;
    f.r2 = 1;
  } else {
    f.r1 = 2;
    f.r2 = 0;
  }
  f.w = d == -1 ? 4 : d == -3 ? 6 : 2;
  f.residue_c = residue_c(f, kResidueTol);
  return f;
}

int kronecker(std::int64_t disc, std::uint64_t n) {
  if (n == 0) throw DomainError("kronecker: n must be >= 1");
  if (disc == 1) return 1;

  int result = 1;
  const int twos = std::countr_zero(n);
  if (twos > 0) {
    if (disc % 2 == 0) return 0;
    const std::int64_t r = mod_floor(disc, 8);
    if ((twos & 1) && (r == 3 || r == 5)) result = -result;
    n >>= twos;
  }
  if (n == 1) return result;
  const auto a = static_cast<std::uint64_t>(
      mod_floor(disc, static_cast<std::int64_t>(n)));
  return result * jacobi(a, n);
}

SplittingType splitting_type(const FieldSpec& field, std::uint64_t p) {
  if (field.degree != 2)
    throw DomainError("splitting_type: the rational field has no splitting");
  switch (kronecker(field.disc, p)) {
    case 1: return SplittingType::split;
    case -1: return SplittingType::inert;
    default: return SplittingType::ramified;
  }
}

double residue_c(const FieldSpec& field, double tol) {
  if (!(tol > 0)) throw DomainError("residue_c: tol must be positive");
  if (field.is_rational()) return 1.0;
  return dirichlet_l(field.disc, 1.0, tol).value;
}

double class_number_formula(int r1, int r2, double h, double regulator, int w,
                            std::int64_t disc) {
  using std::numbers::pi;
  return std::pow(2.0, r1) * std::pow(2.0 * pi, r2) * h * regulator /
         (w * std::sqrt(std::abs(static_cast<double>(disc))));
}

}  // namespace vlp
