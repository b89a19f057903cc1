#pragma once

#include <cstdint>
#include <string>

namespace vlp {

/// The rational field (d = 0) or a quadratic field Q(sqrt d), together with
/// the invariants the ideal-counting machinery needs. Immutable once built.
struct FieldSpec {
  std::int64_t d = 0;     // squarefree, 0 for Q
  std::int64_t disc = 1;  // fundamental discriminant
  int degree = 1;
  int r1 = 1;
  int r2 = 0;
  int w = 2;              // roots of unity in the unit group
  double residue_c = 1.0; // residue of the Dedekind zeta function at s = 1

  bool is_rational() const noexcept { return d == 0; }
  std::uint64_t modulus() const noexcept {
    return static_cast<std::uint64_t>(disc < 0 ? -disc : disc);
  }
  std::string name() const;
};

enum class SplittingType { split, inert, ramified };

const char* to_string(SplittingType t) noexcept;

/// Throws InvalidField for d = 1 or d not squarefree.
FieldSpec make_field(std::int64_t d);

bool is_squarefree(std::int64_t d);

/// Kronecker symbol (disc / n) for n >= 1, using the standard extension of
/// the Jacobi symbol at 2. disc = 1 gives the trivial character.
int kronecker(std::int64_t disc, std::uint64_t n);

/// Behaviour of the rational prime p in a quadratic field.
SplittingType splitting_type(const FieldSpec& field, std::uint64_t p);

/// c = L(1, chi_disc) for quadratic fields, 1 for Q. Accurate to tol.
double residue_c(const FieldSpec& field, double tol);

/// Class number formula 2^r1 (2 pi)^r2 h R / (w sqrt|d_K|) with h and R
/// supplied by the caller; used to cross-check residue_c.
double class_number_formula(int r1, int r2, double h, double regulator, int w,
                            std::int64_t disc);

}  // namespace vlp
