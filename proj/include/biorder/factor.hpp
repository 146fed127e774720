#pragma once

// Factorization of integer polynomials over Q (Zassenhaus: modular
// factorization, Hensel lifting, recombination).

#include "biorder/bigint.hpp"
#include "biorder/polynomial.hpp"

#include <vector>

namespace biorder {

struct SquarefreeFactor {
  IntPoly factor;
  int multiplicity = 1;
};

/// Yun's algorithm over Z. Factors are primitive with positive leading
/// coefficient, pairwise coprime and squarefree; multiplicities increase.
/// The product of factor^multiplicity equals the primitive part of p.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p);

/// Squarefree part of the primitive part of p.
IntPoly squarefree_part(const IntPoly& p);

struct IrreducibleFactor {
  IntPoly factor;
  int multiplicity = 1;
  int positive_roots = 0;  // distinct real roots in (0, inf)
  int negative_roots = 0;  // distinct real roots in (-inf, 0)
  int real_roots = 0;      // distinct real roots in (-inf, inf)
};

struct FactorReport {
  /// Signed content: input = unit * prod factor^multiplicity.
  BigInt unit;
  /// Primitive, positive leading coefficient, sorted by degree then
  /// ascending-coefficient lexicographic order.
  std::vector<IrreducibleFactor> factors;

  IntPoly product() const;
};

/// Complete factorization of a squarefree primitive polynomial with positive
/// leading coefficient into irreducibles over Z (unsorted).
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

FactorReport factor_over_Q(const IntPoly& p);

/// Rational roots with multiplicity, by divisor enumeration of the leading
/// and constant coefficients. Ordered by absolute value, positive first.
std::vector<Rational> rational_roots(const IntPoly& p);

}  // namespace biorder
