#pragma once

// Exact real-root counting with Sturm chains.

#include "biorder/bigint.hpp"
#include "biorder/polynomial.hpp"

#include <optional>
#include <vector>

namespace biorder {

class NonSquarefreeError : public PolynomialError {
 public:
  using PolynomialError::PolynomialError;
};

/// An interval (lo, hi] or (lo, hi); a missing end means -inf (lo) or
/// +inf (hi).
struct RootInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  bool closed_hi = true;

  static RootInterval positive() { return {Rational(0), std::nullopt, true}; }
  static RootInterval negative() { return {std::nullopt, Rational(0), false}; }
  static RootInterval whole() { return {}; }
  static RootInterval half_open(Rational lo, Rational hi) {
    return {std::move(lo), std::move(hi), true};
  }
};

class SturmChain {
 public:
  /// Throws NonSquarefreeError when gcd(p, p') is non-constant.
  explicit SturmChain(const IntPoly& p);

  const std::vector<IntPoly>& polys() const { return chain_; }

  int variations_at(const Rational& x) const;
  int variations_at_infinity(int dir) const;
  /// Distinct real roots in the interval.
  int count(const RootInterval& interval) const;

 private:
  std::vector<IntPoly> chain_;
};

int sturm_count(const IntPoly& p, const RootInterval& interval);

/// At least one real root in (0, inf).
bool has_positive_real_root(const IntPoly& p);
/// Every root, counted with multiplicity, is real and positive.
bool all_roots_positive_real(const IntPoly& p);

}  // namespace biorder
