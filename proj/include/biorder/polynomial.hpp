#pragma once

// Dense univariate polynomials with big-integer and rational coefficients,
// stored in ascending degree order.

#include "biorder/bigint.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace biorder {

class PolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const BigInt& c);
  /// c * x^k
  static IntPoly monomial(const BigInt& c, int k);
  /// x - r
  static IntPoly linear_root(const BigInt& r);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;
  const BigInt& leading() const;
  const BigInt& constant_term() const;

  BigInt eval(const BigInt& x) const;
  /// Sign of p(num/den) for den > 0, computed without fractions.
  int sign_at(const BigInt& num, const BigInt& den) const;
  /// Sign of p(x) as x -> +inf (dir > 0) or -inf (dir < 0).
  int sign_at_infinity(int dir) const;

  IntPoly derivative() const;
  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// p / content, with positive leading coefficient.
  IntPoly primitive_part() const;
  IntPoly operator-() const;

  std::string to_string(char var = 'x') const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& p, unsigned n);

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);
  explicit RatPoly(const IntPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Returns the integer polynomial when every coefficient is integral.
  bool is_integral() const;
  IntPoly to_int() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct RatDivision {
  RatPoly quotient;
  RatPoly remainder;
};

/// Division with remainder over Q: p = q * quotient + remainder.
RatDivision poly_divmod(const IntPoly& p, const IntPoly& q);

/// Exact quotient p / q over Z. Throws PolynomialError when q does not divide
/// p with an integral quotient.
IntPoly exact_divide(const IntPoly& p, const IntPoly& q);
/// True when q divides p over Z.
bool divides(const IntPoly& q, const IntPoly& p);

/// lc(q)^(deg p - deg q + 1) * p mod q, computed over Z.
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace biorder
