#pragma once

// Magnus expansion of free-group words into truncated noncommutative integer
// power series, and the bi-order it induces.
//
// Generator g maps to 1 + X_g and its inverse to 1 - X_g + X_g^2 - ...
// Monomials are ordered graded-lexicographically with X_0 < X_1 < ...; a word
// is positive when the first nonzero coefficient of its lowest-degree
// nonconstant part is positive.

#include "biorder/bigint.hpp"
#include "biorder/freegroup.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace biorder {

class TrivialElementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Monomial = std::vector<std::uint16_t>;

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class Series {
 public:
  using Terms = std::map<Monomial, BigInt, GradedLex>;

  Series(std::size_t variables, int truncation);
  static Series one(std::size_t variables, int truncation);

  std::size_t variables() const { return variables_; }
  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  BigInt coeff(const Monomial& m) const;

  /// Adds c * m; drops monomials above the truncation degree.
  void add(const Monomial& m, const BigInt& c);
  /// Right multiplication by the image of a single letter.
  void multiply_letter(const Letter& l);

  /// Terms of exactly the given degree, in graded-lex order.
  std::vector<std::pair<Monomial, BigInt>> homogeneous(int degree) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::size_t variables_;
  int truncation_;
  Terms terms_;
};

Series expand(const Word& w, int truncation);
Series series_mul(const Series& s, const Series& t, int truncation);

struct LowestTerm {
  int degree = 0;
  std::vector<std::pair<Monomial, BigInt>> part;
};

/// Throws TrivialElementError for the identity.
LowestTerm lowest_term(const Word& w);

/// -1, 0 or +1; zero exactly for the identity.
int sign(const Word& w);
/// w if positive, its inverse otherwise.
Word absolute(const Word& w);
/// u < v iff u^-1 v is positive.
std::strong_ordering compare(const Word& u, const Word& v);

/// f << g: |f|^n < |g| for every n >= 1. Throws TrivialElementError if either
/// is the identity.
bool is_infinitesimal(const Word& f, const Word& g);
/// Neither is infinitesimal with respect to the other.
bool comparable(const Word& f, const Word& g);

/// Membership in the k-th term of the lower central series (k >= 1).
bool in_gamma(const Word& w, int k);

}  // namespace biorder
