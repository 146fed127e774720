#pragma once

// Integer matrices of the action induced by a free-group endomorphism on the
// lower-central-series quotients gamma_k / gamma_{k+1}, in Lyndon bases.

#include "biorder/freegroup.hpp"
#include "biorder/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace biorder {

class LcsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultDegreeCap = 4;

struct BasicCommutator {
  std::vector<std::size_t> lyndon;  // the Lyndon word
  Word bracket;                     // its standard bracketing as a group word
};

struct LyndonBasis {
  std::size_t rank = 0;
  int degree = 0;
  std::vector<BasicCommutator> elements;
};

/// (1/k) sum_{d | k} mu(d) n^(k/d).
std::size_t witt_dimension(std::size_t rank, int degree);

/// Lyndon words of length k over rank letters in lexicographic order, with
/// standard bracketings [P_u, P_v] where v is the longest proper Lyndon
/// suffix.
LyndonBasis lyndon_basis(std::size_t rank, int degree, int degree_cap = kDefaultDegreeCap);

struct QuotientAction {
  int level = 0;  // the quotient degree k
  LyndonBasis basis;
  /// Column j holds the coordinates of phi(basis_j).
  IntMatrix matrix;
};

/// Column j is the exponent-sum vector of phi(x_j).
IntMatrix abelianization_matrix(const FreeMap& phi);

/// Coordinates of an element of gamma_k in the given basis of
/// gamma_k / gamma_{k+1}. Throws std::logic_error if w has a nonzero part
/// below degree k.
std::vector<BigInt> lie_coordinates(const Word& w, const LyndonBasis& basis);

/// Requires |det| = 1 for the abelianized map.
QuotientAction lcs_action(const FreeMap& phi, int degree,
                          int degree_cap = kDefaultDegreeCap);
/// Same, in a caller-supplied basis (for instance with some brackets
/// inverted).
QuotientAction lcs_action(const FreeMap& phi, const LyndonBasis& basis);

}  // namespace biorder
