#pragma once

#include "biorder/bigint.hpp"
#include "biorder/polynomial.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace biorder {

/// Square matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);
  static IntMatrix diagonal(const std::vector<long>& entries);

  std::size_t dim() const { return dim_; }
  BigInt& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const BigInt& at(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  IntMatrix transpose() const;
  BigInt trace() const;
  /// Fraction-free Gaussian elimination (Bareiss).
  BigInt determinant() const;

  std::vector<std::vector<BigInt>> rows() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// det(x I - A), monic of degree dim(A), via Faddeev-LeVerrier with exact
/// integer divisions.
IntPoly char_poly(const IntMatrix& a);

}  // namespace biorder
