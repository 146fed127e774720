#include "biorder/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace biorder {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()) {
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("IntMatrix must be square");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<long>& entries) {
  IntMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t.at(j, i) = at(i, j);
  return t;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

BigInt IntMatrix::determinant() const {
  if (dim_ == 0) return 1;
  std::vector<BigInt> m = data_;
  const std::size_t n = dim_;
  auto e = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * n + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (e(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && e(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(e(k, j), e(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = e(i, j) * e(k, k) - e(i, k) * e(k, j);
        mpz_divexact(e(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = e(k, k);
  }
  BigInt det = e(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

std::vector<std::vector<BigInt>> IntMatrix::rows() const {
  std::vector<std::vector<BigInt>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[i].push_back(at(i, j));
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < dim_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < dim_; ++j) out << (j ? " " : "") << at(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i)
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntPoly char_poly(const IntMatrix& a) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.dim();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next.at(i, i) += c[n - k + 1];
    m = std::move(next);
    const BigInt tr = (a * m).trace();
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

}  // namespace biorder
