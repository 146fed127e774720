#pragma once

// Independent oracles and seeded generators shared by the test programs.
// Nothing here calls the code under test except for plain data types.

#include "biorder/freegroup.hpp"
#include "biorder/matrix.hpp"
#include "biorder/polynomial.hpp"

#include <map>
#include <random>
#include <vector>

namespace testing {

using biorder::BigInt;
using biorder::FreeMap;
using biorder::IntMatrix;
using biorder::IntPoly;
using biorder::Letter;
using biorder::Word;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random letters appended one at a time; cancellation may shorten the word.
inline Word random_word(std::mt19937_64& rng, std::size_t rank, int max_length) {
  Word w(rank);
  const long len = uniform(rng, 0, max_length);
  for (long i = 0; i < len; ++i) {
    const auto g = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rank) - 1));
    w.push_back({g, uniform(rng, 0, 1) ? 1 : -1});
  }
  return w;
}

inline Word random_nonidentity(std::mt19937_64& rng, std::size_t rank, int max_length) {
  for (;;) {
    Word w = random_word(rng, rank, max_length);
    if (!w.is_identity()) return w;
  }
}

inline Word gen(std::size_t i, std::size_t rank, int e = 1) {
  return Word::generator(i, rank, e);
}

// Elementary Nielsen moves with their inverses: x_i -> x_i x_j^e,
// x_i -> x_j^e x_i, x_i -> x_i^-1, and swaps.
inline FreeMap random_nielsen(std::mt19937_64& rng, std::size_t rank, int moves) {
  std::vector<Word> images, inverse;
  for (std::size_t i = 0; i < rank; ++i) {
    images.push_back(gen(i, rank));
    inverse.push_back(gen(i, rank));
  }
  FreeMap phi(images, inverse);
  for (int m = 0; m < moves; ++m) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rank) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rank) - 2));
    if (j >= i) ++j;
    const int e = uniform(rng, 0, 1) ? 1 : -1;
    std::vector<Word> a = images, b = inverse;
    switch (uniform(rng, 0, 3)) {
      case 0:
        a[i] = biorder::multiply(gen(i, rank), gen(j, rank, e));
        b[i] = biorder::multiply(gen(i, rank), gen(j, rank, -e));
        break;
      case 1:
        a[i] = biorder::multiply(gen(j, rank, e), gen(i, rank));
        b[i] = biorder::multiply(gen(j, rank, -e), gen(i, rank));
        break;
      case 2:
        a[i] = gen(i, rank, -1);
        b[i] = gen(i, rank, -1);
        break;
      default:
        std::swap(a[i], a[j]);
        std::swap(b[i], b[j]);
        break;
    }
    phi = biorder::compose(phi, FreeMap(a, b));
  }
  return phi;
}

// ---- polynomial oracles over plain coefficient vectors ----

using Coeffs = std::vector<BigInt>;  // ascending

inline Coeffs trimmed(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trimmed(c);
}

inline Coeffs poly_add(const Coeffs& a, const Coeffs& b, int sign = 1) {
  Coeffs c(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += sign * b[i];
  return trimmed(c);
}

// det(x I - A) by cofactor expansion along the first row.
inline Coeffs cofactor_charpoly(const std::vector<std::vector<Coeffs>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {BigInt(1)};
  if (n == 1) return m[0][0];
  Coeffs total;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Coeffs>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Coeffs> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const Coeffs term = poly_mul(m[0][j], cofactor_charpoly(minor));
    total = poly_add(total, term, j % 2 == 0 ? 1 : -1);
  }
  return total;
}

inline Coeffs cofactor_charpoly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Coeffs>> m(n, std::vector<Coeffs>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = trimmed(i == j ? Coeffs{-a.at(i, j), BigInt(1)} : Coeffs{-a.at(i, j)});
  return cofactor_charpoly(m);
}

// Divides by (x - r) with the schoolbook synthetic scheme on descending
// coefficients; returns the quotient (ascending) and the remainder.
inline std::pair<Coeffs, BigInt> synthetic_division(const Coeffs& ascending, const BigInt& r) {
  Coeffs desc(ascending.rbegin(), ascending.rend());
  Coeffs out;
  BigInt carry = 0;
  for (const BigInt& c : desc) {
    carry = carry * r + c;
    out.push_back(carry);
  }
  const BigInt rem = out.back();
  out.pop_back();
  return {Coeffs(out.rbegin(), out.rend()), rem};
}

inline Coeffs coeffs_of(std::initializer_list<long> c) {
  Coeffs out;
  for (long v : c) out.emplace_back(v);
  return out;
}

// ---- naive Magnus expansion: full product of letter series ----

using NaiveSeries = std::map<std::vector<int>, BigInt>;

inline NaiveSeries naive_letter(const Letter& l, int truncation) {
  NaiveSeries s;
  s[{}] = 1;
  for (int k = 1; k <= truncation; ++k) {
    if (l.exponent > 0 && k > 1) break;
    s[std::vector<int>(k, static_cast<int>(l.generator))] = (l.exponent < 0 && k % 2) ? -1 : 1;
  }
  return s;
}

inline NaiveSeries naive_mul(const NaiveSeries& a, const NaiveSeries& b, int truncation) {
  NaiveSeries out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (static_cast<int>(ma.size() + mb.size()) > truncation) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline NaiveSeries naive_expand(const Word& w, int truncation) {
  NaiveSeries s;
  s[{}] = 1;
  for (const Letter& l : w.letters()) s = naive_mul(s, naive_letter(l, truncation), truncation);
  return s;
}

}  // namespace testing
