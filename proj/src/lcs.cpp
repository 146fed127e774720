#include "biorder/lcs.hpp"

#include "biorder/magnus.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace biorder {

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

using LyndonWord = std::vector<std::size_t>;

// Duval's algorithm, restricted to length k.
std::vector<LyndonWord> lyndon_words(std::size_t n, int k) {
  std::vector<LyndonWord> out;
  if (n == 0) return out;
  LyndonWord w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == k) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

bool is_lyndon(const LyndonWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    const LyndonWord rot(w.begin() + static_cast<long>(i), w.end());
    if (!std::lexicographical_compare(w.begin(), w.end(), rot.begin(), rot.end())) {
      // w must be strictly smaller than each proper suffix
      return false;
    }
  }
  return true;
}

Word standard_bracketing(const LyndonWord& w, std::size_t rank) {
  if (w.size() == 1) return Word::generator(w[0], rank);
  // Split at the longest proper suffix that is a Lyndon word.
  for (std::size_t i = 1; i < w.size(); ++i) {
    const LyndonWord suffix(w.begin() + static_cast<long>(i), w.end());
    if (is_lyndon(suffix)) {
      const LyndonWord prefix(w.begin(), w.begin() + static_cast<long>(i));
      return commutator(standard_bracketing(prefix, rank), standard_bracketing(suffix, rank));
    }
  }
  throw std::logic_error("Lyndon word without a Lyndon suffix");
}

Monomial as_monomial(const LyndonWord& w) {
  Monomial m;
  for (std::size_t g : w) m.push_back(static_cast<std::uint16_t>(g));
  return m;
}

using Homogeneous = std::map<Monomial, BigInt>;

Homogeneous top_part(const Word& w, int degree, bool check_lower) {
  const Series s = expand(w, degree);
  Homogeneous out;
  for (const auto& [m, c] : s.terms()) {
    const int d = static_cast<int>(m.size());
    if (d == 0) continue;
    if (d < degree) {
      if (check_lower) {
        throw std::logic_error("element has a nonzero part below degree " +
                               std::to_string(degree));
      }
      continue;
    }
    out.emplace(m, c);
  }
  return out;
}

std::vector<BigInt> project(Homogeneous rest, const LyndonBasis& basis,
                            const std::vector<Homogeneous>& basis_parts) {
  std::vector<BigInt> coords(basis.elements.size());
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const Monomial key = as_monomial(basis.elements[i].lyndon);
    const auto it = rest.find(key);
    if (it == rest.end()) continue;
    const BigInt& lead = basis_parts[i].at(key);
    BigInt c;
    mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lead.get_mpz_t());
    for (const auto& [m, v] : basis_parts[i]) {
      auto [slot, inserted] = rest.try_emplace(m, 0);
      slot->second -= c * v;
      if (slot->second == 0) rest.erase(slot);
    }
    coords[i] = std::move(c);
  }
  if (!rest.empty()) throw std::logic_error("homogeneous part is not a Lie element");
  return coords;
}

std::vector<Homogeneous> basis_parts(const LyndonBasis& basis) {
  std::vector<Homogeneous> parts;
  for (const BasicCommutator& b : basis.elements) {
    parts.push_back(top_part(b.bracket, basis.degree, true));
    const BigInt& lead = parts.back().at(as_monomial(b.lyndon));
    if (abs(lead) != 1) throw std::logic_error("basis element is not unitriangular");
  }
  return parts;
}

}  // namespace

std::size_t witt_dimension(std::size_t rank, int degree) {
  BigInt total = 0;
  for (int d = 1; d <= degree; ++d) {
    if (degree % d != 0) continue;
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), rank, static_cast<unsigned long>(degree / d));
    total += moebius(d) * term;
  }
  return static_cast<std::size_t>(BigInt(total / degree).get_ui());
}

LyndonBasis lyndon_basis(std::size_t rank, int degree, int degree_cap) {
  if (degree < 1 || degree > degree_cap) {
    throw LcsError("quotient degree " + std::to_string(degree) + " outside [1, " +
                   std::to_string(degree_cap) + "]");
  }
  LyndonBasis basis{rank, degree, {}};
  for (LyndonWord& w : lyndon_words(rank, degree)) {
    Word bracket = standard_bracketing(w, rank);
    basis.elements.push_back({std::move(w), std::move(bracket)});
  }
  return basis;
}

IntMatrix abelianization_matrix(const FreeMap& phi) {
  const std::size_t n = phi.rank();
  IntMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::vector<long> sums = phi.image(j).exponent_sums();
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = sums[i];
  }
  return m;
}

std::vector<BigInt> lie_coordinates(const Word& w, const LyndonBasis& basis) {
  if (w.rank() != basis.rank) throw LcsError("word rank does not match the basis");
  return project(top_part(w, basis.degree, true), basis, basis_parts(basis));
}

QuotientAction lcs_action(const FreeMap& phi, int degree, int degree_cap) {
  return lcs_action(phi, lyndon_basis(phi.rank(), degree, degree_cap));
}

QuotientAction lcs_action(const FreeMap& phi, const LyndonBasis& basis) {
  if (phi.rank() != basis.rank) throw LcsError("map rank does not match the basis");
  const BigInt det = abelianization_matrix(phi).determinant();
  if (abs(det) != 1) {
    throw LcsError("abelianized map has determinant " + det.get_str() +
                   "; not an automorphism");
  }
  const std::vector<Homogeneous> parts = basis_parts(basis);
  QuotientAction action{basis.degree, basis, IntMatrix(basis.elements.size())};
  for (std::size_t j = 0; j < basis.elements.size(); ++j) {
    const Word image = apply_map(phi, basis.elements[j].bracket);
    const std::vector<BigInt> col = project(top_part(image, basis.degree, true), basis, parts);
    for (std::size_t i = 0; i < col.size(); ++i) action.matrix.at(i, j) = col[i];
  }
  return action;
}

}  // namespace biorder
