#include "biorder/magnus.hpp"

#include <algorithm>

namespace biorder {

Series::Series(std::size_t variables, int truncation)
    : variables_(variables), truncation_(truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation degree must be >= 1");
}

Series Series::one(std::size_t variables, int truncation) {
  Series s(variables, truncation);
  s.terms_.emplace(Monomial{}, BigInt(1));
  return s;
}

BigInt Series::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Series::add(const Monomial& m, const BigInt& c) {
  if (c == 0 || static_cast<int>(m.size()) > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Series::multiply_letter(const Letter& l) {
  // s * (1 + X) or s * (1 - X + X^2 - ...); the constant part keeps s itself.
  const auto g = static_cast<std::uint16_t>(l.generator);
  std::vector<std::pair<Monomial, BigInt>> extra;
  for (const auto& [m, c] : terms_) {
    const int room = truncation_ - static_cast<int>(m.size());
    if (room <= 0) continue;
    Monomial next = m;
    if (l.exponent > 0) {
      next.push_back(g);
      extra.emplace_back(std::move(next), c);
    } else {
      for (int j = 1; j <= room; ++j) {
        next.push_back(g);
        extra.emplace_back(next, (j % 2) ? BigInt(-c) : c);
      }
    }
  }
  for (const auto& [m, c] : extra) add(m, c);
}

std::vector<std::pair<Monomial, BigInt>> Series::homogeneous(int degree) const {
  std::vector<std::pair<Monomial, BigInt>> out;
  const Monomial lo(static_cast<std::size_t>(degree), 0);
  for (auto it = terms_.lower_bound(lo);
       it != terms_.end() && static_cast<int>(it->first.size()) == degree; ++it) {
    out.emplace_back(it->first, it->second);
  }
  return out;
}

Series expand(const Word& w, int truncation) {
  Series s = Series::one(w.rank(), truncation);
  for (const Letter& l : w.letters()) s.multiply_letter(l);
  return s;
}

Series series_mul(const Series& s, const Series& t, int truncation) {
  if (s.variables() != t.variables()) {
    throw std::invalid_argument("series_mul: variable count mismatch");
  }
  Series out(s.variables(), truncation);
  for (const auto& [ma, ca] : s.terms()) {
    if (static_cast<int>(ma.size()) > truncation) break;
    for (const auto& [mb, cb] : t.terms()) {
      if (static_cast<int>(ma.size() + mb.size()) > truncation) break;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add(m, ca * cb);
    }
  }
  return out;
}

LowestTerm lowest_term(const Word& w) {
  if (w.is_identity()) throw TrivialElementError("the identity has no lowest term");
  const int cap = static_cast<int>(w.length());
  int d = std::min(2, cap);
  while (true) {
    const Series s = expand(w, d);
    // Terms are graded-lex ordered, so the first nonconstant one has the
    // lowest degree.
    auto it = s.terms().begin();
    if (it != s.terms().end() && it->first.empty()) ++it;
    if (it != s.terms().end()) {
      LowestTerm lt;
      lt.degree = static_cast<int>(it->first.size());
      lt.part = s.homogeneous(lt.degree);
      return lt;
    }
    if (d >= cap) break;
    d = std::min(2 * d, cap);
  }
  throw std::logic_error("nonidentity word with vanishing expansion up to its length");
}

int sign(const Word& w) {
  if (w.is_identity()) return 0;
  return sgn(lowest_term(w).part.front().second);
}

Word absolute(const Word& w) { return sign(w) < 0 ? invert(w) : w; }

std::strong_ordering compare(const Word& u, const Word& v) {
  const int s = sign(multiply(invert(u), v));
  if (s > 0) return std::strong_ordering::less;
  if (s < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_infinitesimal(const Word& f, const Word& g) {
  if (f.is_identity() || g.is_identity()) {
    throw TrivialElementError("infinitesimality is defined for nonidentity elements");
  }
  // |f|^n < |g| for all n iff the lowest term of |f| sits strictly after that
  // of |g|: higher degree, or same degree with a later leading monomial.
  const LowestTerm a = lowest_term(f);
  const LowestTerm b = lowest_term(g);
  if (a.degree != b.degree) return a.degree > b.degree;
  return GradedLex{}(b.part.front().first, a.part.front().first);
}

bool comparable(const Word& f, const Word& g) {
  return !is_infinitesimal(f, g) && !is_infinitesimal(g, f);
}

bool in_gamma(const Word& w, int k) {
  if (k < 1) throw std::invalid_argument("lower central series index must be >= 1");
  if (k == 1 || w.is_identity()) return true;
  const Series s = expand(w, k - 1);
  return s.terms().size() == 1 && s.terms().begin()->first.empty();
}

}  // namespace biorder
