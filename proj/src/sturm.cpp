#include "biorder/sturm.hpp"

#include "biorder/factor.hpp"

namespace biorder {

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Remainder with a positive multiplier, so signs follow the rational remainder.
IntPoly signed_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r = pseudo_remainder(a, b);
  const int delta = a.degree() - b.degree() + 1;
  if (b.leading() < 0 && delta % 2 == 1) r = -r;
  return r;
}

IntPoly positive_content_normalized(const IntPoly& p) {
  const BigInt c = p.content();
  std::vector<BigInt> v;
  for (const BigInt& x : p.coeffs()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    v.push_back(std::move(q));
  }
  return IntPoly(std::move(v));
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw PolynomialError("Sturm chain of the zero polynomial");
  chain_.push_back(positive_content_normalized(p));
  if (p.degree() == 0) return;
  chain_.push_back(positive_content_normalized(p.derivative()));
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    if (b.degree() == 0) break;
    IntPoly r = signed_remainder(a, b);
    if (r.is_zero()) {
      throw NonSquarefreeError(p.to_string() + " is not squarefree");
    }
    chain_.push_back(positive_content_normalized(-r));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const IntPoly& q : chain_) signs.push_back(q.sign_at(x.get_num(), x.get_den()));
  return variations(signs);
}

int SturmChain::variations_at_infinity(int dir) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const IntPoly& q : chain_) signs.push_back(q.sign_at_infinity(dir));
  return variations(signs);
}

int SturmChain::count(const RootInterval& interval) const {
  const int lo = interval.lo ? variations_at(*interval.lo) : variations_at_infinity(-1);
  const int hi = interval.hi ? variations_at(*interval.hi) : variations_at_infinity(+1);
  int n = lo - hi;
  if (interval.hi && !interval.closed_hi &&
      chain_.front().sign_at(interval.hi->get_num(), interval.hi->get_den()) == 0) {
    --n;
  }
  return n;
}

int sturm_count(const IntPoly& p, const RootInterval& interval) {
  return SturmChain(p).count(interval);
}

bool has_positive_real_root(const IntPoly& p) {
  if (p.is_zero()) throw PolynomialError("zero polynomial");
  return sturm_count(squarefree_part(p), RootInterval::positive()) >= 1;
}

bool all_roots_positive_real(const IntPoly& p) {
  if (p.is_zero()) throw PolynomialError("zero polynomial");
  int total = 0;
  for (const SquarefreeFactor& f : squarefree_decomposition(p)) {
    total += f.multiplicity * sturm_count(f.factor, RootInterval::positive());
  }
  return total == p.degree();
}

}  // namespace biorder
