#include "biorder/factor.hpp"

#include "biorder/sturm.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>

namespace biorder {

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw PolynomialError("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  const IntPoly f = p.primitive_part();
  if (f.degree() <= 0) return out;
  // Yun's algorithm. Every gcd is primitive, so each division is exact over Z.
  const IntPoly a0 = gcd(f, f.derivative());
  IntPoly b = exact_divide(f, a0);
  IntPoly c = exact_divide(f.derivative(), a0);
  IntPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const IntPoly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
  }
  return out;
}

IntPoly squarefree_part(const IntPoly& p) {
  IntPoly out = IntPoly::constant(1);
  for (const SquarefreeFactor& f : squarefree_decomposition(p)) out = out * f.factor;
  return out;
}

IntPoly FactorReport::product() const {
  IntPoly out = IntPoly::constant(unit);
  for (const IrreducibleFactor& f : factors) {
    out = out * pow(f.factor, static_cast<unsigned>(f.multiplicity));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31, ascending coefficients.

namespace {

using u64 = std::uint64_t;
using Zp = std::vector<u64>;

class Field {
 public:
  explicit Field(u64 p) : p_(p) {}
  u64 p() const { return p_; }

  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 reduce(const BigInt& v) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
  }

  static void trim(Zp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const Zp& a) { return static_cast<int>(a.size()) - 1; }

  Zp from(const IntPoly& f) const {
    Zp out;
    for (const BigInt& c : f.coeffs()) out.push_back(reduce(c));
    trim(out);
    return out;
  }

  Zp sub(const Zp& a, const Zp& b) const {
    Zp out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
    trim(out);
    return out;
  }
  Zp add(const Zp& a, const Zp& b) const {
    Zp out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
    trim(out);
    return out;
  }
  Zp mul(const Zp& a, const Zp& b) const {
    if (a.empty() || b.empty()) return {};
    Zp out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    }
    trim(out);
    return out;
  }
  Zp scale(const Zp& a, u64 c) const {
    Zp out;
    for (u64 x : a) out.push_back(mul(x, c));
    trim(out);
    return out;
  }
  Zp monic(const Zp& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  // a = q b + r
  void divmod(const Zp& a, const Zp& b, Zp* q, Zp* r) const {
    Zp rem = a;
    const int db = deg(b);
    const u64 lead_inv = inv(b.back());
    Zp quot(rem.size() > b.size() ? rem.size() - b.size() + 1 : 1, 0);
    for (int k = deg(rem); k >= db; --k) {
      const u64 c = mul(rem[static_cast<std::size_t>(k)], lead_inv);
      if (!c) continue;
      quot[static_cast<std::size_t>(k - db)] = c;
      for (int j = 0; j <= db; ++j) {
        auto& slot = rem[static_cast<std::size_t>(k - db + j)];
        slot = sub(slot, mul(c, b[static_cast<std::size_t>(j)]));
      }
    }
    trim(rem);
    trim(quot);
    if (q) *q = std::move(quot);
    if (r) *r = std::move(rem);
  }
  Zp rem(const Zp& a, const Zp& b) const {
    Zp r;
    divmod(a, b, nullptr, &r);
    return r;
  }
  Zp quo(const Zp& a, const Zp& b) const {
    Zp q;
    divmod(a, b, &q, nullptr);
    return q;
  }

  Zp gcd(Zp a, Zp b) const {
    while (!b.empty()) {
      Zp r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s a + t b = 1 for coprime a, b.
  void bezout(const Zp& a, const Zp& b, Zp* s, Zp* t) const {
    Zp r0 = a, r1 = b;
    Zp s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      Zp q, r;
      divmod(r0, r1, &q, &r);
      Zp s2 = sub(s0, mul(q, s1));
      Zp t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 g = inv(r0.back());  // r0 is a nonzero constant
    *s = scale(s0, g);
    *t = scale(t0, g);
  }

  Zp powmod(Zp base, const BigInt& e, const Zp& m) const {
    Zp result{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }

  Zp derivative(const Zp& a) const {
    Zp out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(a[i], i % p_));
    trim(out);
    return out;
  }

 private:
  u64 p_;
};

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over F_p, p odd.
std::vector<Zp> factor_mod_p(const Field& F, Zp f, std::mt19937_64& rng) {
  std::vector<std::pair<Zp, int>> by_degree;
  const Zp x{0, 1};
  Zp h = x;
  for (int d = 1; 2 * d <= Field::deg(f); ++d) {
    h = F.powmod(h, BigInt(static_cast<unsigned long>(F.p())), f);
    Zp g = F.gcd(f, F.sub(h, x));
    if (Field::deg(g) > 0) {
      by_degree.emplace_back(g, d);
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
  }
  if (Field::deg(f) > 0) by_degree.emplace_back(f, Field::deg(f));

  std::vector<Zp> out;
  for (auto& [g, d] : by_degree) {
    std::vector<Zp> pending{g};
    BigInt pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), F.p(), static_cast<unsigned long>(d));
    const BigInt exponent = (pd - 1) / 2;
    while (!pending.empty()) {
      Zp cur = std::move(pending.back());
      pending.pop_back();
      if (Field::deg(cur) == d) {
        out.push_back(std::move(cur));
        continue;
      }
      while (true) {
        Zp a;
        for (int i = 0; i < Field::deg(cur); ++i) a.push_back(rng() % F.p());
        Field::trim(a);
        if (Field::deg(a) < 1) continue;
        Zp b = F.sub(F.powmod(a, exponent, cur), Zp{1});
        Zp u = F.gcd(cur, b);
        if (Field::deg(u) > 0 && Field::deg(u) < Field::deg(cur)) {
          pending.push_back(F.quo(cur, u));
          pending.push_back(std::move(u));
          break;
        }
      }
    }
  }
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z / p^e.

BigInt mod_positive(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntPoly from_zp(const Zp& a) {
  std::vector<BigInt> v;
  for (u64 c : a) v.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(v));
}

// Reduces every coefficient below the leading one into [0, m).
IntPoly reduce_keep_lead(const IntPoly& a, const BigInt& m) {
  std::vector<BigInt> v = a.coeffs();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = mod_positive(v[i], m);
  return IntPoly(std::move(v));
}

// Given f = g0 h0 mod p with h0 monic and lc(g0) = lc(f) mod p, returns g, h
// with f = g h mod p^e, h monic, lc(g) = lc(f).
std::pair<IntPoly, IntPoly> lift_two(const IntPoly& f, const Zp& g0, const Zp& h0,
                                     const Field& F, int e) {
  Zp s, t;
  F.bezout(g0, h0, &s, &t);
  std::vector<BigInt> gv = from_zp(g0).coeffs();
  gv.back() = f.leading();
  IntPoly g(std::move(gv));
  IntPoly h = from_zp(h0);
  const BigInt p(static_cast<unsigned long>(F.p()));
  BigInt q = p;
  for (int step = 1; step < e; ++step) {
    const IntPoly diff = f - g * h;
    std::vector<BigInt> cv;
    for (const BigInt& x : diff.coeffs()) {
      BigInt y;
      mpz_divexact(y.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
      cv.push_back(std::move(y));
    }
    const Zp c = F.from(IntPoly(std::move(cv)));
    Zp quo, dh;
    F.divmod(F.mul(c, s), h0, &quo, &dh);
    const Zp dg = F.add(F.mul(c, t), F.mul(quo, g0));
    g = g + q * from_zp(dg);
    h = h + q * from_zp(dh);
    q *= p;
    g = reduce_keep_lead(g, q);
    h = reduce_keep_lead(h, q);
  }
  return {g, h};
}

// f = lc(f) * prod factors mod p; returns monic lifts mod p^e.
std::vector<IntPoly> lift_all(const IntPoly& f, const std::vector<Zp>& factors, const Field& F,
                              int e) {
  BigInt m;
  mpz_ui_pow_ui(m.get_mpz_t(), F.p(), static_cast<unsigned long>(e));
  if (factors.size() == 1) {
    BigInt inv;
    BigInt lead = mod_positive(f.leading(), m);
    mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), m.get_mpz_t());
    std::vector<BigInt> v;
    for (const BigInt& c : f.coeffs()) v.push_back(mod_positive(c * inv, m));
    return {IntPoly(std::move(v))};
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<Zp> left(factors.begin(), factors.begin() + static_cast<long>(half));
  const std::vector<Zp> right(factors.begin() + static_cast<long>(half), factors.end());
  Zp g0{F.reduce(f.leading())};
  for (const Zp& u : left) g0 = F.mul(g0, u);
  Zp h0{1};
  for (const Zp& u : right) h0 = F.mul(h0, u);
  auto [g, h] = lift_two(f, g0, h0, F, e);
  std::vector<IntPoly> out = lift_all(g, left, F, e);
  for (IntPoly& u : lift_all(h, right, F, e)) out.push_back(std::move(u));
  return out;
}

IntPoly symmetric_mod(const IntPoly& a, const BigInt& m) {
  const BigInt half = m / 2;
  std::vector<BigInt> v;
  for (const BigInt& c : a.coeffs()) {
    BigInt r = mod_positive(c, m);
    if (r > half) r -= m;
    v.push_back(std::move(r));
  }
  return IntPoly(std::move(v));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const BigInt& m) {
  std::vector<BigInt> v = (a * b).coeffs();
  for (BigInt& c : v) c = mod_positive(c, m);
  return IntPoly(std::move(v));
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& input) {
  const IntPoly f = input.primitive_part();
  if (f.degree() <= 1) return {f};

  // Choose among a few good primes the one with the fewest modular factors.
  std::mt19937_64 rng(0x5eed);
  std::vector<Zp> best_factors;
  u64 best_prime = 0;
  int good = 0;
  const IntPoly df = f.derivative();
  for (u64 p = 3; good < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    const Field F(p);
    if (F.reduce(f.leading()) == 0) continue;
    const Zp fp = F.from(f);
    if (Field::deg(F.gcd(fp, F.from(df))) != 0) continue;
    ++good;
    std::vector<Zp> facs = factor_mod_p(F, F.monic(fp), rng);
    if (best_prime == 0 || facs.size() < best_factors.size()) {
      best_factors = std::move(facs);
      best_prime = p;
    }
    if (best_factors.size() == 1) return {f};
  }
  if (best_prime == 0) throw PolynomialError("no suitable prime for " + f.to_string());
  const Field F(best_prime);

  // Coefficient bound for any factor, times the leading coefficient.
  BigInt norm2 = 0;
  for (const BigInt& c : f.coeffs()) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  BigInt bound = (root + 1) * abs(f.leading());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(f.degree()));
  const BigInt p(static_cast<unsigned long>(best_prime));
  BigInt m = p;
  int e = 1;
  while (m <= 2 * bound) {
    m *= p;
    ++e;
  }

  std::vector<IntPoly> lifted = lift_all(f, best_factors, F, e);

  // Recombination by subsets of increasing size.
  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::size_t size = 1;
  while (2 * size <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      IntPoly candidate = IntPoly::constant(rest.leading());
      for (std::size_t i : idx) candidate = mul_mod(candidate, lifted[i], m);
      candidate = symmetric_mod(candidate, m).primitive_part();
      if (candidate.degree() > 0 && divides(candidate, rest)) {
        result.push_back(candidate);
        rest = exact_divide(rest, candidate);
        for (std::size_t k = idx.size(); k-- > 0;) {
          lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        }
        found = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == lifted.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) result.push_back(rest.primitive_part());
  return result;
}

FactorReport factor_over_Q(const IntPoly& p) {
  if (p.is_zero()) throw PolynomialError("factorization of the zero polynomial");
  FactorReport report;
  report.unit = p.content();
  if (p.leading() < 0) report.unit = -report.unit;
  for (const SquarefreeFactor& sf : squarefree_decomposition(p)) {
    for (IntPoly& g : factor_squarefree(sf.factor)) {
      IrreducibleFactor f;
      f.factor = std::move(g);
      f.multiplicity = sf.multiplicity;
      const SturmChain chain(f.factor);
      f.positive_roots = chain.count(RootInterval::positive());
      f.negative_roots = chain.count(RootInterval::negative());
      f.real_roots = chain.count(RootInterval::whole());
      report.factors.push_back(std::move(f));
    }
  }
  std::sort(report.factors.begin(), report.factors.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
              return canonical_less(a.factor, b.factor);
            });
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> primes;
  for (BigInt d = 2; d * d <= n; ++d) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) break;
    int k = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++k;
    }
    if (k) primes.emplace_back(d, k);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [q, k] : primes) {
    const std::size_t base = divs.size();
    BigInt pw = 1;
    for (int i = 1; i <= k; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const IntPoly& p) {
  if (p.is_zero()) throw PolynomialError("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  IntPoly f = p.primitive_part();
  while (f.degree() > 0 && f.constant_term() == 0) {
    roots.emplace_back(0);
    f = exact_divide(f, IntPoly{0, 1});
  }
  if (f.degree() <= 0) return roots;
  std::vector<Rational> candidates;
  for (const BigInt& a : positive_divisors(f.constant_term())) {
    for (const BigInt& b : positive_divisors(f.leading())) {
      Rational r(a, b);
      r.canonicalize();
      candidates.push_back(r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rational& c : candidates) {
    for (int s : {1, -1}) {
      const Rational r = s > 0 ? c : Rational(-c);
      const IntPoly linear(std::vector<BigInt>{-r.get_num(), r.get_den()});
      while (f.degree() > 0 && f.sign_at(r.get_num(), r.get_den()) == 0) {
        roots.push_back(r);
        f = exact_divide(f, linear);
      }
    }
  }
  return roots;
}

}  // namespace biorder
