#include "biorder/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace biorder {

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const BigInt& r) {
  return IntPoly(std::vector<BigInt>{-r, BigInt(1)});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& IntPoly::leading() const {
  if (is_zero()) throw PolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

const BigInt& IntPoly::constant_term() const {
  static const BigInt zero(0);
  return is_zero() ? zero : coeffs_.front();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const BigInt& num, const BigInt& den) const {
  // den^deg * p(num/den) = sum c_i num^i den^(deg-i)
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

int IntPoly::sign_at_infinity(int dir) const {
  if (is_zero()) return 0;
  const int s = sgn(leading());
  return (dir < 0 && degree() % 2 == 1) ? -s : s;
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const BigInt& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (const BigInt& x : coeffs_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    v.push_back(std::move(q));
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> v;
  for (const BigInt& c : coeffs_) v.push_back(-c);
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
  std::vector<BigInt> v;
  for (const BigInt& x : a.coeffs_) v.push_back(c * x);
  return IntPoly(std::move(v));
}

IntPoly pow(const IntPoly& p, unsigned n) {
  IntPoly out = IntPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) out = out * p;
  return out;
}

// ---------------------------------------------------------------------------

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (Rational& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& p) {
  for (const BigInt& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool RatPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

IntPoly RatPoly::to_int() const {
  if (!is_integral()) throw PolynomialError("polynomial has non-integral coefficients");
  std::vector<BigInt> v;
  for (const Rational& c : coeffs_) v.push_back(c.get_num());
  return IntPoly(std::move(v));
}

RatDivision poly_divmod(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw PolynomialError("division by the zero polynomial");
  std::vector<Rational> rem;
  for (const BigInt& c : p.coeffs()) rem.emplace_back(c);
  const int dq = q.degree();
  const int dp = p.degree();
  if (dp < dq) return {RatPoly(), RatPoly(std::move(rem))};
  std::vector<Rational> quot(static_cast<std::size_t>(dp - dq) + 1);
  const Rational lead(q.leading());
  for (int k = dp; k >= dq; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dq)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dq; ++j) {
      rem[static_cast<std::size_t>(k - dq + j)] -= c * Rational(q.coeffs()[static_cast<std::size_t>(j)]);
    }
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

namespace {

// Integer long division; returns false if a non-integral quotient coefficient
// or a nonzero remainder appears.
bool try_exact_divide(const IntPoly& p, const IntPoly& q, IntPoly* out) {
  if (q.is_zero()) throw PolynomialError("division by the zero polynomial");
  if (p.is_zero()) {
    if (out) *out = IntPoly();
    return true;
  }
  const int dq = q.degree();
  const int dp = p.degree();
  if (dp < dq) return false;
  std::vector<BigInt> rem = p.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(dp - dq) + 1);
  const BigInt& lead = q.leading();
  for (int k = dp; k >= dq; --k) {
    const BigInt& r = rem[static_cast<std::size_t>(k)];
    if (r == 0) continue;
    if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t())) return false;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= dq; ++j) {
      rem[static_cast<std::size_t>(k - dq + j)] -= c * q.coeffs()[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(k - dq)] = std::move(c);
  }
  for (int k = 0; k < dq; ++k) {
    if (rem[static_cast<std::size_t>(k)] != 0) return false;
  }
  if (out) *out = IntPoly(std::move(quot));
  return true;
}

}  // namespace

IntPoly exact_divide(const IntPoly& p, const IntPoly& q) {
  IntPoly out;
  if (!try_exact_divide(p, q, &out)) {
    throw PolynomialError(q.to_string() + " does not divide " + p.to_string() + " over Z");
  }
  return out;
}

bool divides(const IntPoly& q, const IntPoly& p) { return try_exact_divide(p, q, nullptr); }

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw PolynomialError("pseudo-remainder by the zero polynomial");
  const int dq = q.degree();
  if (p.degree() < dq) return p;
  std::vector<BigInt> rem = p.coeffs();
  const BigInt& lead = q.leading();
  for (int k = p.degree(); k >= dq; --k) {
    const BigInt c = rem[static_cast<std::size_t>(k)];
    for (BigInt& r : rem) r *= lead;
    for (int j = 0; j <= dq; ++j) {
      rem[static_cast<std::size_t>(k - dq + j)] -= c * q.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dq));
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  return x.primitive_part();
}

}  // namespace biorder
