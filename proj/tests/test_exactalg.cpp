#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biorder/factor.hpp"
#include "biorder/matrix.hpp"
#include "biorder/sturm.hpp"
#include "support.hpp"

#include <set>

using namespace biorder;
using testing::Coeffs;
using testing::coeffs_of;
using testing::uniform;

namespace {

IntPoly from(const Coeffs& c) { return IntPoly(c); }

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
  IntMatrix a(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a.at(i, j) = uniform(rng, lo, hi);
  return a;
}

// Any factor with a linear or quadratic divisor whose coefficients are
// bounded by `bound` is found by exhaustive search.
bool has_small_divisor(const IntPoly& p, long bound) {
  const int n = p.degree();
  for (long a = 1; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b) {
      if (n > 1 && b != 0 && divides(IntPoly{b, a}, p)) return true;
      if (n > 2)
        for (long c = -bound; c <= bound; ++c)
          if (c != 0 && divides(IntPoly{c, b, a}, p)) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPoly p{1, 2, 1};  // (1 + x)^2
  CHECK(p == IntPoly{1, 1} * IntPoly{1, 1});
  CHECK(pow(IntPoly{1, 1}, 3) == IntPoly{1, 3, 3, 1});
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 2);
  CHECK(IntPoly().degree() == -1);
  CHECK(p.eval(2) == 9);
  CHECK(p.derivative() == IntPoly{2, 2});
  CHECK(IntPoly{-4, 6, -2}.content() == 2);
  CHECK(IntPoly{-4, 6, -2}.primitive_part() == IntPoly{2, -3, 1});
  CHECK(p.to_string() == "x^2 + 2x + 1");
  CHECK(IntPoly{1, 0, -3, 1}.to_string('t') == "t^3 - 3t^2 + 1");
  CHECK(p.sign_at(-3, 2) == 1);
  CHECK(p.sign_at(-1, 1) == 0);
  CHECK(IntPoly{0, 0, 0, -1}.sign_at_infinity(-1) == 1);
}

TEST_CASE("division and gcd") {
  const IntPoly a = IntPoly{-1, 1} * IntPoly{2, 0, 1};
  const IntPoly b = IntPoly{-1, 1} * IntPoly{3, 1};
  CHECK(gcd(a, b) == IntPoly{-1, 1});
  CHECK(gcd(IntPoly{2, 2}, IntPoly{-3, 0, 3}) == IntPoly{1, 1});
  CHECK(gcd(IntPoly(), IntPoly()).is_zero());
  CHECK(exact_divide(a, IntPoly{-1, 1}) == IntPoly{2, 0, 1});
  CHECK_THROWS_AS(exact_divide(a, IntPoly{1, 1}), PolynomialError);
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 1}, IntPoly{0, 2}), PolynomialError);
  const RatDivision d = poly_divmod(IntPoly{1, 0, 1}, IntPoly{0, 2});
  CHECK(d.quotient == RatPoly(std::vector<Rational>{Rational(0), Rational(1, 2)}));
  CHECK(d.remainder == RatPoly(IntPoly{1}));

  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Coeffs p, q;
    for (int k = 0; k <= uniform(rng, 0, 5); ++k) p.emplace_back(uniform(rng, -9, 9));
    for (int k = 0; k <= uniform(rng, 0, 3); ++k) q.emplace_back(uniform(rng, -9, 9));
    const IntPoly P = from(p), Q = from(q);
    if (Q.is_zero()) continue;
    const RatDivision r = poly_divmod(P, Q);
    CHECK(r.remainder.degree() < Q.degree());
    const IntPoly g = gcd(P, Q);
    CHECK(divides(g, P));
    CHECK(divides(g, Q));
    CHECK(exact_divide(P * Q, Q) == P);
  }
}

TEST_CASE("determinant and characteristic polynomial against cofactor expansion") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const auto d = static_cast<std::size_t>(uniform(rng, 1, 5));
    const IntMatrix a = random_matrix(rng, d, -5, 5);
    const Coeffs oracle = testing::cofactor_charpoly(a);
    CHECK(char_poly(a) == from(oracle));
    const BigInt det_oracle = d % 2 ? BigInt(-oracle[0]) : oracle[0];
    CHECK(a.determinant() == det_oracle);
    CHECK(char_poly(a).coeff(static_cast<int>(d) - 1) == -a.trace());
  }
  CHECK(char_poly(IntMatrix{{2, 1}, {1, 1}}) == IntPoly{1, -3, 1});
  CHECK(char_poly(IntMatrix::identity(3)) == pow(IntPoly{-1, 1}, 3));
  CHECK(IntMatrix{{1, 2}, {3, 4}}.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(IntMatrix{{1, 2}, {3, 4}} * IntMatrix{{0, 1}, {1, 0}} == IntMatrix{{2, 1}, {4, 3}});
}

TEST_CASE("squarefree decomposition") {
  const IntPoly p = pow(IntPoly{-1, 1}, 2) * pow(IntPoly{1, 0, 1}, 3) * IntPoly{2, 1};
  const auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 3);
  CHECK(sf[0].factor == IntPoly{2, 1});
  CHECK(sf[0].multiplicity == 1);
  CHECK(sf[1].factor == IntPoly{-1, 1});
  CHECK(sf[2].factor == IntPoly{1, 0, 1});
  CHECK(sf[2].multiplicity == 3);
  CHECK(squarefree_part(IntPoly{3} * p) == IntPoly{2, 1} * IntPoly{-1, 1} * IntPoly{1, 0, 1});
}

TEST_CASE("factorization of known polynomials") {
  // x^4 + 1 and x^4 - 10x^2 + 1 split modulo every prime.
  for (const IntPoly& p : {IntPoly{1, 0, 0, 0, 1}, IntPoly{1, 0, -10, 0, 1}}) {
    const FactorReport r = factor_over_Q(p);
    REQUIRE(r.factors.size() == 1);
    CHECK(r.factors[0].factor == p);
  }
  const FactorReport r = factor_over_Q(IntPoly{-6, 0, -2, 0, 3} * IntPoly{2});
  CHECK(r.unit == 2);
  CHECK(r.product() == IntPoly{-12, 0, -4, 0, 6});

  const FactorReport s = factor_over_Q(IntPoly{1, 0, 1} * IntPoly{-2, 0, 1} * IntPoly{-1, 1});
  REQUIRE(s.factors.size() == 3);
  CHECK(s.factors[0].factor == IntPoly{-1, 1});
  CHECK(s.factors[1].factor == IntPoly{-2, 0, 1});
  CHECK(s.factors[2].factor == IntPoly{1, 0, 1});
  CHECK(s.factors[1].positive_roots == 1);
  CHECK(s.factors[1].negative_roots == 1);
  CHECK(s.factors[2].real_roots == 0);

  // Negative leading coefficient goes into the unit.
  const FactorReport n = factor_over_Q(IntPoly{1, 0, -1});
  CHECK(n.unit == -1);
  CHECK(n.product() == IntPoly{1, 0, -1});
}

TEST_CASE("factorization reconstructs planted products") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    IntPoly p{static_cast<long>(uniform(rng, 1, 3))};
    const int pieces = static_cast<int>(uniform(rng, 1, 4));
    for (int k = 0; k < pieces; ++k) {
      Coeffs c;
      const long deg = uniform(rng, 1, 3);
      for (long j = 0; j < deg; ++j) c.emplace_back(uniform(rng, -6, 6));
      c.emplace_back(uniform(rng, 1, 2));
      p = p * from(c);
    }
    if (p.constant_term() == 0) continue;
    const FactorReport r = factor_over_Q(p);
    CHECK(r.product() == p);
    int degree_sum = 0;
    for (const IrreducibleFactor& f : r.factors) {
      CAPTURE(f.factor.to_string());
      CHECK(f.factor.content() == 1);
      CHECK(f.factor.leading() > 0);
      degree_sum += f.multiplicity * f.factor.degree();
      if (f.factor.degree() <= 5) CHECK_FALSE(has_small_divisor(f.factor, 12));
    }
    CHECK(degree_sum == p.degree());
  }
}

TEST_CASE("rational roots") {
  const IntPoly p = IntPoly{-1, 2} * IntPoly{3, 1} * IntPoly{3, 1} * IntPoly{0, 1} * IntPoly{1, 0, 1};
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == 0);
  CHECK(roots[1] == Rational(1, 2));
  CHECK(roots[2] == -3);
  CHECK(roots[3] == -3);
  CHECK(rational_roots(IntPoly{1, -3, 3, -3, 1}).empty());
}

TEST_CASE("Sturm counts against planted integer roots") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    std::set<long> roots;
    const long real = uniform(rng, 1, 4);
    while (static_cast<long>(roots.size()) < real) roots.insert(uniform(rng, -8, 8));
    IntPoly p{1};
    for (long r : roots) p = p * IntPoly::linear_root(r);
    if (p.degree() < 4 && uniform(rng, 0, 1)) p = p * IntPoly{uniform(rng, 1, 5), 0, 1};
    if (p.degree() < 3) p = p * IntPoly{uniform(rng, 1, 5), 0, 1};
    CAPTURE(p.to_string());

    const long a = uniform(rng, -9, 9), b = a + uniform(rng, 0, 9);
    int pos = 0, neg = 0, in_ab = 0;
    for (long r : roots) {
      pos += r > 0;
      neg += r < 0;
      in_ab += r > a && r <= b;
    }
    CHECK(sturm_count(p, RootInterval::whole()) == static_cast<int>(roots.size()));
    CHECK(sturm_count(p, RootInterval::positive()) == pos);
    CHECK(sturm_count(p, RootInterval::negative()) == neg);
    CHECK(sturm_count(p, RootInterval::half_open(a, b)) == in_ab);
    CHECK(has_positive_real_root(p * p) == (pos > 0));
  }
  CHECK_THROWS_AS(SturmChain(IntPoly{1, 2, 1}), NonSquarefreeError);
  CHECK(all_roots_positive_real(IntPoly{1, -3, 1}));
  CHECK(all_roots_positive_real(pow(IntPoly{-2, 1}, 3)));
  CHECK_FALSE(all_roots_positive_real(IntPoly{1, -1, 1}));
  CHECK_FALSE(all_roots_positive_real(IntPoly{0, -1, 1}));
}

TEST_CASE("the level-one sextic of 6_2 by synthetic division") {
  const Coeffs sextic = coeffs_of({1, -3, 8, -12, 8, -3, 1});
  const auto [q1, r1] = testing::synthetic_division(sextic, 1);
  CHECK(r1 == 0);
  const auto [q2, r2] = testing::synthetic_division(q1, 1);
  CHECK(r2 == 0);
  CHECK(q2 == coeffs_of({1, -1, 5, -1, 1}));
  CHECK(sturm_count(from(q2), RootInterval::whole()) == 0);

  const FactorReport r = factor_over_Q(from(sextic));
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].factor == IntPoly{-1, 1});
  CHECK(r.factors[0].multiplicity == 2);
  CHECK(r.factors[1].factor == from(q2));
  CHECK(r.factors[1].real_roots == 0);
}
