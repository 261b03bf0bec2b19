#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qschur/field.hpp"
#include "qschur/linalg.hpp"
#include "qschur/quantum.hpp"

using namespace qschur;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int spread = 3) {
  std::uniform_int_distribution<int> exps(-spread, spread), coefs(-4, 4), count(0, 4);
  std::vector<LaurentPoly::Term> t;
  const int n = count(rng);
  for (int k = 0; k < n; ++k) t.emplace_back(exps(rng), Rational(coefs(rng), 1 + (k % 2)));
  return LaurentPoly::from_terms(std::move(t));
}

// [n]_d by dividing v^{dn} - v^{-dn} by v^d - v^{-d} inside Q(v).
RatFunc quotient_oracle(int n, int d) {
  LaurentPoly num = LaurentPoly::monomial(d * n) - LaurentPoly::monomial(-d * n);
  LaurentPoly den = LaurentPoly::monomial(d) - LaurentPoly::monomial(-d);
  return RatFunc(num, den);
}

}  // namespace

TEST_CASE("laurent arithmetic and canonical text") {
  LaurentPoly v = LaurentPoly::v();
  LaurentPoly p = v * v + 1 + LaurentPoly::monomial(-2);
  CHECK(p.to_string() == "v^2 + 1 + v^-2");
  CHECK(LaurentPoly::parse(p.to_string()) == p);
  CHECK(LaurentPoly::parse("-1/2*v") == LaurentPoly::monomial(1, Rational(-1, 2)));
  CHECK((p - p).is_zero());
  CHECK(p.bar() == p);
  CHECK(p.span() == 4);
  CHECK(LaurentPoly().span() == -1);
  CHECK(p.evaluate(2) == Rational(4) + 1 + Rational(1, 4));
}

TEST_CASE("laurent division and gcd") {
  LaurentPoly two = quantum_integer(2);
  LaurentPoly a = two * two * LaurentPoly::monomial(3);
  CHECK(exact_div(a, two) == two * LaurentPoly::monomial(3));
  CHECK_THROWS_AS(exact_div(two, quantum_integer(3)), std::domain_error);
  CHECK(gcd(LaurentPoly::v(), LaurentPoly::monomial(2)).is_one());
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    LaurentPoly x = random_poly(rng), y = random_poly(rng);
    if (y.is_zero()) continue;
    auto [q, r] = divmod(x, y);
    CHECK(q * y + r == x);
    CHECK(r.span() < y.span());
    LaurentPoly g = gcd(x * y, y * y);
    CHECK(divides(g, x * y));
    CHECK(divides(y, g));
  }
}

TEST_CASE("ratfunc canonical form") {
  LaurentPoly v = LaurentPoly::v();
  RatFunc f(v * v - 1, (v - 1) * LaurentPoly(3));
  CHECK(f.is_laurent());
  CHECK(f.as_laurent() == (v + 1) * Rational(1, 3));
  RatFunc h(LaurentPoly(2), v * v - 1);
  CHECK_FALSE(h.is_laurent());
  CHECK(h.den() == v * v - 1);
  CHECK(f.den().low() == 0);
  CHECK(f.den().leading() == 1);
  RatFunc g(v + 1, LaurentPoly(3));
  CHECK(f == g);
  CHECK(RatFunc::parse(h.to_string()) == h);
  CHECK(h * h.inverse() == RatFunc(1));
  CHECK(RatFunc::parse(f.to_string()) == f);
  CHECK((f / f).is_one());
  CHECK((f - g).is_zero());
  CHECK(RatFunc(LaurentPoly::monomial(2) * 5, LaurentPoly::monomial(1)) == RatFunc(LaurentPoly::monomial(1) * 5));
}

TEST_CASE("quantum integer examples") {
  CHECK(quantum_integer(0, 1).is_zero());
  CHECK(quantum_integer(3, 1) == LaurentPoly({{2, 1}, {0, 1}, {-2, 1}}));
  CHECK(quantum_integer(-2, 1) == -(LaurentPoly::v() + LaurentPoly::monomial(-1)));
  for (int d = 1; d <= 3; ++d)
    for (int n = -20; n <= 20; ++n) {
      CHECK(quantum_integer(-n, d) == -quantum_integer(n, d));
      CHECK(RatFunc(quantum_integer(n, d)) == quotient_oracle(n, d));
    }
}

TEST_CASE("quantum factorial examples") {
  CHECK(quantum_factorial(0, 1).is_one());
  CHECK(quantum_factorial(2, 1) == quantum_integer(2, 1));
  LaurentPoly lhs = quantum_factorial(3, 2);
  LaurentPoly rhs = LaurentPoly({{2, 1}, {-2, 1}}) * LaurentPoly({{4, 1}, {0, 1}, {-4, 1}});
  CHECK(lhs == rhs);
  CHECK_THROWS_AS(quantum_factorial(-1, 1), std::invalid_argument);
}

TEST_CASE("quantum binomial examples and identities") {
  CHECK(quantum_binomial(5, 0, 2).is_one());
  CHECK(quantum_binomial(-3, 0, 1).is_one());
  CHECK(quantum_binomial(4, 2, 1) == LaurentPoly({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
  CHECK(quantum_binomial(-1, 3, 1) == LaurentPoly(-1));
  for (int d = 1; d <= 3; ++d)
    for (int a = 0; a <= 10; ++a)
      for (int t = 0; t <= a; ++t) {
        LaurentPoly b = quantum_binomial(a, t, d);
        CHECK(b * quantum_factorial(t, d) * quantum_factorial(a - t, d) == quantum_factorial(a, d));
        CHECK(b.bar() == b);
      }
  for (int d = 1; d <= 3; ++d)
    for (int a = -4; a <= 8; ++a)
      for (int t = 1; t <= 6; ++t) {
        LaurentPoly rhs = LaurentPoly::monomial(d * t) * quantum_binomial(a - 1, t, d) +
                          LaurentPoly::monomial(-d * (a - t)) * quantum_binomial(a - 1, t - 1, d);
        CHECK(quantum_binomial(a, t, d) == rhs);
      }
}

TEST_CASE("field contexts parse") {
  CHECK(FieldContext::parse("generic") == FieldContext::generic());
  CHECK(FieldContext::parse("q=3/2") == FieldContext::rational(Rational(3, 2)));
  CHECK(FieldContext::parse("cyclotomic=4") == FieldContext::cyclotomic(4));
  CHECK_THROWS_AS(FieldContext::parse("char=5"), UnsupportedCharacteristic);
  CHECK_THROWS_AS(FieldContext::parse("q=0"), ConfigError);
  CHECK_THROWS_AS(FieldContext::parse("cyclotomic=1"), ConfigError);
  CHECK_THROWS_AS(FieldContext::parse("complex"), ConfigError);
  CHECK(FieldContext::parse("cyclotomic=12").to_string() == "cyclotomic=12");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_laurent(1) == LaurentPoly({{1, 1}, {0, -1}}));
  CHECK(cyclotomic_laurent(4) == LaurentPoly({{2, 1}, {0, 1}}));
  CHECK(cyclotomic_laurent(6) == LaurentPoly({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(cyclotomic_laurent(12) == LaurentPoly({{4, 1}, {2, -1}, {0, 1}}));
  // v^n - 1 is the product of Phi_d over divisors d of n.
  for (int n = 1; n <= 30; ++n) {
    LaurentPoly prod(1);
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic_laurent(d);
    CHECK(prod == LaurentPoly::monomial(n) - 1);
  }
}

TEST_CASE("specialization examples") {
  for (int n = -5; n <= 8; ++n)
    CHECK(specialize(quantum_integer(n), FieldContext::rational(1)) == FieldValue(Rational(n)));
  CHECK(specialize(quantum_integer(2), FieldContext::cyclotomic(4)).is_zero());
  CHECK_FALSE(specialize(quantum_integer(2), FieldContext::cyclotomic(3)).is_zero());
  CHECK(specialize(quantum_integer(2), FieldContext::cyclotomic(3)) == FieldValue(CycloValue(-1)));
  LaurentPoly x = quantum_binomial(6, 3);
  CHECK(specialize(x, FieldContext::generic()) == FieldValue(RatFunc(x)));
  RatFunc f(LaurentPoly(1), quantum_integer(2));
  CHECK_THROWS_AS(specialize(f, FieldContext::cyclotomic(4)), DenominatorVanishes);
  CHECK(specialize(f, FieldContext::rational(1)) == FieldValue(Rational(1, 2)));
}

TEST_CASE("specialize is a ring homomorphism") {
  std::mt19937 rng(11);
  const FieldContext contexts[] = {FieldContext::generic(), FieldContext::rational(Rational(2, 3)),
                                   FieldContext::rational(-5), FieldContext::cyclotomic(3),
                                   FieldContext::cyclotomic(4), FieldContext::cyclotomic(12)};
  for (const auto& ctx : contexts)
    for (int k = 0; k < 100; ++k) {
      LaurentPoly a = random_poly(rng, 6), b = random_poly(rng, 6);
      CHECK(specialize(a + b, ctx) == specialize(a, ctx) + specialize(b, ctx));
      CHECK(specialize(a * b, ctx) == specialize(a, ctx) * specialize(b, ctx));
    }
}

TEST_CASE("cyclotomic residues form a field") {
  std::mt19937 rng(5);
  for (int ell : {3, 4, 5, 8, 12}) {
    for (int k = 0; k < 30; ++k) {
      CycloValue a(ell, random_poly(rng, 8));
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == CycloValue(1));
    }
    // v is a primitive ell-th root of unity.
    CycloValue v(ell, LaurentPoly::v());
    CycloValue p(1);
    for (int e = 1; e <= ell; ++e) {
      p *= v;
      CHECK((p == CycloValue(1)) == (e == ell));
    }
  }
  CHECK_THROWS_AS(CycloValue(3, LaurentPoly::v()) + CycloValue(4, LaurentPoly::v()), ContextMismatch);
  CHECK_THROWS_AS(FieldValue(RatFunc(LaurentPoly::v())) + FieldValue(CycloValue(4, LaurentPoly::v())),
                  ContextMismatch);
}
