#include <random>

#include "doctest.h"
#include "linrep/errors.hpp"
#include "linrep/ring.hpp"

using namespace linrep;

namespace {

  LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<int> sexp(-3, 3);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> count(0, 4);
    std::vector<LaurentPoly::Term>     terms;
    auto const                         n = count(rng);
    for (int i = 0; i < n; ++i) {
      terms.emplace_back(Monomial{exp(rng), exp(rng), sexp(rng)},
                         BigInt(coef(rng)));
    }
    return LaurentPoly::from_terms(terms);
  }

  // Independent evaluation of a Laurent polynomial as a rational.
  Rational eval_rational(LaurentPoly const& p, long l, long m, long s) {
    Rational acc = 0;
    for (auto const& [mono, c] : p.terms()) {
      Rational term = c;
      for (int i = 0; i < mono.a; ++i) {
        term *= l;
      }
      for (int i = 0; i < mono.b; ++i) {
        term *= m;
      }
      for (int i = 0; i < (mono.c < 0 ? -mono.c : mono.c); ++i) {
        term = mono.c < 0 ? Rational(term / s) : Rational(term * s);
      }
      acc += term;
    }
    acc.canonicalize();
    return acc;
  }

}  // namespace

TEST_CASE("Laurent polynomial basics") {
  auto l = LaurentPoly::lambda();
  auto m = LaurentPoly::mu();
  auto s = LaurentPoly::s();
  CHECK((l * m - m * l).is_zero());
  CHECK((s * LaurentPoly::s(-1)) == LaurentPoly(1));
  CHECK((LaurentPoly(1) - l * m).to_string() == "1 - lambda*mu");
  CHECK((2 * l * l * m).to_string() == "2*lambda^2*mu");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(s.is_unit());
  CHECK((-s).unit_inverse() == -LaurentPoly::s(-1));
  CHECK_FALSE((LaurentPoly(1) + s).is_unit());
  CHECK_THROWS_AS(l.unit_inverse(), InvalidArgument);
  CHECK_THROWS_AS(LaurentPoly::monomial(Monomial{-1, 0, 0}), InvalidArgument);
  CHECK(pow(LaurentPoly(1) + l, 2) == LaurentPoly(1) + 2 * l + l * l);
  CHECK(LaurentPoly(7).constant_value() == 7);
  CHECK_THROWS_AS(l.constant_value(), InvalidArgument);
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  std::mt19937 rng(42);
  for (int k = 0; k < 300; ++k) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    auto c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly(1) == a);
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  std::mt19937 rng(5);
  for (int k = 0; k < 300; ++k) {
    auto a = random_poly(rng);
    auto b = random_poly(rng);
    CHECK(specialize(a + b, 2, 3, 5) == specialize(a, 2, 3, 5) + specialize(b, 2, 3, 5));
    CHECK(specialize(a * b, 2, 3, 5) == specialize(a, 2, 3, 5) * specialize(b, 2, 3, 5));
    CHECK(specialize(a, 2, 3, 5).to_rational() == eval_rational(a, 2, 3, 5));
  }
  CHECK_THROWS_AS(specialize(LaurentPoly(1), 2, 2, 4), InvalidArgument);
}

TEST_CASE("QpScalar agrees with exact fractions") {
  std::mt19937                       rng(9);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> k(0, 3);
  for (int i = 0; i < 500; ++i) {
    auto x = QpScalar::make(BigInt(num(rng)), k(rng), 3);
    auto y = QpScalar::make(BigInt(num(rng)), k(rng), 3);
    CHECK((x + y).to_rational() == x.to_rational() + y.to_rational());
    CHECK((x - y).to_rational() == x.to_rational() - y.to_rational());
    CHECK((x * y).to_rational() == x.to_rational() * y.to_rational());
  }
}

TEST_CASE("QpScalar normalization, units and printing") {
  auto x = QpScalar::make(BigInt(10), 2, 5);  // 10 / 25 = 2 / 5
  CHECK(x.numerator() == 2);
  CHECK(x.k() == 1);
  CHECK(x.to_string() == "2/5^1");
  CHECK(QpScalar::make(BigInt(25), 0, 5).is_unit());
  CHECK_FALSE(QpScalar::make(BigInt(6), 0, 5).is_unit());
  auto u = QpScalar::make(BigInt(-125), 1, 5);  // -25
  CHECK((u * u.unit_inverse()) == QpScalar(1));
  CHECK(QpScalar::inverse_prime_power(7, 2).to_rational() == Rational(1, 49));
  CHECK_THROWS_AS(QpScalar::make(BigInt(1), 1, 6), InvalidArgument);
  CHECK_THROWS_AS(QpScalar::make(BigInt(1), 1, 3) + QpScalar::make(BigInt(1), 1, 5),
                  InvalidArgument);
  CHECK_THROWS_AS(QpScalar::make(BigInt(3), 0, 5).unit_inverse(), InvalidArgument);
}
