#include <random>

#include "doctest.h"
#include "linrep/errors.hpp"
#include "linrep/matrix.hpp"

using namespace linrep;

namespace {

  using PM = Matrix<LaurentPoly>;

  PM x0_sym() {
    return PM{{1, 0}, {LaurentPoly::lambda(), 1}};
  }
  PM x1_sym() {
    return PM{{1, LaurentPoly::mu()}, {0, 1}};
  }
  PM x1_inv_sym() {
    return PM{{1, -LaurentPoly::mu()}, {0, 1}};
  }

}  // namespace

TEST_CASE("identity, scalar and products") {
  auto m = PM{{LaurentPoly::lambda(), 2}, {3, LaurentPoly::mu()}};
  CHECK(PM::identity(2) * m == m);
  CHECK(m * PM::identity(2) == m);
  auto s = LaurentPoly::s();
  CHECK(s * PM::identity(2) == PM{{s, 0}, {0, s}});
  CHECK(PM::scalar(2, s) == s * PM::identity(2));
  auto l  = LaurentPoly::lambda();
  auto mu = LaurentPoly::mu();
  CHECK(x0_sym() * x1_inv_sym() == PM{{1, -mu}, {l, LaurentPoly(1) - l * mu}});
  CHECK_THROWS_AS(PM::identity(2) * PM::identity(3), InvalidArgument);
  CHECK_THROWS_AS((PM{{1, 2}, {3}}), InvalidArgument);
  CHECK_THROWS_AS(m.at(2, 0), InvalidArgument);
}

TEST_CASE("block diagonals") {
  auto a = x0_sym();
  CHECK(block_diag<LaurentPoly>({a}) == a);
  CHECK(block_diag<LaurentPoly>({PM::identity(2), PM::identity(2)}) == PM::identity(4));
  auto d = block_diag<LaurentPoly>({x0_sym(), x1_sym()});
  CHECK(d * d == block_diag<LaurentPoly>({x0_sym() * x0_sym(), x1_sym() * x1_sym()}));
  CHECK(d.block(1, 1, 2) == x1_sym());
  CHECK(d.block(0, 1, 2) == PM(2));
  CHECK_THROWS_AS(block_diag<LaurentPoly>({PM::identity(2), PM::identity(3)}),
                  InvalidArgument);
}

TEST_CASE("block companions and their inverses") {
  using Ref = BlockRef<LaurentPoly>;
  auto s    = LaurentPoly::s();
  auto c    = s * x0_sym();
  auto ci   = LaurentPoly::s(-1) * PM{{1, 0}, {-LaurentPoly::lambda(), 1}};
  auto t    = block_companion<LaurentPoly>({Ref::identity(), Ref::identity()}, c);
  auto ti
      = block_companion_inverse<LaurentPoly>({Ref::identity(), Ref::identity()}, ci);
  CHECK(t.degree() == 6);
  CHECK(t.block(0, 1, 2) == PM::identity(2));
  CHECK(t.block(2, 0, 2) == c);
  CHECK((t * ti).is_identity());
  CHECK((ti * t).is_identity());
  // The cube of the companion is block-scalar in the corner.
  CHECK(pow(t, 3) == block_diag<LaurentPoly>({c, c, c}));
  CHECK(block_companion<LaurentPoly>({}, c) == c);
  CHECK_THROWS_AS(block_companion<LaurentPoly>({Ref::of(PM::identity(3))}, c),
                  InvalidArgument);
}

TEST_CASE("conjugation checks the supplied inverse") {
  auto u     = x1_sym();
  auto u_inv = x1_inv_sym();
  auto m     = x0_sym();
  CHECK(conjugate(m, u, u_inv) == u_inv * m * u);
  CHECK_THROWS_AS(conjugate(m, u, u), InvalidArgument);
}

TEST_CASE("Bareiss determinant agrees with a rational oracle") {
  std::mt19937                       rng(1);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int k = 0; k < 50; ++k) {
    std::size_t const n = 1 + k % 5;
    Matrix<BigInt>    m(n);
    Matrix<Rational>  q(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = entry(rng);
        q(i, j) = m(i, j);
      }
    }
    // Oracle: product of pivots of rational elimination.
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && sgn(q(p, c)) == 0) {
        ++p;
      }
      if (p == n) {
        det = 0;
        break;
      }
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(q(p, j), q(c, j));
        }
        det = -det;
      }
      det *= q(c, c);
      for (std::size_t i = c + 1; i < n; ++i) {
        Rational f = q(i, c) / q(c, c);
        for (std::size_t j = c; j < n; ++j) {
          q(i, j) -= f * q(c, j);
        }
      }
    }
    CHECK(Rational(determinant_bareiss(m)) == det);
    auto inv = inverse_rational(m.map([](BigInt const& x) { return Rational(x); }));
    CHECK(inv.has_value() == (sgn(det) != 0));
    if (inv) {
      auto mq = m.map([](BigInt const& x) { return Rational(x); });
      CHECK((mq * *inv).is_identity());
    }
  }
}

TEST_CASE("matrix specialization") {
  auto m = x0_sym() * x1_sym();
  auto q = specialize(m, 2, 3, 5);
  CHECK(q(1, 1) == QpScalar(7));
  CHECK(q(0, 1) == QpScalar(3));
  CHECK(determinant2(m) == LaurentPoly(1));
}
