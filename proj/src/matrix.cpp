// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/matrix.hpp"

namespace linrep {

  BigInt determinant_bareiss(Matrix<BigInt> m) {
    auto const n = m.degree();
    if (n == 0) {
      return BigInt(1);
    }
    int    sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (sgn(m(k, k)) == 0) {
        std::size_t r = k + 1;
        while (r < n && sgn(m(r, k)) == 0) {
          ++r;
        }
        if (r == n) {
          return BigInt(0);
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(k, j), m(r, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
          mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        }
      }
      prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
  }

  std::optional<Matrix<Rational>> inverse_rational(Matrix<Rational> m) {
    auto const n   = m.degree();
    auto       inv = Matrix<Rational>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && sgn(m(piv, col)) == 0) {
        ++piv;
      }
      if (piv == n) {
        return std::nullopt;
      }
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(piv, j), m(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      Rational const scale = 1 / m(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(col, j) *= scale;
        inv(col, j) *= scale;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || sgn(m(i, col)) == 0) {
          continue;
        }
        Rational const f = m(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) -= f * m(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  Matrix<QpScalar> specialize(Matrix<LaurentPoly> const& m,
                              long                       lambda0,
                              long                       mu0,
                              unsigned long              p) {
    return m.map([&](LaurentPoly const& x) {
      return specialize(x, lambda0, mu0, p);
    });
  }

}  // namespace linrep
