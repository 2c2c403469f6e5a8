// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Exact scalars: Laurent polynomials in Z[lambda, mu, s^{+-1}], rationals whose
// denominators are powers of one prime p (QpScalar), and GMP integers and
// rationals.

#ifndef LINREP_RING_HPP_
#define LINREP_RING_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace linrep {

  using BigInt   = mpz_class;
  using Rational = mpq_class;

  //! lambda^a mu^b s^c with a, b >= 0.
  struct Monomial {
    int a = 0;
    int b = 0;
    int c = 0;

    auto operator<=>(Monomial const&) const = default;

    Monomial operator*(Monomial const& o) const noexcept {
      return Monomial{a + o.a, b + o.b, c + o.c};
    }
  };

  //! Element of Z[lambda, mu, s^{+-1}]; terms sorted lexicographically on
  //! (a, b, c), no zero coefficients.
  class LaurentPoly {
   public:
    using Term = std::pair<Monomial, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(runtime/explicit)
    explicit LaurentPoly(BigInt const& c);

    //! Sorts, merges equal monomials and drops zeros. Throws InvalidArgument
    //! on a negative lambda or mu exponent.
    static LaurentPoly from_terms(std::vector<Term> terms);
    static LaurentPoly monomial(Monomial m, BigInt const& coefficient = 1);
    static LaurentPoly lambda();
    static LaurentPoly mu();
    static LaurentPoly s(int exponent = 1);

    std::vector<Term> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    bool is_constant() const noexcept;
    //! Value of a constant polynomial; throws InvalidArgument otherwise.
    BigInt constant_value() const;

    //! Units of Z[lambda, mu, s^{+-1}] are exactly +-s^c.
    bool        is_unit() const noexcept;
    LaurentPoly unit_inverse() const;

    LaurentPoly& operator+=(LaurentPoly const& that);
    LaurentPoly& operator-=(LaurentPoly const& that);
    LaurentPoly& operator*=(LaurentPoly const& that);
    LaurentPoly  operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
      return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) {
      return a -= b;
    }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);

    bool operator==(LaurentPoly const& that) const {
      return _terms == that._terms;
    }

    std::string to_string() const;

   private:
    std::vector<Term> _terms;
  };

  LaurentPoly pow(LaurentPoly const& p, unsigned k);

  //! x / p^k with p not dividing x unless k = 0. A value with k = 0 carries
  //! no prime (prime() == 0) until it meets one through arithmetic; mixing two
  //! different primes throws InvalidArgument.
  class QpScalar {
   public:
    QpScalar(long v = 0);  // NOLINT(runtime/explicit)
    explicit QpScalar(BigInt v);
    static QpScalar make(BigInt numerator, unsigned k, unsigned long prime);
    static QpScalar inverse_prime_power(unsigned long prime, unsigned k = 1);

    BigInt const& numerator() const noexcept {
      return _num;
    }
    unsigned k() const noexcept {
      return _k;
    }
    unsigned long prime() const noexcept {
      return _prime;
    }
    bool is_zero() const noexcept {
      return sgn(_num) == 0;
    }
    bool is_integer() const noexcept {
      return _k == 0;
    }

    //! Units of Q_p are +-p^j, j in Z.
    bool     is_unit() const;
    QpScalar unit_inverse() const;

    Rational to_rational() const;

    QpScalar& operator+=(QpScalar const& that);
    QpScalar& operator-=(QpScalar const& that);
    QpScalar& operator*=(QpScalar const& that);
    QpScalar  operator-() const;

    friend QpScalar operator+(QpScalar a, QpScalar const& b) {
      return a += b;
    }
    friend QpScalar operator-(QpScalar a, QpScalar const& b) {
      return a -= b;
    }
    friend QpScalar operator*(QpScalar a, QpScalar const& b) {
      return a *= b;
    }

    bool operator==(QpScalar const& that) const {
      return _k == that._k && _num == that._num;
    }

    std::string to_string() const;

   private:
    void          normalize();
    unsigned long join_prime(QpScalar const& that) const;

    BigInt        _num   = 0;
    unsigned      _k     = 0;
    unsigned long _prime = 0;
  };

  bool is_prime(unsigned long p);

  //! Ring homomorphism Z[lambda, mu, s^{+-1}] -> Q_p, lambda -> lambda0,
  //! mu -> mu0, s -> p. Throws InvalidArgument unless p is prime.
  QpScalar specialize(LaurentPoly const& poly,
                      long               lambda0,
                      long               mu0,
                      unsigned long      p);

  //! Uniform zero test across the scalar types used in matrices.
  inline bool is_zero(LaurentPoly const& x) noexcept {
    return x.is_zero();
  }
  inline bool is_zero(QpScalar const& x) noexcept {
    return x.is_zero();
  }
  inline bool is_zero(BigInt const& x) noexcept {
    return sgn(x) == 0;
  }
  inline bool is_zero(Rational const& x) noexcept {
    return sgn(x) == 0;
  }

  inline std::string to_string(LaurentPoly const& x) {
    return x.to_string();
  }
  inline std::string to_string(QpScalar const& x) {
    return x.to_string();
  }
  inline std::string to_string(BigInt const& x) {
    return x.get_str();
  }
  inline std::string to_string(Rational const& x) {
    return x.get_str();
  }

}  // namespace linrep

#endif  // LINREP_RING_HPP_
