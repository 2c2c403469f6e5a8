// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/ring.hpp"

#include <algorithm>
#include <sstream>

#include "linrep/errors.hpp"

namespace linrep {

  namespace {

    // Merge two sorted term lists, combining coefficients with op.
    template <typename Op>
    std::vector<LaurentPoly::Term>
    merge(std::vector<LaurentPoly::Term> const& x,
          std::vector<LaurentPoly::Term> const& y,
          Op                                    op) {
      std::vector<LaurentPoly::Term> out;
      out.reserve(x.size() + y.size());
      auto i = x.begin();
      auto j = y.begin();
      while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
          out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
          out.emplace_back(j->first, op(BigInt(0), j->second));
          ++j;
        } else {
          BigInt c = op(i->second, j->second);
          if (sgn(c) != 0) {
            out.emplace_back(i->first, std::move(c));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // LaurentPoly
  ////////////////////////////////////////////////////////////////////////

  LaurentPoly::LaurentPoly(long c) {
    if (c != 0) {
      _terms.emplace_back(Monomial{}, BigInt(c));
    }
  }

  LaurentPoly::LaurentPoly(BigInt const& c) {
    if (sgn(c) != 0) {
      _terms.emplace_back(Monomial{}, c);
    }
  }

  LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    for (auto const& [m, c] : terms) {
      if (m.a < 0 || m.b < 0) {
        throw InvalidArgument("lambda and mu exponents must be non-negative");
      }
    }
    std::sort(terms.begin(), terms.end(), [](Term const& x, Term const& y) {
      return x.first < y.first;
    });
    LaurentPoly out;
    for (auto& t : terms) {
      if (!out._terms.empty() && out._terms.back().first == t.first) {
        out._terms.back().second += t.second;
      } else {
        out._terms.push_back(std::move(t));
      }
      if (sgn(out._terms.back().second) == 0) {
        out._terms.pop_back();
      }
    }
    return out;
  }

  LaurentPoly LaurentPoly::monomial(Monomial m, BigInt const& coefficient) {
    return from_terms({{m, coefficient}});
  }

  LaurentPoly LaurentPoly::lambda() {
    return monomial(Monomial{1, 0, 0});
  }

  LaurentPoly LaurentPoly::mu() {
    return monomial(Monomial{0, 1, 0});
  }

  LaurentPoly LaurentPoly::s(int exponent) {
    return monomial(Monomial{0, 0, exponent});
  }

  bool LaurentPoly::is_constant() const noexcept {
    return _terms.empty()
           || (_terms.size() == 1 && _terms[0].first == Monomial{});
  }

  BigInt LaurentPoly::constant_value() const {
    if (!is_constant()) {
      throw InvalidArgument("polynomial " + to_string() + " is not constant");
    }
    return _terms.empty() ? BigInt(0) : _terms[0].second;
  }

  bool LaurentPoly::is_unit() const noexcept {
    if (_terms.size() != 1) {
      return false;
    }
    auto const& [m, c] = _terms[0];
    return m.a == 0 && m.b == 0 && (c == 1 || c == -1);
  }

  LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) {
      throw InvalidArgument(to_string() + " is not a unit");
    }
    auto const& [m, c] = _terms[0];
    return monomial(Monomial{0, 0, -m.c}, c);
  }

  LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& that) {
    _terms = merge(_terms, that._terms, [](BigInt const& a, BigInt const& b) {
      return BigInt(a + b);
    });
    return *this;
  }

  LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& that) {
    _terms = merge(_terms, that._terms, [](BigInt const& a, BigInt const& b) {
      return BigInt(a - b);
    });
    return *this;
  }

  LaurentPoly& LaurentPoly::operator*=(LaurentPoly const& that) {
    *this = *this * that;
    return *this;
  }

  LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& t : out._terms) {
      t.second = -t.second;
    }
    return out;
  }

  LaurentPoly operator*(LaurentPoly const& x, LaurentPoly const& y) {
    if (x.is_zero() || y.is_zero()) {
      return LaurentPoly();
    }
    std::vector<LaurentPoly::Term> prod;
    prod.reserve(x._terms.size() * y._terms.size());
    for (auto const& [mx, cx] : x._terms) {
      for (auto const& [my, cy] : y._terms) {
        prod.emplace_back(mx * my, BigInt(cx * cy));
      }
    }
    return LaurentPoly::from_terms(std::move(prod));
  }

  std::string LaurentPoly::to_string() const {
    if (_terms.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& [m, c] : _terms) {
      BigInt mag = abs(c);
      if (first) {
        if (sgn(c) < 0) {
          os << "-";
        }
      } else {
        os << (sgn(c) < 0 ? " - " : " + ");
      }
      first          = false;
      bool const one = m == Monomial{};
      if (mag != 1 || one) {
        os << mag.get_str();
      }
      bool need_star = mag != 1 && !one;
      auto factor    = [&](char const* name, int e) {
        if (e == 0) {
          return;
        }
        if (need_star) {
          os << "*";
        }
        os << name;
        if (e != 1) {
          os << "^" << e;
        }
        need_star = true;
      };
      factor("lambda", m.a);
      factor("mu", m.b);
      factor("s", m.c);
    }
    return os.str();
  }

  LaurentPoly pow(LaurentPoly const& p, unsigned k) {
    LaurentPoly out(1);
    for (unsigned i = 0; i < k; ++i) {
      out *= p;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // QpScalar
  ////////////////////////////////////////////////////////////////////////

  QpScalar::QpScalar(long v) : _num(v) {}

  QpScalar::QpScalar(BigInt v) : _num(std::move(v)) {}

  QpScalar QpScalar::make(BigInt numerator, unsigned k, unsigned long prime) {
    if ((k > 0 || prime != 0) && !is_prime(prime)) {
      throw InvalidArgument("Q_p denominators need a prime p");
    }
    QpScalar out(std::move(numerator));
    out._k     = k;
    out._prime = prime;
    out.normalize();
    return out;
  }

  QpScalar QpScalar::inverse_prime_power(unsigned long prime, unsigned k) {
    return make(BigInt(1), k, prime);
  }

  void QpScalar::normalize() {
    if (sgn(_num) == 0) {
      _k = 0;
      return;
    }
    while (_k > 0 && mpz_divisible_ui_p(_num.get_mpz_t(), _prime) != 0) {
      mpz_divexact_ui(_num.get_mpz_t(), _num.get_mpz_t(), _prime);
      --_k;
    }
  }

  unsigned long QpScalar::join_prime(QpScalar const& that) const {
    if (_prime != 0 && that._prime != 0 && _prime != that._prime) {
      throw InvalidArgument("Q_p scalars over different primes");
    }
    return _prime != 0 ? _prime : that._prime;
  }

  bool QpScalar::is_unit() const {
    if (is_zero()) {
      return false;
    }
    BigInt m = abs(_num);
    if (m == 1) {
      return true;
    }
    if (_prime == 0) {
      return false;
    }
    while (mpz_divisible_ui_p(m.get_mpz_t(), _prime) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), _prime);
    }
    return m == 1;
  }

  QpScalar QpScalar::unit_inverse() const {
    if (!is_unit()) {
      throw InvalidArgument(to_string() + " is not a unit of Q_p");
    }
    // num = +-p^j, value = +-p^(j-k); the inverse is +-p^(k-j).
    unsigned j = 0;
    BigInt   m = abs(_num);
    while (m != 1) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), _prime);
      ++j;
    }
    int      sign = sgn(_num);
    QpScalar out;
    out._prime = _prime;
    if (_k >= j) {
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), _prime == 0 ? 1 : _prime, _k - j);
      out._num = sign * pk;
    } else {
      out._num = sign;
      out._k   = j - _k;
    }
    return out;
  }

  Rational QpScalar::to_rational() const {
    BigInt den = 1;
    if (_k > 0) {
      mpz_ui_pow_ui(den.get_mpz_t(), _prime, _k);
    }
    Rational r(_num, den);
    r.canonicalize();
    return r;
  }

  QpScalar& QpScalar::operator+=(QpScalar const& that) {
    _prime = join_prime(that);
    if (that.is_zero()) {
      return *this;
    }
    if (_k == that._k) {
      _num += that._num;
    } else if (_k > that._k) {
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), _prime, _k - that._k);
      _num += that._num * scale;
    } else {
      BigInt scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), _prime, that._k - _k);
      _num = _num * scale + that._num;
      _k   = that._k;
    }
    normalize();
    return *this;
  }

  QpScalar& QpScalar::operator-=(QpScalar const& that) {
    return *this += -that;
  }

  QpScalar& QpScalar::operator*=(QpScalar const& that) {
    _prime = join_prime(that);
    _num *= that._num;
    _k += that._k;
    normalize();
    return *this;
  }

  QpScalar QpScalar::operator-() const {
    QpScalar out = *this;
    out._num     = -out._num;
    return out;
  }

  std::string QpScalar::to_string() const {
    if (_k == 0) {
      return _num.get_str();
    }
    return _num.get_str() + "/" + std::to_string(_prime) + "^"
           + std::to_string(_k);
  }

  bool is_prime(unsigned long p) {
    if (p < 2) {
      return false;
    }
    for (unsigned long d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  QpScalar specialize(LaurentPoly const& poly,
                      long               lambda0,
                      long               mu0,
                      unsigned long      p) {
    if (!is_prime(p)) {
      throw InvalidArgument("specialize needs a prime s, got "
                            + std::to_string(p));
    }
    QpScalar acc;
    for (auto const& [m, c] : poly.terms()) {
      BigInt la, mb;
      mpz_pow_ui(la.get_mpz_t(), BigInt(lambda0).get_mpz_t(), m.a);
      mpz_pow_ui(mb.get_mpz_t(), BigInt(mu0).get_mpz_t(), m.b);
      BigInt   coeff = c * la * mb;
      QpScalar term;
      if (m.c >= 0) {
        BigInt pc;
        mpz_ui_pow_ui(pc.get_mpz_t(), p, static_cast<unsigned long>(m.c));
        term = QpScalar::make(coeff * pc, 0, p);
      } else {
        term = QpScalar::make(coeff, static_cast<unsigned>(-m.c), p);
      }
      acc += term;
    }
    if (acc.prime() == 0) {
      acc = QpScalar::make(acc.numerator(), 0, p);
    }
    return acc;
  }

}  // namespace linrep
