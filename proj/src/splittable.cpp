// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/splittable.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

#include "linrep/errors.hpp"

namespace linrep {

  namespace {

    std::size_t slot(Letter l) {
      return 2 * static_cast<std::size_t>(l.gen) + (l.inverse ? 1 : 0);
    }

    void push_reduced(LetterWord& w, Letter l) {
      if (!w.empty() && w.back() == l.inverted()) {
        w.pop_back();
      } else {
        w.push_back(l);
      }
    }

    LetterWord concat(LetterWord const& u, LetterWord const& v) {
      LetterWord out = u;
      for (auto l : v) {
        push_reduced(out, l);
      }
      return out;
    }

    void require_inverse(QMatrix const& a, QMatrix const& b, std::string const& what) {
      if (a.degree() != b.degree() || !(a * b).is_identity()
          || !(b * a).is_identity()) {
        throw InvalidArgument(what + ": matrix and inverse do not multiply to I");
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Generators and tau
  ////////////////////////////////////////////////////////////////////////

  MatrixGroupGens::MatrixGroupGens(std::size_t degree, std::vector<GroupGenerator> gens)
      : _degree(degree), _gens(std::move(gens)) {
    if (degree == 0) {
      throw InvalidArgument("matrix group degree must be positive");
    }
    for (auto const& g : _gens) {
      if (g.matrix.degree() != degree) {
        throw InvalidArgument("generator " + g.name + " has degree "
                              + std::to_string(g.matrix.degree()) + ", expected "
                              + std::to_string(degree));
      }
      require_inverse(g.matrix, g.inverse, "generator " + g.name);
    }
  }

  MatrixGroupGens MatrixGroupGens::from_matrices(std::size_t              degree,
                                                 std::vector<std::string> names,
                                                 std::vector<QMatrix>     matrices) {
    if (names.size() != matrices.size()) {
      throw InvalidArgument("one name per generator matrix is required");
    }
    std::vector<GroupGenerator> gens;
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      auto inv = inverse_rational(matrices[i]);
      if (!inv) {
        throw InvalidArgument("generator " + names[i] + " is singular");
      }
      gens.push_back({names[i], matrices[i], *inv});
    }
    return MatrixGroupGens(degree, std::move(gens));
  }

  TauOracle::TauOracle(std::size_t n, std::vector<TauValue> values)
      : _n(n), _values(std::move(values)) {
    for (auto const& v : _values) {
      if (v.g.degree() != n) {
        throw InvalidArgument("tau value of the wrong degree");
      }
      require_inverse(v.g, v.g_inv, "tau value");
    }
  }

  TauOracle TauOracle::trivial(std::size_t n) {
    return TauOracle(n, {});
  }

  TauValue TauOracle::eval(std::span<Letter const> phi_word) const {
    TauValue out{QMatrix::identity(_n), QMatrix::identity(_n)};
    for (auto l : phi_word) {
      auto const& v = _values.at(l.gen);
      out.g         = out.g * (l.inverse ? v.g_inv : v.g);
      out.g_inv     = (l.inverse ? v.g : v.g_inv) * out.g_inv;
    }
    return out;
  }

  DesignatedAction matrix_space_action(std::size_t n) {
    return [n](QMatrix const& phi, QMatrix const& g) {
      if (phi.degree() != n * n || g.degree() != n) {
        throw InvalidArgument("matrix-space action needs m = n^2");
      }
      QMatrix out(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          Rational acc = 0;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              if (sgn(g(i, j)) != 0) {
                acc += g(i, j) * phi(i * n + j, a * n + b);
              }
            }
          }
          out(a, b) = acc;
        }
      }
      return out;
    };
  }

  QMatrix conjugation_matrix(QMatrix const& w, QMatrix const& w_inv) {
    auto const n = w.degree();
    QMatrix    p(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            p(i * n + j, a * n + b) = w_inv(a, i) * w(j, b);
          }
        }
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semidirect product
  ////////////////////////////////////////////////////////////////////////

  SemidirectElement semidirect_mul(SemidirectElement const& a,
                                   SemidirectElement const& b,
                                   TauOracle const&         tau) {
    auto const t2 = tau.eval(b.phi_word);
    auto const tw = concat(a.phi_word, b.phi_word);
    auto const t  = tau.eval(tw);
    return SemidirectElement{concat(a.word, b.word),
                             tw,
                             a.phi * b.phi,
                             t2.g_inv * a.g * t2.g * b.g,
                             t.g,
                             t.g_inv};
  }

  Rational h_eval(std::size_t              p,
                  std::size_t              k1,
                  std::size_t              k2,
                  std::size_t              q,
                  SemidirectElement const& e,
                  TauOracle const&         tau) {
    auto const n = e.g.degree();
    for (auto idx : {p, k1, k2, q}) {
      if (idx < 1 || idx > n) {
        throw InvalidArgument("H index out of range [1, " + std::to_string(n) + "]");
      }
    }
    auto const t   = tau.eval(e.phi_word);
    Rational   acc = 0;
    for (std::size_t k3 = 0; k3 < n; ++k3) {
      acc += t.g_inv(p - 1, k1 - 1) * t.g(k2 - 1, k3) * e.g(k3, q - 1);
    }
    return acc;
  }

  SemidirectGroup::SemidirectGroup(MatrixGroupGens phi, MatrixGroupGens g, TauOracle tau)
      : _phi(std::move(phi)), _g(std::move(g)), _tau(std::move(tau)) {
    if (_tau.degree() != _g.degree()) {
      throw InvalidArgument("tau values must have the degree of G");
    }
    if (_tau.generator_values().size() != _phi.size()) {
      throw InvalidArgument("tau needs one value per Phi generator");
    }
    for (auto const* gens : {&_phi, &_g}) {
      for (auto const& x : gens->generators()) {
        if (x.name.empty()
            || std::find(_names.begin(), _names.end(), x.name) != _names.end()) {
          throw InvalidArgument("generator names must be non-empty and distinct");
        }
        _names.push_back(x.name);
      }
    }
    for (auto const& v : _tau.generator_values()) {
      _letter_tau.push_back(v);
      _letter_tau.push_back(TauValue{v.g_inv, v.g});
    }
  }

  std::string const& SemidirectGroup::name(std::uint32_t gen) const {
    return _names.at(gen);
  }

  std::uint32_t SemidirectGroup::index_of(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw InvalidArgument("unknown generator '" + std::string(name) + "'");
    }
    return static_cast<std::uint32_t>(it - _names.begin());
  }

  SemidirectElement SemidirectGroup::identity() const {
    auto const im = QMatrix::identity(m());
    auto const in = QMatrix::identity(n());
    return SemidirectElement{{}, {}, im, in, in, in};
  }

  SemidirectElement SemidirectGroup::letter(Letter l) const {
    if (l.gen >= generator_count()) {
      throw InvalidArgument("letter out of range");
    }
    auto out = identity();
    out.word = {l};
    if (l.gen < _phi.size()) {
      auto const& x = _phi[l.gen];
      auto const& t = _letter_tau[slot(l)];
      out.phi_word  = {l};
      out.phi       = l.inverse ? x.inverse : x.matrix;
      out.tau       = t.g;
      out.tau_inv   = t.g_inv;
    } else {
      auto const& x = _g[l.gen - _phi.size()];
      out.g         = l.inverse ? x.inverse : x.matrix;
    }
    return out;
  }

  SemidirectElement SemidirectGroup::multiply(SemidirectElement const& a,
                                              SemidirectElement const& b) const {
    return SemidirectElement{concat(a.word, b.word),
                             concat(a.phi_word, b.phi_word),
                             a.phi * b.phi,
                             b.tau_inv * a.g * b.tau * b.g,
                             a.tau * b.tau,
                             b.tau_inv * a.tau_inv};
  }

  SemidirectElement SemidirectGroup::element(std::span<Letter const> word) const {
    auto out = identity();
    for (auto l : word) {
      out = multiply(out, letter(l));
    }
    return out;
  }

  std::vector<LetterWord> SemidirectGroup::words_of_length(std::size_t length) const {
    std::vector<Letter> alphabet;
    for (std::uint32_t k = 0; k < generator_count(); ++k) {
      alphabet.push_back(Letter{k, false});
      alphabet.push_back(Letter{k, true});
    }
    std::vector<LetterWord> out;
    LetterWord              w;
    std::function<void()>   grow = [&]() {
      if (w.size() == length) {
        out.push_back(w);
        return;
      }
      for (auto l : alphabet) {
        if (!w.empty() && w.back() == l.inverted()) {
          continue;
        }
        w.push_back(l);
        grow();
        w.pop_back();
      }
    };
    grow();
    return out;
  }

  std::vector<LetterWord> SemidirectGroup::words_up_to(std::size_t max_length) const {
    std::vector<LetterWord> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
      auto ws = words_of_length(len);
      if (ws.empty()) {
        break;
      }
      out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
  }

  std::string SemidirectGroup::to_string(std::span<Letter const> word) const {
    if (word.empty()) {
      return "1";
    }
    std::string out;
    for (auto l : word) {
      if (!out.empty()) {
        out += ' ';
      }
      out += name(l.gen);
      if (l.inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  LetterWord SemidirectGroup::parse(std::string_view text) const {
    LetterWord  out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      auto end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      auto token = text.substr(pos, end - pos);
      pos        = end;
      if (token == "1") {
        continue;
      }
      // Names may contain '^' only as the exponent marker.
      auto caret = token.rfind('^');
      long e     = 1;
      auto name  = token;
      if (caret != std::string_view::npos) {
        auto digits = token.substr(caret + 1);
        auto [ptr, ec]
            = std::from_chars(digits.data(), digits.data() + digits.size(), e);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
          throw ParseError("bad exponent in term '" + std::string(token) + "'");
        }
        name = token.substr(0, caret);
      }
      std::uint32_t gen = 0;
      try {
        gen = index_of(name);
      } catch (InvalidArgument const&) {
        throw ParseError("unknown generator '" + std::string(name) + "'");
      }
      for (long k = 0; k < (e < 0 ? -e : e); ++k) {
        push_reduced(out, Letter{gen, e < 0});
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coordinates
  ////////////////////////////////////////////////////////////////////////

  std::string CoordId::to_string() const {
    return std::string(kind == Kind::phi ? "Phi(" : "G(") + std::to_string(i) + ","
           + std::to_string(j) + ")";
  }

  CoordId CoordId::parse(std::string_view text) {
    CoordId out;
    std::string_view rest;
    if (text.starts_with("Phi(")) {
      out.kind = Kind::phi;
      rest     = text.substr(4);
    } else if (text.starts_with("G(")) {
      out.kind = Kind::g;
      rest     = text.substr(2);
    } else {
      throw ParseError("bad coordinate id '" + std::string(text) + "'");
    }
    auto comma = rest.find(',');
    if (comma == std::string_view::npos || rest.empty() || rest.back() != ')') {
      throw ParseError("bad coordinate id '" + std::string(text) + "'");
    }
    auto num = [&](std::string_view s) {
      std::size_t v  = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
        throw ParseError("bad coordinate id '" + std::string(text) + "'");
      }
      return v;
    };
    out.i = num(rest.substr(0, comma));
    out.j = num(rest.substr(comma + 1, rest.size() - comma - 2));
    return out;
  }

  Rational coordinate_of_product(CoordId const&           c,
                                 SemidirectElement const& x,
                                 SemidirectElement const& y) {
    Rational acc = 0;
    if (c.kind == CoordId::Kind::phi) {
      auto const m = x.phi.degree();
      for (std::size_t k = 0; k < m; ++k) {
        auto const& a = x.phi(c.i - 1, k);
        if (sgn(a) != 0) {
          acc += a * y.phi(k, c.j - 1);
        }
      }
      return acc;
    }
    // (tau(y)^-1 x.g tau(y) y.g)_{pq}
    auto const            n = x.g.degree();
    std::vector<Rational> r1(n, Rational(0)), r2(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      auto const& a = y.tau_inv(c.i - 1, k);
      if (sgn(a) == 0) {
        continue;
      }
      for (std::size_t l = 0; l < n; ++l) {
        r1[l] += a * x.g(k, l);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(r1[k]) == 0) {
        continue;
      }
      for (std::size_t l = 0; l < n; ++l) {
        r2[l] += r1[k] * y.tau(k, l);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(r2[k]) != 0) {
        acc += r2[k] * y.g(k, c.j - 1);
      }
    }
    return acc;
  }

  namespace {

    Rational coordinate_of(CoordId const& c, SemidirectElement const& e) {
      auto const& m = c.kind == CoordId::Kind::phi ? e.phi : e.g;
      return m(c.i - 1, c.j - 1);
    }

    // Incremental echelon form over the sample with each row expressed in
    // the inserted functions: row.vec = sum_k row.expr[k] b_k.
    class SpanTracker {
     public:
      std::size_t dimension() const noexcept {
        return _dim;
      }

      //! Coefficients of v in the inserted functions, or nullopt after
      //! inserting v as function number dimension() - 1.
      std::optional<std::vector<Rational>> insert(std::vector<Rational> v) {
        std::vector<Rational> expr(_dim, Rational(0));
        for (auto const& r : _rows) {
          Rational const c = v[r.pivot];
          if (sgn(c) == 0) {
            continue;
          }
          for (auto i : r.support) {
            v[i] -= c * r.vec[i];
          }
          for (std::size_t k = 0; k < r.expr.size(); ++k) {
            if (sgn(r.expr[k]) != 0) {
              expr[k] += c * r.expr[k];
            }
          }
        }
        auto p = std::find_if(v.begin(), v.end(), [](Rational const& x) {
          return sgn(x) != 0;
        });
        if (p == v.end()) {
          return expr;
        }
        Row row;
        row.pivot         = static_cast<std::size_t>(p - v.begin());
        Rational const iv = 1 / v[row.pivot];
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (sgn(v[i]) != 0) {
            v[i] *= iv;
            row.support.push_back(i);
          }
        }
        row.vec = std::move(v);
        row.expr.resize(_dim + 1, Rational(0));
        for (std::size_t k = 0; k < _dim; ++k) {
          row.expr[k] = -expr[k] * iv;
        }
        row.expr[_dim] = iv;
        _rows.push_back(std::move(row));
        ++_dim;
        return std::nullopt;
      }

     private:
      struct Row {
        std::size_t              pivot = 0;
        std::vector<Rational>    vec;
        std::vector<std::size_t> support;
        std::vector<Rational>    expr;
      };
      std::vector<Row> _rows;
      std::size_t      _dim = 0;
    };

    std::vector<Rational> padded(std::vector<Rational> v, std::size_t d) {
      v.resize(d, Rational(0));
      return v;
    }

    std::vector<Rational> unit(std::size_t k, std::size_t d) {
      std::vector<Rational> v(d, Rational(0));
      v[k] = 1;
      return v;
    }

  }  // namespace

  TauContractReport check_tau_contract(SemidirectGroup const&  group,
                                       DesignatedAction const& action,
                                       std::size_t             max_length) {
    TauContractReport report;
    // Phi-words only: the Phi generators come first in the alphabet.
    MatrixGroupGens const  none(group.n(), {});
    SemidirectGroup const  phi_only(group.phi_gens(), none, group.tau());
    for (auto const& w : phi_only.words_up_to(max_length)) {
      auto const e = phi_only.element(w);
      for (auto const& x : group.g_gens().generators()) {
        ++report.words_checked;
        auto lhs = e.tau_inv * x.matrix * e.tau;
        auto rhs = action(e.phi, x.matrix);
        if (!(lhs == rhs)) {
          if (report.violations++ == 0) {
            report.first_violation = "tau(" + phi_only.to_string(w) + ")^-1 " + x.name
                                     + " tau(" + phi_only.to_string(w)
                                     + ") differs from the action on " + x.name;
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // SplittableRep
  ////////////////////////////////////////////////////////////////////////

  QMatrix const& SplittableRep::action(Letter l) const {
    return _actions.at(slot(l));
  }

  QMatrix SplittableRep::action(std::span<Letter const> word) const {
    auto out = QMatrix::identity(degree());
    for (auto l : word) {
      out *= action(l);
    }
    return out;
  }

  Rational SplittableRep::basis_value(std::size_t k, SemidirectElement const& y) const {
    auto const& b = _basis.at(k);
    return coordinate_of_product(b.coord, b.shift, y);
  }

  std::vector<Rational> SplittableRep::recover_coordinates(QMatrix const& a) const {
    auto const            d = degree();
    std::vector<Rational> values(d, Rational(0));  // b(w) = A_w b(e)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = 0; l < d; ++l) {
        if (sgn(a(k, l)) != 0) {
          values[k] += a(k, l) * _identity_values[l];
        }
      }
    }
    std::vector<Rational> out;
    for (auto const& e : _expansions) {
      Rational acc = 0;
      for (std::size_t k = 0; k < d; ++k) {
        acc += e[k] * values[k];
      }
      out.push_back(acc);
    }
    return out;
  }

  SplittableRep build_rep(MatrixGroupGens const&   phi,
                          MatrixGroupGens const&   g,
                          TauOracle const&         tau,
                          SplittableOptions const& options) {
    SplittableRep rep;
    rep._group         = SemidirectGroup(phi, g, tau);
    auto const& group  = rep._group;
    auto const  bound  = rep.bound();
    auto const  gcount = static_cast<std::uint32_t>(group.generator_count());

    if (options.action) {
      rep._contract = check_tau_contract(group, *options.action, options.contract_length);
      if (!rep._contract->passed()) {
        throw VerificationFailure("tau contract violated: "
                                  + rep._contract->first_violation);
      }
    }

    std::vector<SemidirectElement> sample;
    for (auto const& w : group.words_up_to(options.sample_length)) {
      sample.push_back(group.element(w));
    }
    rep._sample_size = sample.size();
    auto values      = [&](CoordId const& c, SemidirectElement const& x) {
      std::vector<Rational> v;
      v.reserve(sample.size());
      for (auto const& y : sample) {
        v.push_back(coordinate_of_product(c, x, y));
      }
      return v;
    };

    if (!phi.empty()) {
      for (std::size_t i = 1; i <= group.m(); ++i) {
        for (std::size_t j = 1; j <= group.m(); ++j) {
          rep._coords.push_back(CoordId{CoordId::Kind::phi, i, j});
        }
      }
    }
    for (std::size_t p = 1; p <= group.n(); ++p) {
      for (std::size_t q = 1; q <= group.n(); ++q) {
        rep._coords.push_back(CoordId{CoordId::Kind::g, p, q});
      }
    }

    SpanTracker tracker;
    auto        add = [&](CoordId const& c, SemidirectElement const& shift) {
      auto r = tracker.insert(values(c, shift));
      if (r) {
        return *r;
      }
      rep._basis.push_back(ShiftedCoordinate{c, shift});
      if (rep._basis.size() > bound) {
        throw VerificationFailure("basis dimension " + std::to_string(rep._basis.size())
                                  + " exceeds the bound m^2 + n^4 = "
                                  + std::to_string(bound));
      }
      return unit(rep._basis.size() - 1, rep._basis.size());
    };

    auto const e = group.identity();
    for (auto const& c : rep._coords) {
      rep._expansions.push_back(add(c, e));
    }
    // Closure: f^x moved by gamma is f^{x gamma}.
    std::vector<std::vector<std::vector<Rational>>> rows(gcount);
    for (std::size_t k = 0; k < rep._basis.size(); ++k) {
      for (std::uint32_t gen = 0; gen < gcount; ++gen) {
        auto const coord = rep._basis[k].coord;
        auto const shift = group.multiply(rep._basis[k].shift, group.letter(Letter{gen, false}));
        rows[gen].push_back(add(coord, shift));
      }
    }

    auto const d = rep._basis.size();
    for (auto& x : rep._expansions) {
      x = padded(std::move(x), d);
    }
    rep._actions.resize(2 * gcount);
    for (std::uint32_t gen = 0; gen < gcount; ++gen) {
      QMatrix a(d);
      for (std::size_t k = 0; k < d; ++k) {
        auto row = padded(rows[gen][k], d);
        for (std::size_t l = 0; l < d; ++l) {
          a(k, l) = row[l];
        }
      }
      auto inv = inverse_rational(a);
      if (!inv) {
        throw VerificationFailure("the action of " + group.name(gen) + " is singular");
      }
      rep._actions[slot(Letter{gen, false})] = std::move(a);
      rep._actions[slot(Letter{gen, true})]  = std::move(*inv);
    }
    for (auto const& b : rep._basis) {
      rep._identity_values.push_back(coordinate_of(b.coord, b.shift));
    }

    // Fresh sample: evenly spaced words of length sample_length + 1.
    auto fresh_words = group.words_of_length(options.sample_length + 1);
    std::vector<LetterWord> fresh;
    if (fresh_words.size() <= options.fresh_limit) {
      fresh = std::move(fresh_words);
    } else {
      for (std::size_t i = 0; i < options.fresh_limit; ++i) {
        fresh.push_back(fresh_words[i * fresh_words.size() / options.fresh_limit]);
      }
    }
    rep._fresh_size = fresh.size();
    for (auto const& w : fresh) {
      auto const            y = group.element(w);
      std::vector<Rational> by;
      for (std::size_t k = 0; k < d; ++k) {
        by.push_back(rep.basis_value(k, y));
      }
      for (std::size_t c = 0; c < rep._coords.size(); ++c) {
        Rational acc = 0;
        for (std::size_t k = 0; k < d; ++k) {
          acc += rep._expansions[c][k] * by[k];
        }
        if (acc != coordinate_of(rep._coords[c], y)) {
          throw VerificationFailure("expansion of " + rep._coords[c].to_string()
                                    + " fails at " + group.to_string(w)
                                    + "; increase the sample length");
        }
      }
      for (std::uint32_t gen = 0; gen < gcount; ++gen) {
        auto const  z = group.multiply(group.letter(Letter{gen, false}), y);
        auto const& a = rep._actions[slot(Letter{gen, false})];
        for (std::size_t k = 0; k < d; ++k) {
          Rational acc = 0;
          for (std::size_t l = 0; l < d; ++l) {
            if (sgn(a(k, l)) != 0) {
              acc += a(k, l) * by[l];
            }
          }
          if (acc != rep.basis_value(k, z)) {
            throw VerificationFailure("shift of basis function " + std::to_string(k)
                                      + " by " + group.name(gen) + " fails at "
                                      + group.to_string(w)
                                      + "; increase the sample length");
          }
        }
      }
    }
    return rep;
  }

  MatrixGroupGens inner_automorphism_gens(MatrixGroupGens const& g) {
    std::vector<GroupGenerator> gens;
    for (auto const& w : g.generators()) {
      gens.push_back({"inn(" + w.name + ")",
                      conjugation_matrix(w.matrix, w.inverse),
                      conjugation_matrix(w.inverse, w.matrix)});
    }
    return MatrixGroupGens(g.degree() * g.degree(), std::move(gens));
  }

  SplittableRep int_g_rep(MatrixGroupGens const& g, SplittableOptions options) {
    std::vector<TauValue> values;
    for (auto const& w : g.generators()) {
      values.push_back(TauValue{w.matrix, w.inverse});
    }
    if (!options.action) {
      options.action = matrix_space_action(g.degree());
    }
    return build_rep(inner_automorphism_gens(g),
                     g,
                     TauOracle(g.degree(), std::move(values)),
                     options);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  SplittableVerifyReport verify_rep(SplittableRep const& rep,
                                    std::size_t          max_length,
                                    std::size_t          pairs,
                                    std::uint32_t        seed) {
    SplittableVerifyReport report;
    report.max_length  = max_length;
    auto const& group  = rep.group();
    auto const  gcount = static_cast<std::uint32_t>(group.generator_count());
    auto const  d      = rep.degree();
    auto        note   = [&](std::string s) {
      if (report.failures.size() < 10) {
        report.failures.push_back(std::move(s));
      }
    };

    std::vector<SemidirectElement> probes{group.identity()};
    for (std::uint32_t gen = 0; gen < gcount; ++gen) {
      probes.push_back(group.letter(Letter{gen, false}));
      probes.push_back(group.letter(Letter{gen, true}));
    }

    std::mt19937                               rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, max_length);
    auto random_word = [&]() {
      LetterWord w;
      if (gcount == 0) {
        return w;
      }
      std::uniform_int_distribution<std::uint32_t> pick(0, 2 * gcount - 1);
      auto const                                   len = length(rng);
      while (w.size() < len) {
        auto   r = pick(rng);
        Letter l{r / 2, r % 2 == 1};
        if (w.empty() || !(w.back() == l.inverted())) {
          w.push_back(l);
        }
      }
      return w;
    };

    for (std::size_t k = 0; k < pairs; ++k) {
      auto const u  = random_word();
      auto const v  = random_word();
      auto const uv = group.multiply(group.element(u), group.element(v));
      auto const a  = rep.action(u) * rep.action(v);
      ++report.pairs_checked;
      bool ok = true;
      for (auto const& y : probes) {
        auto const z = group.multiply(uv, y);
        for (std::size_t i = 0; i < d && ok; ++i) {
          Rational acc = 0;
          for (std::size_t j = 0; j < d; ++j) {
            if (sgn(a(i, j)) != 0) {
              acc += a(i, j) * rep.basis_value(j, y);
            }
          }
          ok = acc == rep.basis_value(i, z);
        }
      }
      if (!ok) {
        ++report.homomorphism_failures;
        note("action(" + group.to_string(u) + ") action(" + group.to_string(v)
             + ") does not shift the basis like the product");
      }
    }

    for (auto const& w : group.words_up_to(max_length)) {
      ++report.words_checked;
      auto const a         = rep.action(w);
      auto const e         = group.element(w);
      auto const recovered = rep.recover_coordinates(a);
      bool       match     = true;
      for (std::size_t c = 0; c < rep.coordinates().size(); ++c) {
        auto const& id = rep.coordinates()[c];
        auto const& m  = id.kind == CoordId::Kind::phi ? e.phi : e.g;
        match          = match && recovered[c] == m(id.i - 1, id.j - 1);
      }
      if (!match) {
        ++report.recovery_failures;
        note("coordinates read off the action of " + group.to_string(w)
             + " are wrong");
      }
      if (a.is_identity()) {
        ++report.identity_actions;
        if (!e.is_identity()) {
          ++report.injectivity_failures;
          note(group.to_string(w) + " acts trivially but is not the identity");
        }
      }
    }
    return report;
  }

}  // namespace linrep
