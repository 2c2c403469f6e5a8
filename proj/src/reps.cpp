// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/reps.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <thread>

#include "linrep/errors.hpp"

namespace linrep {

  std::string to_string(RingKind kind) {
    switch (kind) {
      case RingKind::laurent:
        return "laurent";
      case RingKind::qp:
        return "qp";
      case RingKind::integer:
        return "integer";
      case RingKind::rational:
        return "rational";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Representation
  ////////////////////////////////////////////////////////////////////////

  template <typename Scalar>
  Representation<Scalar>::Representation(
      std::string                         group,
      RingDescriptor                      ring,
      std::vector<GeneratorImage<Scalar>> generators)
      : _group(std::move(group)),
        _ring(ring),
        _generators(std::move(generators)) {
    if (_generators.empty()) {
      throw InvalidArgument("a representation needs at least one generator");
    }
    _degree = _generators[0].image.degree();
    for (std::size_t k = 0; k < _generators.size(); ++k) {
      auto const& g = _generators[k];
      if (g.name.empty()) {
        throw InvalidArgument("generator names must be non-empty");
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (_generators[j].name == g.name) {
          throw InvalidArgument("duplicate generator name '" + g.name + "'");
        }
      }
      if (g.image.degree() != _degree || g.inverse.degree() != _degree) {
        throw InvalidArgument("generator '" + g.name
                              + "' has the wrong degree");
      }
      if (!(g.image * g.inverse).is_identity()
          || !(g.inverse * g.image).is_identity()) {
        throw InvalidArgument("imageInverse of generator '" + g.name
                              + "' is not its inverse");
      }
    }
  }

  template <typename Scalar>
  GeneratorImage<Scalar> const&
  Representation<Scalar>::generator(std::string_view name) const {
    return _generators[index_of(name)];
  }

  template <typename Scalar>
  std::uint32_t Representation<Scalar>::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < _generators.size(); ++k) {
      if (_generators[k].name == name) {
        return static_cast<std::uint32_t>(k);
      }
    }
    throw InvalidArgument("unknown generator '" + std::string(name) + "'");
  }

  template <typename Scalar>
  void Representation<Scalar>::attach_spec(HnnSpec                spec,
                                           std::vector<MixedWord> words) {
    if (words.size() != _generators.size()) {
      throw InvalidArgument("attach_spec needs one word per generator");
    }
    for (auto const& w : words) {
      if (w.rank() != spec.rank) {
        throw InvalidArgument("generator word rank differs from the spec");
      }
    }
    _spec            = std::move(spec);
    _generator_words = std::move(words);
  }

  template <typename Scalar>
  Matrix<Scalar>
  Representation<Scalar>::eval(std::span<Letter const> word) const {
    auto out = Matrix<Scalar>::identity(_degree);
    for (auto l : word) {
      auto const& g = _generators.at(l.gen);
      out *= l.inverse ? g.inverse : g.image;
    }
    return out;
  }

  template <typename Scalar>
  Matrix<Scalar> Representation<Scalar>::eval(MixedWord const& w) const {
    auto ls = letters(w);
    return eval(std::span<Letter const>(ls));
  }

  template <typename Scalar>
  std::vector<Letter> Representation<Scalar>::letters(MixedWord const& w) const {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto s : w.symbols()) {
      auto name = s.is_stable() ? std::string("t") : "x" + std::to_string(s.gen);
      out.push_back(Letter{index_of(name), s.inverse});
    }
    return out;
  }

  template <typename Scalar>
  std::vector<Letter>
  Representation<Scalar>::parse(std::string_view text) const {
    std::vector<Letter> out;
    std::size_t         pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      auto end = pos;
      while (end < text.size()
             && !std::isspace(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      auto token = text.substr(pos, end - pos);
      pos        = end;
      auto caret = token.find('^');
      auto name  = token.substr(0, caret);
      long e     = 1;
      if (caret != std::string_view::npos) {
        auto digits = token.substr(caret + 1);
        auto first  = digits.data();
        auto last   = first + digits.size();
        if (first != last && *first == '+') {
          ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, e);
        if (ec != std::errc() || ptr != last || first == last) {
          throw ParseError("bad exponent in term '" + std::string(token) + "'");
        }
      }
      std::uint32_t index = 0;
      try {
        index = index_of(name);
      } catch (InvalidArgument const&) {
        throw ParseError("unknown generator '" + std::string(name) + "'");
      }
      for (long k = 0; k < (e < 0 ? -e : e); ++k) {
        Letter l{index, e < 0};
        if (!out.empty() && out.back() == l.inverted()) {
          out.pop_back();
        } else {
          out.push_back(l);
        }
      }
    }
    return out;
  }

  template <typename Scalar>
  std::string
  Representation<Scalar>::to_string(std::span<Letter const> word) const {
    if (word.empty()) {
      return "1";
    }
    std::string out;
    for (auto l : word) {
      if (!out.empty()) {
        out += ' ';
      }
      out += _generators.at(l.gen).name;
      if (l.inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  template <typename Scalar>
  MixedWord Representation<Scalar>::expand(std::span<Letter const> word) const {
    if (!_spec) {
      throw InvalidArgument("representation '" + _group
                            + "' carries no HNN spec");
    }
    std::vector<Symbol> out;
    for (auto l : word) {
      auto const& w = _generator_words.at(l.gen);
      if (l.inverse) {
        auto inv = w.inverse().symbols();
        out.insert(out.end(), inv.begin(), inv.end());
      } else {
        out.insert(out.end(), w.symbols().begin(), w.symbols().end());
      }
    }
    return MixedWord(_spec->rank, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Scalars
  ////////////////////////////////////////////////////////////////////////

  RingParams<LaurentPoly> symbolic_params() {
    return RingParams<LaurentPoly>{LaurentPoly::lambda(),
                                   LaurentPoly::mu(),
                                   LaurentPoly::s(1),
                                   LaurentPoly::s(-1),
                                   RingDescriptor{RingKind::laurent, 0}};
  }

  RingParams<QpScalar> qp_params(long lambda0, long mu0, unsigned long p) {
    if (!is_prime(p)) {
      throw InvalidArgument("s must be a prime for Q_p, got "
                            + std::to_string(p));
    }
    return RingParams<QpScalar>{QpScalar::make(BigInt(lambda0), 0, p),
                                QpScalar::make(BigInt(mu0), 0, p),
                                QpScalar::make(BigInt(p), 0, p),
                                QpScalar::inverse_prime_power(p, 1),
                                RingDescriptor{RingKind::qp, p}};
  }

  ////////////////////////////////////////////////////////////////////////
  // sigma(lambda, mu)
  ////////////////////////////////////////////////////////////////////////

  namespace {

    template <typename Scalar>
    Matrix<Scalar> lower(Scalar const& x) {
      return Matrix<Scalar>{{Scalar(1), Scalar(0)}, {x, Scalar(1)}};
    }

    template <typename Scalar>
    Matrix<Scalar> upper(Scalar const& x) {
      return Matrix<Scalar>{{Scalar(1), x}, {Scalar(0), Scalar(1)}};
    }

    std::string x_name(std::size_t i) {
      return "x" + std::to_string(i);
    }

  }  // namespace

  template <typename Scalar>
  Representation<Scalar> sigma_free(std::size_t           rank,
                                    Scalar const&         lambda,
                                    Scalar const&         mu,
                                    SigmaBasis            basis,
                                    RingDescriptor const& ring) {
    if (rank == 0) {
      throw InvalidArgument("sigma needs rank >= 1");
    }
    if (basis == SigmaBasis::rank2_mixed && rank != 2) {
      throw InvalidArgument("the rank2-mixed basis needs rank 2, got "
                            + std::to_string(rank));
    }
    auto const x0     = lower(lambda);
    auto const x0_inv = lower(Scalar(-lambda));
    auto const v      = upper(mu);
    auto const v_inv  = upper(Scalar(-mu));

    std::vector<GeneratorImage<Scalar>> gens;
    if (basis == SigmaBasis::rank2_mixed) {
      gens.push_back({x_name(0), x0, x0_inv});
      gens.push_back({x_name(1), v, v_inv});
    } else {
      auto vi     = Matrix<Scalar>::identity(2);  // V^i
      auto vi_inv = Matrix<Scalar>::identity(2);
      for (std::size_t i = 0; i < rank; ++i) {
        gens.push_back(
            {x_name(i), vi_inv * x0 * vi, vi_inv * x0_inv * vi});
        vi     = vi * v;
        vi_inv = vi_inv * v_inv;
      }
    }
    return Representation<Scalar>(
        "F_" + std::to_string(rank), ring, std::move(gens));
  }

  SigmaBasis default_sigma_basis(HnnSpec const& spec) {
    // A(3): rank 2 with psi^6 inner.
    return spec.rank == 2 && spec.power == 6 ? SigmaBasis::rank2_mixed
                                             : SigmaBasis::conjugated;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset induction
  ////////////////////////////////////////////////////////////////////////

  namespace {

    template <typename Scalar>
    std::string describe(EntryDifference<Scalar> const& d) {
      return "entry (" + std::to_string(d.row + 1) + ","
             + std::to_string(d.col + 1) + "): " + to_string(d.lhs)
             + " vs " + to_string(d.rhs);
    }

    template <typename Scalar>
    void require_relations(
        Representation<Scalar> const&                         rep,
        std::vector<std::pair<LetterWord, LetterWord>> const& relations) {
      auto report = verify_defining_relations(rep, relations);
      for (auto const& r : report.results) {
        if (!r.passed) {
          throw VerificationFailure(rep.group() + ": relation " + r.label
                                    + " fails at " + describe(*r.difference));
        }
      }
    }

    // Cosets 1, t, .., t^{n-1}: t is the block companion with corner
    // sigma_bar(t^n), x the block diagonal of sigma_bar(phi^-j(x)).
    template <typename Scalar, typename BaseEval>
    Representation<Scalar> induce(HnnSpec const&        spec,
                                  BaseEval const&       base,
                                  Matrix<Scalar> const& corner,
                                  Matrix<Scalar> const& corner_inv,
                                  std::string           group,
                                  RingDescriptor const& ring) {
      auto const n = spec.power;
      std::vector<Endomorphism> back;  // back[j] = phi^-j
      back.reserve(n);
      back.push_back(Endomorphism::identity(spec.rank));
      Endomorphism const phi_inv(spec.rank, spec.phi.inverse_images());
      for (std::size_t j = 1; j < n; ++j) {
        back.push_back(compose(phi_inv, back.back()));
      }

      std::vector<GeneratorImage<Scalar>> gens;
      for (std::uint32_t i = 0; i < spec.rank; ++i) {
        auto const                  x = Word::generator(spec.rank, i);
        std::vector<Matrix<Scalar>> diag, diag_inv;
        for (std::size_t j = 0; j < n; ++j) {
          auto w = back[j].apply(x);
          diag.push_back(base(w));
          diag_inv.push_back(base(invert(w)));
        }
        gens.push_back({x_name(i), block_diag(diag), block_diag(diag_inv)});
      }
      std::vector<BlockRef<Scalar>> ones(n - 1, BlockRef<Scalar>::identity());
      gens.push_back({"t",
                      block_companion(ones, corner),
                      block_companion_inverse(ones, corner_inv)});

      Representation<Scalar> rep(std::move(group), ring, std::move(gens));
      std::vector<MixedWord> words;
      for (std::uint32_t i = 0; i < spec.rank; ++i) {
        words.push_back(MixedWord::generator(spec.rank, i));
      }
      words.push_back(MixedWord::stable(spec.rank));
      rep.attach_spec(spec, std::move(words));
      require_relations(rep, hnn_relations(rep));
      return rep;
    }

    template <typename Scalar>
    void check_sigma(HnnSpec const& spec, Representation<Scalar> const& sigma) {
      if (sigma.generators().size() != spec.rank) {
        throw InvalidArgument("sigma has " + std::to_string(sigma.generators().size())
                              + " generators, the spec needs "
                              + std::to_string(spec.rank));
      }
      spec.validate();
    }

  }  // namespace

  template <typename Scalar>
  Representation<Scalar> hnn_induced(HnnSpec const&                spec,
                                     Representation<Scalar> const& sigma,
                                     Scalar const&                 s,
                                     Scalar const&                 s_inv) {
    check_sigma(spec, sigma);
    if (!(s * s_inv == Scalar(1))) {
      throw InvalidArgument("s_inv is not the inverse of s");
    }
    auto base = [&](Word const& w) {
      return sigma.eval(w);
    };
    auto const f = spec.conjugator();
    return induce<Scalar>(spec,
                          base,
                          s * sigma.eval(f),
                          s_inv * sigma.eval(invert(f)),
                          spec.name,
                          sigma.ring());
  }

  template <typename Scalar>
  Representation<Scalar> artin_hnn(long m, RingParams<Scalar> const& params) {
    auto spec  = artin_spec(m);
    auto sigma = sigma_free(
        spec.rank, params.lambda, params.mu, default_sigma_basis(spec), params.ring);
    return hnn_induced(spec, sigma, params.s, params.s_inv);
  }

  ////////////////////////////////////////////////////////////////////////
  // Artin groups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    template <typename Scalar>
    Representation<Scalar> on_canonical(std::string                    group,
                                        RingDescriptor const&          ring,
                                        GeneratorImage<Scalar>         x,
                                        GeneratorImage<Scalar>         y,
                                        HnnSpec const&                 spec,
                                        ArtinCanonical const&          canon) {
      x.name = "x";
      y.name = "y";
      Representation<Scalar> rep(std::move(group), ring, {x, y});
      rep.attach_spec(spec, {canon.x, canon.y});
      require_relations(rep, artin_relations(rep, canon.m));
      return rep;
    }

    template <typename Scalar>
    void require_equal(std::string const&    what,
                       Matrix<Scalar> const& got,
                       Matrix<Scalar> const& want) {
      if (got.degree() != want.degree()) {
        throw VerificationFailure(what + ": degree " + std::to_string(got.degree())
                                  + " instead of "
                                  + std::to_string(want.degree()));
      }
      if (auto d = first_difference(got, want)) {
        throw VerificationFailure(what + " differs at " + describe(*d));
      }
    }

  }  // namespace

  template <typename Scalar>
  Representation<Scalar> artin_even(long n, RingParams<Scalar> const& params) {
    if (n < 2) {
      throw InvalidArgument("artin_even needs n >= 2");
    }
    auto const m   = 2 * n;
    auto const tau = artin_hnn(m, params);
    auto const k   = static_cast<std::size_t>(n);

    auto const a     = upper(Scalar(-params.mu));  // A = V^-1
    auto const a_inv = upper(params.mu);
    std::vector<Matrix<Scalar>> u_blocks, u_inv_blocks;
    auto                        aj = Matrix<Scalar>::identity(2);
    auto                        aj_inv = Matrix<Scalar>::identity(2);
    for (std::size_t j = 0; j < k; ++j) {
      u_blocks.push_back(aj);
      u_inv_blocks.push_back(aj_inv);
      aj     = aj * a;
      aj_inv = aj_inv * a_inv;
    }
    auto const u     = block_diag(u_blocks);
    auto const u_inv = block_diag(u_inv_blocks);

    auto const& x0 = tau.generator("x0");
    auto const& t  = tau.generator("t");
    GeneratorImage<Scalar> x{"x",
                             conjugate(x0.image, u, u_inv),
                             conjugate(x0.inverse, u, u_inv)};
    GeneratorImage<Scalar> y{
        "y", conjugate(t.image, u, u_inv), conjugate(t.inverse, u, u_inv)};

    // Displayed shapes: x block-scalar in X0, y companion with A blocks and
    // corner B = s X0^-1 [[1 - lambda mu, mu], [-lambda, 1]]^{n-1}.
    auto const one = Scalar(1);
    auto const lam = params.lambda;
    auto const mu  = params.mu;
    Matrix<Scalar> const w{{one - lam * mu, mu}, {Scalar(-lam), one}};
    auto const b = params.s * (lower(Scalar(-lam)) * pow(w, n - 1));
    require_equal("artin_even x", x.image,
                  block_diag(std::vector<Matrix<Scalar>>(k, lower(lam))));
    require_equal("artin_even y",
                  y.image,
                  block_companion(std::vector<BlockRef<Scalar>>(
                                      k - 1, BlockRef<Scalar>::of(a)),
                                  b));
    if (y.image.degree() != 2 * k) {
      throw VerificationFailure("artin_even degree is not 2n");
    }
    return on_canonical<Scalar>("A(" + std::to_string(m) + ")",
                                params.ring,
                                std::move(x),
                                std::move(y),
                                *tau.spec(),
                                artin_canonical(m));
  }

  template <typename Scalar>
  Representation<Scalar> artin_odd(long n, RingParams<Scalar> const& params) {
    if (n < 1) {
      throw InvalidArgument("artin_odd needs n >= 1");
    }
    auto const  m     = 2 * n + 1;
    auto const  tau   = artin_hnn(m, params);
    auto const& spec  = *tau.spec();
    auto const& x0    = tau.generator("x0");
    auto const& t     = tau.generator("t");
    auto const  sigma = sigma_free(spec.rank,
                                  params.lambda,
                                  params.mu,
                                  default_sigma_basis(spec),
                                  params.ring);

    GeneratorImage<Scalar> x{"x", t.image, t.inverse};
    GeneratorImage<Scalar> y{"y", x0.image * t.image, t.inverse * x0.inverse};

    auto const blocks = static_cast<std::size_t>(4 * n + 2);
    if (x.image.degree() != 2 * blocks
        || x.image.degree() != static_cast<std::size_t>(4 * m)) {
      throw VerificationFailure("artin_odd degree is not 4(2n+1)");
    }
    // Displayed shapes: x has E on the superdiagonal and corner s Sigma^-1;
    // y has psi^-j(x0) on the superdiagonal and corner s Sigma^-1 psi(x0).
    auto const& big_sigma = spec.w0;
    auto const  x0w       = Word::generator(spec.rank, 0);
    auto const  s_sigma_inv = params.s * sigma.eval(invert(big_sigma));
    require_equal("artin_odd x",
                  x.image,
                  block_companion(std::vector<BlockRef<Scalar>>(
                                      blocks - 1, BlockRef<Scalar>::identity()),
                                  s_sigma_inv));
    std::vector<BlockRef<Scalar>> super;
    super.push_back(BlockRef<Scalar>::of(sigma.eval(x0w)));
    for (std::size_t j = 1; j + 1 < blocks; ++j) {
      super.push_back(BlockRef<Scalar>::of(
          sigma.eval(psi_inverse_power_x0(n, static_cast<long>(j)))));
    }
    auto const corner
        = params.s * sigma.eval(invert(big_sigma) * spec.phi.apply(x0w));
    require_equal("artin_odd y", y.image, block_companion(super, corner));

    return on_canonical<Scalar>("A(" + std::to_string(m) + ")",
                                params.ring,
                                std::move(x),
                                std::move(y),
                                spec,
                                artin_canonical(m));
  }

  template <typename Scalar>
  Representation<Scalar> artin(long m, RingParams<Scalar> const& params) {
    if (m < 3) {
      throw InvalidArgument("Artin groups A(m) need m >= 3");
    }
    return m % 2 == 0 ? artin_even(m / 2, params) : artin_odd(m / 2, params);
  }

  ////////////////////////////////////////////////////////////////////////
  // Integer variant
  ////////////////////////////////////////////////////////////////////////

  Representation<BigInt> integer_hnn(HnnSpec const&                spec,
                                     Representation<BigInt> const& sigma,
                                     BigInt const&                 s) {
    if (sgn(s) == 0) {
      throw InvalidArgument("integer_hnn needs s != 0");
    }
    check_sigma(spec, sigma);
    if (sigma.degree() != 2) {
      throw InvalidArgument("integer_hnn needs a 2 x 2 sigma");
    }
    for (auto const& g : sigma.generators()) {
      if (determinant2(g.image) != 1) {
        throw InvalidArgument("sigma generator " + g.name
                              + " does not have determinant 1");
      }
    }
    auto const e2   = Matrix<BigInt>::identity(2);
    auto       base = [&](Word const& w) {
      return block_diag<BigInt>({e2, sigma.eval(w)});
    };
    auto const f = spec.conjugator();
    auto const corner
        = block_diag<BigInt>({upper(s), sigma.eval(f)});
    auto const corner_inv
        = block_diag<BigInt>({upper(BigInt(-s)), sigma.eval(invert(f))});
    RingDescriptor const ring{RingKind::integer, 0};
    return induce<BigInt>(
        spec, base, corner, corner_inv, spec.name + " integer", ring);
  }

  Representation<BigInt>
  artin_integer(long m, long lambda0, long mu0, BigInt const& s) {
    auto const spec  = artin_spec(m);
    auto const sigma = sigma_free<BigInt>(spec.rank,
                                          BigInt(lambda0),
                                          BigInt(mu0),
                                          default_sigma_basis(spec),
                                          RingDescriptor{RingKind::integer, 0});
    auto const full  = integer_hnn(spec, sigma, s);
    auto const canon = artin_canonical(m);
    GeneratorImage<BigInt> x{"x", full.eval(canon.x), full.eval(canon.x.inverse())};
    GeneratorImage<BigInt> y{"y", full.eval(canon.y), full.eval(canon.y.inverse())};
    if (x.image.degree() != 4 * spec.power) {
      throw VerificationFailure("integer representation degree is not 4n");
    }
    for (auto const* g : {&x, &y}) {
      if (determinant_bareiss(g->image) != 1) {
        throw VerificationFailure("integer generator " + g->name
                                  + " does not have determinant 1");
      }
    }
    return on_canonical<BigInt>("A(" + std::to_string(m) + ") integer",
                                full.ring(),
                                std::move(x),
                                std::move(y),
                                spec,
                                canon);
  }

  ////////////////////////////////////////////////////////////////////////
  // B_3
  ////////////////////////////////////////////////////////////////////////

  template <typename Scalar>
  B3Explicit<Scalar> b3_explicit(RingParams<Scalar> const& params) {
    auto const  tau  = artin_hnn(3, params);
    auto const& spec = *tau.spec();
    auto const  sigma
        = sigma_free(2, params.lambda, params.mu, SigmaBasis::rank2_mixed, params.ring);
    auto const big_sigma     = sigma.eval(spec.w0);
    auto const big_sigma_inv = sigma.eval(invert(spec.w0));
    auto const e2            = Matrix<Scalar>::identity(2);

    B3Explicit<Scalar> out;
    out.T = tau.generator("t").image;
    out.D = tau.generator("x0").image;
    out.U = block_diag<Scalar>({e2, e2, big_sigma_inv, big_sigma_inv,
                                big_sigma_inv, big_sigma_inv});
    auto const u_inv = block_diag<Scalar>(
        {e2, e2, big_sigma, big_sigma, big_sigma, big_sigma});
    out.X = conjugate(out.T, out.U, u_inv);
    out.Y = conjugate(Matrix<Scalar>(out.D * out.T), out.U, u_inv);

    auto const x0    = Word::generator(2, 0);
    auto       psi_k = [&](long k) {
      return sigma.eval(endo_power(spec.phi, k).apply(x0));
    };
    using Ref = BlockRef<Scalar>;
    require_equal("U^-1 T U",
                  out.X,
                  block_companion<Scalar>({Ref::identity(),
                                           Ref::of(big_sigma_inv),
                                           Ref::identity(),
                                           Ref::identity(),
                                           Ref::identity()},
                                          params.s * e2));
    require_equal(
        "U^-1 D T U",
        out.Y,
        block_companion<Scalar>(
            {Ref::of(sigma.eval(x0)),
             Ref::of(sigma.eval(Word::generator(2, 1)) * big_sigma_inv),
             Ref::of(psi_k(4)),
             Ref::of(psi_k(3)),
             Ref::of(psi_k(2))},
            params.s * psi_k(1)));
    if (!(out.X * out.Y * out.X == out.Y * out.X * out.Y)) {
      throw VerificationFailure("X Y X = Y X Y fails");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reference matrices
  ////////////////////////////////////////////////////////////////////////

  GoldenTable golden_table_displayed() {
    using P     = LaurentPoly;
    P const l   = P::lambda();
    P const m   = P::mu();
    P const lm  = l * m;
    P const one = 1;
    GoldenTable out;
    out.entries.emplace_back(
        "Sigma^-1",
        Matrix<P>{{one - lm + lm * lm, -(l * m * m)}, {-(l * l * m), one + lm}});
    out.entries.emplace_back("psi(X0)",
                             Matrix<P>{{one, -m}, {l, one - lm}});
    out.entries.emplace_back("psi^2(X0)",
                             Matrix<P>{{one + lm, -m}, {l * l * m, one - lm}});
    out.entries.emplace_back(
        "psi^3(X0)",
        Matrix<P>{{one + lm - lm * lm, l * m * m},
                  {-(l * pow(one - lm, 2)), one - lm + lm * lm}});
    out.entries.emplace_back(
        "psi^4(X0)",
        Matrix<P>{{one - 2 * lm * lm, m * (one + 2 * lm)},
                  {l * (one + lm - 2 * lm * lm), one - lm + 2 * lm * lm}});
    return out;
  }

  GoldenTable golden_table_computed() {
    auto const  spec  = artin_odd_spec(1);
    auto const  p     = symbolic_params();
    auto const  sigma = sigma_free(2, p.lambda, p.mu, SigmaBasis::rank2_mixed, p.ring);
    auto const  x0    = Word::generator(2, 0);
    GoldenTable out;
    out.entries.emplace_back("Sigma^-1", sigma.eval(invert(spec.w0)));
    auto psi_k = Endomorphism::identity(2);
    for (int k = 1; k <= 4; ++k) {
      psi_k = compose(spec.phi, psi_k);
      out.entries.emplace_back(
          k == 1 ? std::string("psi(X0)") : "psi^" + std::to_string(k) + "(X0)",
          sigma.eval(psi_k.apply(x0)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  template <typename Scalar>
  RelationReport<Scalar> verify_defining_relations(
      Representation<Scalar> const&                         rep,
      std::vector<std::pair<LetterWord, LetterWord>> const& relations) {
    RelationReport<Scalar> report;
    for (auto const& [lhs, rhs] : relations) {
      RelationResult<Scalar> r;
      r.label      = rep.to_string(lhs) + " = " + rep.to_string(rhs);
      r.difference = first_difference(rep.eval(lhs), rep.eval(rhs));
      r.passed     = !r.difference.has_value();
      report.results.push_back(std::move(r));
    }
    return report;
  }

  template <typename Scalar>
  std::vector<std::pair<LetterWord, LetterWord>>
  hnn_relations(Representation<Scalar> const& rep) {
    if (!rep.spec()) {
      throw InvalidArgument("hnn_relations needs a representation with a spec");
    }
    auto const& spec = *rep.spec();
    auto const  t    = rep.index_of("t");
    std::vector<std::pair<LetterWord, LetterWord>> out;
    for (std::uint32_t i = 0; i < spec.rank; ++i) {
      auto const x = rep.index_of(x_name(i));
      out.emplace_back(
          LetterWord{Letter{t, true}, Letter{x, false}, Letter{t, false}},
          rep.letters(MixedWord(spec.phi.image(i))));
    }
    return out;
  }

  template <typename Scalar>
  std::vector<std::pair<LetterWord, LetterWord>>
  artin_relations(Representation<Scalar> const& rep, long m) {
    if (m < 1) {
      throw InvalidArgument("relation length must be positive");
    }
    auto const x = rep.index_of("x");
    auto const y = rep.index_of("y");
    LetterWord lhs, rhs;
    for (long k = 0; k < m; ++k) {
      lhs.push_back(Letter{k % 2 == 0 ? x : y, false});
      rhs.push_back(Letter{k % 2 == 0 ? y : x, false});
    }
    return {{lhs, rhs}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Faithfulness probe
  ////////////////////////////////////////////////////////////////////////

  void ProbeReport::merge(ProbeReport const& that) {
    max_length = std::max(max_length, that.max_length);
    words_checked += that.words_checked;
    identity_images += that.identity_images;
    trivial_normal_forms += that.trivial_normal_forms;
    counterexample_count += that.counterexample_count;
    for (auto const& c : that.counterexamples) {
      if (counterexamples.size() < 10) {
        counterexamples.push_back(c);
      }
    }
  }

  namespace {

    template <typename Scalar>
    class Prober {
     public:
      Prober(Representation<Scalar> const& rep, std::size_t max_length)
          : _rep(rep), _spec(*rep.spec()), _max(max_length) {
        _report.max_length = max_length;
        auto const g       = static_cast<std::uint32_t>(rep.generators().size());
        for (std::uint32_t k = 0; k < g; ++k) {
          _alphabet.push_back(Letter{k, false});
          _alphabet.push_back(Letter{k, true});
        }
      }

      std::vector<Letter> const& alphabet() const noexcept {
        return _alphabet;
      }

      void visit_empty() {
        check(Matrix<Scalar>::identity(_rep.degree()));
      }

      // All reduced words starting with `first`.
      void visit_from(Letter first) {
        _word.assign(1, first);
        descend(_rep.image(first));
      }

      ProbeReport const& report() const noexcept {
        return _report;
      }

     private:
      void check(Matrix<Scalar> const& m) {
        ++_report.words_checked;
        bool const identity = m.is_identity();
        bool const trivial
            = normal_form(_spec, _rep.expand(_word)).is_identity();
        _report.identity_images += identity ? 1 : 0;
        _report.trivial_normal_forms += trivial ? 1 : 0;
        if (identity != trivial) {
          ++_report.counterexample_count;
          if (_report.counterexamples.size() < 10) {
            _report.counterexamples.push_back(_rep.to_string(_word));
          }
        }
      }

      void descend(Matrix<Scalar> const& m) {
        check(m);
        if (_word.size() == _max) {
          return;
        }
        for (auto l : _alphabet) {
          if (l == _word.back().inverted()) {
            continue;
          }
          _word.push_back(l);
          descend(m * _rep.image(l));
          _word.pop_back();
        }
      }

      Representation<Scalar> const& _rep;
      HnnSpec const&                _spec;
      std::size_t                   _max;
      std::vector<Letter>           _alphabet;
      std::vector<Letter>           _word;
      ProbeReport                   _report;
    };

  }  // namespace

  template <typename Scalar>
  ProbeReport probe_faithfulness(Representation<Scalar> const& rep,
                                 std::size_t                   max_length,
                                 unsigned                      workers) {
    if (!rep.spec()) {
      throw InvalidArgument("probe_faithfulness needs a representation with a spec");
    }
    if (max_length < 1) {
      throw InvalidArgument("probe_faithfulness needs max length >= 1");
    }
    if (workers == 0) {
      workers = std::max(1u, std::thread::hardware_concurrency());
    }
    Prober<Scalar> root(rep, max_length);
    auto const     alphabet = root.alphabet();
    workers = std::min<unsigned>(workers, static_cast<unsigned>(alphabet.size()));

    // Worker w takes first letters w, w + workers, ..; merge is by sum.
    std::vector<ProbeReport> parts(workers);
    auto run = [&](unsigned w) {
      Prober<Scalar> p(rep, max_length);
      for (std::size_t k = w; k < alphabet.size(); k += workers) {
        p.visit_from(alphabet[k]);
      }
      parts[w] = p.report();
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back(run, w);
      }
      for (auto& th : threads) {
        th.join();
      }
    }
    root.visit_empty();
    ProbeReport out = root.report();
    for (auto const& part : parts) {
      out.merge(part);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Instantiations
  ////////////////////////////////////////////////////////////////////////

#define LINREP_INSTANTIATE_ANY(S)                                           \
  template class Representation<S>;                                        \
  template Representation<S> sigma_free<S>(                                \
      std::size_t, S const&, S const&, SigmaBasis, RingDescriptor const&); \
  template Representation<S> hnn_induced<S>(                              \
      HnnSpec const&, Representation<S> const&, S const&, S const&);       \
  template RelationReport<S> verify_defining_relations<S>(                 \
      Representation<S> const&,                                            \
      std::vector<std::pair<LetterWord, LetterWord>> const&);              \
  template std::vector<std::pair<LetterWord, LetterWord>>                  \
  hnn_relations<S>(Representation<S> const&);                              \
  template std::vector<std::pair<LetterWord, LetterWord>>                  \
  artin_relations<S>(Representation<S> const&, long);                      \
  template ProbeReport probe_faithfulness<S>(                              \
      Representation<S> const&, std::size_t, unsigned);

#define LINREP_INSTANTIATE_FIELDLIKE(S)                                     \
  template Representation<S> artin_hnn<S>(long, RingParams<S> const&);     \
  template Representation<S> artin_even<S>(long, RingParams<S> const&);    \
  template Representation<S> artin_odd<S>(long, RingParams<S> const&);     \
  template Representation<S> artin<S>(long, RingParams<S> const&);         \
  template B3Explicit<S>     b3_explicit<S>(RingParams<S> const&);

  LINREP_INSTANTIATE_ANY(LaurentPoly)
  LINREP_INSTANTIATE_ANY(QpScalar)
  LINREP_INSTANTIATE_ANY(BigInt)
  LINREP_INSTANTIATE_FIELDLIKE(LaurentPoly)
  LINREP_INSTANTIATE_FIELDLIKE(QpScalar)

#undef LINREP_INSTANTIATE_FIELDLIKE
#undef LINREP_INSTANTIATE_ANY

}  // namespace linrep
