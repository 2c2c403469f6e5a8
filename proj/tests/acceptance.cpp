// Acceptance gate: one PASS/FAIL line per criterion, with pinned time limits.
// Every check is exact; the exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "linrep/errors.hpp"
#include "linrep/reps.hpp"
#include "linrep/splittable.hpp"
#include "linrep/suites.hpp"
#include "linrep/words.hpp"

using namespace linrep;

namespace {

  struct Outcome {
    bool        passed = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && passed) {
        passed = false;
        detail = what;
      } else if (!ok) {
        passed = false;
      }
    }
  };

  struct Criterion {
    int                      id;
    std::string              title;
    double                   limit_seconds;
    std::function<Outcome()> run;
  };

  using P = LaurentPoly;

  // ------------------------------------------------------------------ 1
  Outcome golden_matrices() {
    Outcome    out;
    auto const shown    = golden_table_displayed();
    auto const computed = golden_table_computed();
    out.require(shown.entries.size() == 5 && computed.entries.size() == 5,
                "table must list five matrices");
    for (std::size_t k = 0; k < shown.entries.size(); ++k) {
      auto d = first_difference(computed.entries[k].second, shown.entries[k].second);
      if (d) {
        out.require(false, shown.entries[k].first + " entry (" + std::to_string(d->row + 1)
                               + "," + std::to_string(d->col + 1) + "): computed "
                               + d->lhs.to_string() + ", displayed "
                               + d->rhs.to_string());
      }
    }
    return out;
  }

  // ------------------------------------------------------------------ 2
  Outcome defining_relations() {
    Outcome    out;
    auto const params = symbolic_params();
    for (long n = 2; n <= 5; ++n) {
      auto rep = artin_even(n, params);
      out.require(verify_defining_relations(rep, artin_relations(rep, 2 * n)).all_passed(),
                  "A(" + std::to_string(2 * n) + ") relation");
    }
    for (long n = 1; n <= 3; ++n) {
      auto rep = artin_odd(n, params);
      out.require(
          verify_defining_relations(rep, artin_relations(rep, 2 * n + 1)).all_passed(),
          "A(" + std::to_string(2 * n + 1) + ") relation");
    }
    for (long m : {4L, 6L, 8L, 10L, 3L, 5L, 7L}) {
      auto rep = artin_hnn(m, params);
      out.require(verify_defining_relations(rep, hnn_relations(rep)).all_passed(),
                  "t^-1 x_i t = phi(x_i) for A(" + std::to_string(m) + ")");
    }
    return out;
  }

  // ------------------------------------------------------------------ 3
  Outcome degrees() {
    Outcome    out;
    auto const params = symbolic_params();
    for (long n = 2; n <= 5; ++n) {
      out.require(artin_even(n, params).degree() == static_cast<std::size_t>(2 * n),
                  "A(2n) degree 2n at n = " + std::to_string(n));
    }
    for (long n = 1; n <= 3; ++n) {
      out.require(artin_odd(n, params).degree() == static_cast<std::size_t>(4 * (2 * n + 1)),
                  "A(2n+1) degree 4(2n+1) at n = " + std::to_string(n));
    }
    out.require(artin_odd(1, params).degree() == 12, "A(3) degree 12");
    auto z = artin_integer(3, 2, 2, BigInt(1));
    out.require(z.degree() == 24, "integer B3 degree 24");
    for (auto const& g : z.generators()) {
      out.require(determinant_bareiss(g.image) == 1, "det " + g.name + " = 1");
      out.require(determinant_bareiss(g.inverse) == 1, "det " + g.name + "^-1 = 1");
    }
    return out;
  }

  // ------------------------------------------------------------------ 4
  template <typename Scalar>
  void central(Outcome& out, long m, RingParams<Scalar> const& params) {
    auto const  hnn  = artin_hnn(m, params);
    auto const& spec = *hnn.spec();
    auto const  z    = hnn.eval(center_generator(spec));
    out.require(z == Matrix<Scalar>::scalar(z.degree(), params.s),
                "t^n w0 = s I for A(" + std::to_string(m) + ")");
    auto const rep  = artin(m, params);
    auto const word = canonical_center_word(m);
    auto const c    = rep.eval(rep.parse(word));
    for (auto const& g : rep.generators()) {
      out.require(c * g.image == g.image * c,
                  word + " commutes with " + g.name + " in A(" + std::to_string(m) + ")");
    }
  }

  Outcome central_element() {
    Outcome out;
    for (long m = 3; m <= 8; ++m) {
      central(out, m, symbolic_params());
      central(out, m, qp_params(2, 2, 5));
    }
    return out;
  }

  // ------------------------------------------------------------------ 5
  Outcome faithfulness_probe() {
    Outcome out;
    for (long m : {3L, 4L}) {
      auto const rep    = artin_hnn(m, qp_params(2, 2, 5));
      auto const report = probe_faithfulness(rep, 6);
      // 2r + 2 letters: 1 + L (1 + (L-1) + .. + (L-1)^5) reduced words.
      std::size_t const letters = 2 * (rep.generators().size());
      std::size_t       expect = 1, layer = letters;
      for (int k = 1; k <= 6; ++k) {
        expect += layer;
        layer *= letters - 1;
      }
      out.require(report.words_checked == expect,
                  "A(" + std::to_string(m) + ") enumerated " + std::to_string(report.words_checked)
                      + " words, expected " + std::to_string(expect));
      out.require(report.counterexample_count == 0,
                  "A(" + std::to_string(m) + ") has "
                      + std::to_string(report.counterexample_count) + " counterexamples");
      out.require(report.identity_images == report.trivial_normal_forms,
                  "identity images and trivial normal forms differ");
    }
    return out;
  }

  // ------------------------------------------------------------------ 6
  MixedWord random_mixed(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t>   len(0, max_len);
    std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank));
    std::bernoulli_distribution                  inv(0.5);
    std::vector<Symbol>                          letters;
    auto const                                   n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      auto g = gen(rng);
      letters.push_back(g == rank ? Symbol::stable(inv(rng)) : Symbol::base(g, inv(rng)));
    }
    return MixedWord(rank, letters);
  }

  Outcome normal_form_oracle() {
    Outcome      out;
    std::mt19937 rng(2024);
    for (long m = 3; m <= 10; ++m) {
      auto const spec = artin_spec(m);
      for (int k = 0; k < 10000; ++k) {
        auto u = random_mixed(rng, spec.rank, 8);
        auto v = random_mixed(rng, spec.rank, 8);
        out.require(normal_form(spec, u * v)
                        == multiply(spec, normal_form(spec, u), normal_form(spec, v)),
                    "NF(uv) != NF(u) NF(v) for " + u.to_string() + " | " + v.to_string());
      }
    }
    for (long m = 3; m <= 10; ++m) {
      auto const spec  = artin_spec(m);
      auto const canon = artin_canonical(m);
      out.require(normal_form(spec, canon.lhs) == normal_form(spec, canon.rhs),
                  "canonical relation of A(" + std::to_string(m) + ")");
    }
    return out;
  }

  // ------------------------------------------------------------------ 7
  QMatrix q2(long a, long b, long c, long d) {
    return QMatrix(2, {Rational(a), Rational(b), Rational(c), Rational(d)});
  }

  Outcome splittable_engine() {
    Outcome    out;
    auto const g = MatrixGroupGens::from_matrices(2, {"a", "b"},
                                                  {q2(1, 0, 2, 1), q2(1, 2, 0, 1)});

    auto const trivial = build_rep(MatrixGroupGens(1, {}), g, TauOracle::trivial(2));
    out.require(trivial.degree() == 4,
                "trivial Phi dimension " + std::to_string(trivial.degree()) + ", expected 4");
    auto const tv = verify_rep(trivial, 4);
    out.require(tv.passed(), "trivial Phi verification failed");

    auto const inner = int_g_rep(g);
    out.require(inner.degree() <= 32 && inner.degree() <= inner.bound(),
                "Int(G) G dimension " + std::to_string(inner.degree()) + " exceeds 32");
    auto const iv = verify_rep(inner, 3, 100);
    out.require(iv.pairs_checked == 100 && iv.passed(), "Int(G) G verification failed");

    // tau sends inn(w) to w^-1: conjugation in the wrong direction.
    TauOracle bad(2, {{g[0].inverse, g[0].matrix}, {g[1].inverse, g[1].matrix}});
    SplittableOptions options;
    options.action = matrix_space_action(2);
    bool rejected  = false;
    try {
      build_rep(inner_automorphism_gens(g), g, bad, options);
    } catch (VerificationFailure const&) {
      rejected = true;
    }
    out.require(rejected, "corrupted tau was accepted");
    return out;
  }

  // ------------------------------------------------------------------ 8
  // Independent fraction arithmetic over mpz with explicit gcd reduction.
  struct Frac {
    BigInt num = 0;
    BigInt den = 1;

    static Frac make(BigInt n, BigInt d) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      if (sgn(d) < 0) {
        g = -g;
      }
      if (sgn(g) != 0) {
        n /= g;
        d /= g;
      }
      return Frac{n, d};
    }
    Frac operator+(Frac const& o) const {
      return make(num * o.den + o.num * den, den * o.den);
    }
    Frac operator*(Frac const& o) const {
      return make(num * o.num, den * o.den);
    }
    bool operator==(Frac const& o) const {
      return num == o.num && den == o.den;
    }
  };

  Frac frac_of(QpScalar const& x) {
    BigInt d = 1;
    for (unsigned k = 0; k < x.k(); ++k) {
      d *= static_cast<unsigned long>(x.prime());
    }
    return Frac::make(x.numerator(), d);
  }

  // Evaluates a poly at (lambda0, mu0, p) with Frac arithmetic.
  Frac frac_eval(P const& poly, long l0, long m0, unsigned long p) {
    Frac acc;
    for (auto const& [mono, c] : poly.terms()) {
      Frac term{c, 1};
      for (int i = 0; i < mono.a; ++i) {
        term = term * Frac{l0, 1};
      }
      for (int i = 0; i < mono.b; ++i) {
        term = term * Frac{m0, 1};
      }
      for (int i = 0; i < (mono.c < 0 ? -mono.c : mono.c); ++i) {
        term = term * (mono.c < 0 ? Frac::make(1, p) : Frac{BigInt(p), 1});
      }
      acc = acc + term;
    }
    return acc;
  }

  P random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 8), ab(0, 5), c(-5, 5), coef(-9, 9);
    std::vector<P::Term>               terms;
    for (int k = count(rng); k > 0; --k) {
      terms.emplace_back(Monomial{ab(rng), ab(rng), c(rng)}, BigInt(coef(rng)));
    }
    return P::from_terms(std::move(terms));
  }

  Outcome ring_suite() {
    Outcome      out;
    std::mt19937 rng(8);
    for (int k = 0; k < 1000; ++k) {
      auto a = random_poly(rng);
      auto b = random_poly(rng);
      auto c = random_poly(rng);
      out.require((a + b) + c == a + (b + c), "addition is not associative");
      out.require((a * b) * c == a * (b * c), "multiplication is not associative");
      out.require(a * b == b * a && a + b == b + a, "not commutative");
      out.require(a * (b + c) == a * b + a * c, "not distributive");
      out.require(a * P(1) == a && a + P(0) == a && (a - a).terms().empty(),
                  "identities fail");
      out.require(specialize(a * b, 2, 2, 5) == specialize(a, 2, 2, 5) * specialize(b, 2, 2, 5),
                  "specialize is not multiplicative");
      out.require(specialize(a + b, 2, 2, 5) == specialize(a, 2, 2, 5) + specialize(b, 2, 2, 5),
                  "specialize is not additive");
      out.require(frac_of(specialize(a, 3, -2, 7)) == frac_eval(a, 3, -2, 7),
                  "specialize disagrees with direct evaluation");
    }
    std::uniform_int_distribution<long>     num(-1000, 1000);
    std::uniform_int_distribution<unsigned> pk(0, 6);
    for (int k = 0; k < 1000; ++k) {
      auto x  = QpScalar::make(BigInt(num(rng)), pk(rng), 3);
      auto y  = QpScalar::make(BigInt(num(rng)), pk(rng), 3);
      auto fx = frac_of(x);
      auto fy = frac_of(y);
      out.require(frac_of(x + y) == fx + fy, "Q_p sum disagrees with fractions");
      out.require(frac_of(x * y) == fx * fy, "Q_p product disagrees with fractions");
      out.require(frac_of(-x) == Frac::make(-fx.num, fx.den), "Q_p negation disagrees");
    }
    return out;
  }

  // ------------------------------------------------------------------ 9
  Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t>   len(0, max_len);
    std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank - 1));
    std::bernoulli_distribution                  inv(0.5);
    std::vector<Symbol>                          letters;
    for (auto n = len(rng); n > 0; --n) {
      letters.push_back(Symbol::base(gen(rng), inv(rng)));
    }
    return Word(rank, letters);
  }

  Outcome holomorph_identity() {
    Outcome    out;
    auto const psi  = artin_odd_spec(1).phi;
    auto const phi4 = artin_even_spec(2).phi;
    // The convention is the composition order that holds for every pair; a
    // pair may satisfy both orders (g = 1, say) without deciding anything.
    bool l2r_all = true;
    bool r2l_all = true;
    auto note    = [&](HolomorphReport const& r, std::string const& what) {
      out.require(r.holds, what + " fails");
      l2r_all = l2r_all && r.left_to_right;
      r2l_all = r2l_all && r.right_to_left;
    };
    note(holomorph_conjugation_check(psi, Word::parse(2, "x0 x1^-1")), "psi");
    std::vector<Endomorphism> built{psi, psi.inverse(), phi4, phi4.inverse()};
    std::mt19937               rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, built.size() - 1), depth(1, 4);
    for (int k = 0; k < 20; ++k) {
      auto phi = built[pick(rng)];
      for (auto d = depth(rng); d > 1; --d) {
        phi = compose(built[pick(rng)], phi);
      }
      auto g = random_word(rng, 2, 6);
      note(holomorph_conjugation_check(phi, g), "pair " + std::to_string(k));
    }
    out.require(l2r_all && !r2l_all, std::string("no single convention: left-to-right ")
                                         + (l2r_all ? "held" : "failed")
                                         + ", right-to-left "
                                         + (r2l_all ? "held" : "failed"));
    return out;
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "reference matrices Sigma^-1, psi^k(X0) match the displays", 1, golden_matrices},
      {2, "defining relations of A(2n), A(2n+1) and the HNN relations", 30,
       defining_relations},
      {3, "degrees 2n, 4(2n+1), 24 with determinant 1", 30, degrees},
      {4, "t^n w0 = s I and central words commute", 30, central_element},
      {5, "faithfulness probe A(3), A(4) to length 6", 120, faithfulness_probe},
      {6, "normal form multiplicativity and canonical relations", 10, normal_form_oracle},
      {7, "splittable engine dimensions, verification, corrupted tau", 300,
       splittable_engine},
      {8, "ring axioms, specialization, Q_p against fractions", 5, ring_suite},
      {9, "holomorph identity with a consistent convention", 5, holomorph_identity},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    outcome;
    try {
      outcome = c.run();
    } catch (std::exception const& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      outcome.require(false, "over the time limit");
    }
    failed += outcome.passed ? 0 : 1;
    std::printf("criterion %d: %s  %s  (%.2f s, limit %.0f s)%s%s\n",
                c.id,
                outcome.passed ? "PASS" : "FAIL",
                c.title.c_str(),
                secs,
                c.limit_seconds,
                outcome.detail.empty() ? "" : "  -- ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
