#include <random>

#include "doctest.h"
#include "linrep/errors.hpp"
#include "linrep/splittable.hpp"

using namespace linrep;

namespace {

  QMatrix q2(long a, long b, long c, long d) {
    return QMatrix(2, {Rational(a), Rational(b), Rational(c), Rational(d)});
  }

  MatrixGroupGens sl2() {
    return MatrixGroupGens::from_matrices(2, {"a", "b"}, {q2(1, 1, 0, 1), q2(1, 0, 1, 1)});
  }

  MatrixGroupGens trivial_phi() {
    return MatrixGroupGens(1, {});
  }

  // Kronecker product gamma (x) I_n, the action of gamma on row-major vec(y)
  // under left multiplication.
  QMatrix kron_identity(QMatrix const& g) {
    auto const n = g.degree();
    QMatrix    out(n * n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t q = 0; q < n; ++q) {
          out(p * n + q, k * n + q) = g(p, k);
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("coordinate ids and words") {
  CHECK(CoordId::parse("Phi(2,3)") == CoordId{CoordId::Kind::phi, 2, 3});
  CHECK(CoordId::parse("G(1,4)").to_string() == "G(1,4)");
  CHECK_THROWS_AS(CoordId::parse("G(0,1)"), ParseError);
  CHECK_THROWS_AS(CoordId::parse("H(1,1)"), ParseError);
  SemidirectGroup grp(trivial_phi(), sl2(), TauOracle::trivial(2));
  auto w = grp.parse("a^2 b^-1 b a^-1");
  CHECK(grp.to_string(w) == "a");
  CHECK(grp.to_string({}) == "1");
  CHECK_THROWS_AS(grp.parse("c"), ParseError);
  // 4 letters: 1 + 4 + 12 reduced words up to length 2.
  CHECK(grp.words_up_to(2).size() == 17);
}

TEST_CASE("trivial Phi gives the left regular action on matrix entries") {
  auto rep = build_rep(trivial_phi(), sl2(), TauOracle::trivial(2));
  CHECK(rep.degree() == 4);
  CHECK(rep.coordinates().size() == 4);
  // C maps basis values to coordinate values: T = C b.
  auto const d = rep.degree();
  QMatrix    c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      c(i, k) = rep.expansions()[i][k];
    }
  }
  auto c_inv = inverse_rational(c);
  REQUIRE(c_inv.has_value());
  for (std::uint32_t gen = 0; gen < 2; ++gen) {
    auto const& g = rep.group().g_gens()[gen];
    CHECK(c * rep.action(Letter{gen, false}) * *c_inv == kron_identity(g.matrix));
    CHECK(c * rep.action(Letter{gen, true}) * *c_inv == kron_identity(g.inverse));
  }
  CHECK(verify_rep(rep, 4).passed());
}

TEST_CASE("trivial G gives dimension 1") {
  auto rep = build_rep(trivial_phi(), MatrixGroupGens(2, {}), TauOracle::trivial(2));
  CHECK(rep.degree() == 1);
  CHECK(rep.sample_size() == 1);
  auto report = verify_rep(rep, 3);
  CHECK(report.passed());
  CHECK(report.words_checked == 1);
}

TEST_CASE("infinite cyclic G") {
  auto g   = MatrixGroupGens::from_matrices(2, {"c"}, {q2(2, 0, 0, 1)});
  auto rep = build_rep(trivial_phi(), g, TauOracle::trivial(2));
  // y_11 = 2^k and y_22 = 1 span everything; off-diagonal entries vanish.
  CHECK(rep.degree() == 2);
  CHECK(verify_rep(rep, 6).passed());
}

TEST_CASE("H coordinates") {
  SemidirectGroup grp(trivial_phi(), sl2(), TauOracle::trivial(2));
  auto            e = grp.element(grp.parse("b^2"));
  // With trivial Phi: H_{p k1 k2 q} = delta_{p k1} g_{k2 q}.
  CHECK(h_eval(1, 1, 2, 1, e, grp.tau()) == 2);
  CHECK(h_eval(1, 2, 2, 1, e, grp.tau()) == 0);
  CHECK(h_eval(2, 2, 1, 1, e, grp.tau()) == 1);
  CHECK_THROWS_AS(h_eval(0, 1, 1, 1, e, grp.tau()), InvalidArgument);

  auto g   = sl2();
  auto inn = inner_automorphism_gens(g);
  TauOracle tau(2, {{g[0].matrix, g[0].inverse}, {g[1].matrix, g[1].inverse}});
  SemidirectGroup full(inn, g, tau);
  auto            x = full.element(full.parse("inn(a) b"));
  Rational        expect = 0;
  auto const      t      = tau.eval(x.phi_word);
  for (std::size_t k3 = 0; k3 < 2; ++k3) {
    expect += t.g_inv(0, 1) * t.g(1, k3) * x.g(k3, 0);
  }
  CHECK(h_eval(1, 2, 2, 1, x, tau) == expect);
}

TEST_CASE("semidirect multiplication is associative") {
  auto g   = sl2();
  auto inn = inner_automorphism_gens(g);
  TauOracle       tau(2, {{g[0].matrix, g[0].inverse}, {g[1].matrix, g[1].inverse}});
  SemidirectGroup grp(inn, g, tau);
  std::mt19937    rng(5);
  std::uniform_int_distribution<std::uint32_t> pick(0, 7);
  auto random_element = [&]() {
    LetterWord w;
    for (int k = 0; k < 4; ++k) {
      auto r = pick(rng);
      w.push_back(Letter{r / 2, r % 2 == 1});
    }
    return grp.element(w);
  };
  for (int k = 0; k < 100; ++k) {
    auto a   = random_element();
    auto b   = random_element();
    auto c   = random_element();
    auto lhs = semidirect_mul(semidirect_mul(a, b, tau), c, tau);
    auto rhs = semidirect_mul(a, semidirect_mul(b, c, tau), tau);
    CHECK(lhs.phi == rhs.phi);
    CHECK(lhs.g == rhs.g);
    // The cached product agrees with the oracle product.
    auto cached = grp.multiply(a, b);
    auto fresh  = semidirect_mul(a, b, tau);
    CHECK(cached.g == fresh.g);
    CHECK(cached.tau == fresh.tau);
  }
}

TEST_CASE("Int(G) x| G for SL_2(Z)") {
  auto rep = int_g_rep(sl2());
  CHECK(rep.group().m() == 4);
  CHECK(rep.degree() <= 32);
  CHECK(rep.degree() <= rep.bound());
  REQUIRE(rep.contract().has_value());
  CHECK(rep.contract()->passed());
  CHECK(rep.contract()->words_checked > 0);
  auto report = verify_rep(rep, 3, 100, 7);
  CHECK(report.passed());
  CHECK(report.identity_actions >= 1);
  CHECK(report.failures.empty());
}

TEST_CASE("a corrupted tau is rejected") {
  auto g   = sl2();
  auto inn = inner_automorphism_gens(g);
  // tau(inn(w)) = w^-1 conjugates the wrong way.
  TauOracle bad(2, {{g[0].inverse, g[0].matrix}, {g[1].inverse, g[1].matrix}});
  SplittableOptions options;
  options.action = matrix_space_action(2);
  CHECK_THROWS_AS(build_rep(inn, g, bad, options), VerificationFailure);
  SemidirectGroup grp(inn, g, bad);
  auto            report = check_tau_contract(grp, *options.action, 2);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.first_violation.empty());
}

TEST_CASE("conjugation matrix realises w^-1 M w") {
  auto w     = q2(2, 1, 1, 1);
  auto w_inv = *inverse_rational(w);
  auto p     = conjugation_matrix(w, w_inv);
  auto m     = q2(3, -1, 4, 7);
  CHECK(matrix_space_action(2)(p, m) == w_inv * m * w);
  CHECK_THROWS_AS(matrix_space_action(3)(p, m), InvalidArgument);
  CHECK_THROWS_AS(MatrixGroupGens::from_matrices(2, {"z"}, {q2(1, 1, 1, 1)}),
                  InvalidArgument);
}
