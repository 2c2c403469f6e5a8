#include "doctest.h"
#include "linrep/errors.hpp"
#include "linrep/reps.hpp"

using namespace linrep;

namespace {

  using P  = LaurentPoly;
  using PM = Matrix<LaurentPoly>;

  P const l   = P::lambda();
  P const mu  = P::mu();
  P const one = 1;

  Representation<P> sigma_sym(std::size_t rank, SigmaBasis basis) {
    auto p = symbolic_params();
    return sigma_free(rank, p.lambda, p.mu, basis, p.ring);
  }

}  // namespace

TEST_CASE("sigma generators") {
  auto s = sigma_sym(3, SigmaBasis::conjugated);
  CHECK(s.degree() == 2);
  CHECK(s.generator("x0").image == PM{{1, 0}, {l, 1}});
  // V^-1 X0 V by hand.
  CHECK(s.generator("x1").image == PM{{one - l * mu, -(l * mu * mu)}, {l, one + l * mu}});
  auto mixed = sigma_sym(2, SigmaBasis::rank2_mixed);
  CHECK(mixed.generator("x1").image == PM{{1, mu}, {0, 1}});
  CHECK_THROWS_AS(sigma_sym(3, SigmaBasis::rank2_mixed), InvalidArgument);
  CHECK_THROWS_AS(sigma_sym(0, SigmaBasis::conjugated), InvalidArgument);
}

TEST_CASE("evaluation of words") {
  auto s = sigma_sym(2, SigmaBasis::rank2_mixed);
  CHECK(s.eval(Word(2)).is_identity());
  CHECK(s.eval(Word::parse(2, "x0 x0^-1")).is_identity());
  CHECK(s.eval(Word::parse(2, "x0 x1^-1")) == PM{{1, -mu}, {l, one - l * mu}});
  auto sigma_word = artin_odd_sigma(1);
  CHECK((s.eval(sigma_word) * golden_table_displayed().entries[0].second).is_identity());
  auto u = Word::parse(2, "x0 x1^2");
  auto v = Word::parse(2, "x1^-1 x0^-3");
  CHECK(s.eval(u * v) == s.eval(u) * s.eval(v));
  CHECK_THROWS_AS(s.eval(MixedWord::parse(2, "t")), InvalidArgument);
  CHECK(s.to_string(s.parse("x0 x1^-2")) == "x0 x1^-1 x1^-1");
  CHECK_THROWS_AS(s.parse("y"), ParseError);
}

TEST_CASE("representations check their inverses") {
  GeneratorImage<P> bad{"a", PM{{1, 1}, {0, 1}}, PM{{1, 1}, {0, 1}}};
  CHECK_THROWS_AS(Representation<P>("bad", {}, {bad}), InvalidArgument);
}

TEST_CASE("coset-induced representation of A(4)") {
  auto tau = artin_hnn(4, symbolic_params());
  CHECK(tau.degree() == 4);
  CHECK(tau.generators().size() == 3);
  CHECK(verify_defining_relations(tau, hnn_relations(tau)).all_passed());
  CHECK(tau.generator("x0").image.block(0, 0, 2) == PM{{1, 0}, {l, 1}});
  auto const& spec = *tau.spec();
  auto        z    = MixedWord::stable(spec.rank, spec.power) * MixedWord(spec.w0);
  CHECK(tau.eval(z) == PM::scalar(4, P::s()));
}

TEST_CASE("induced representations for several Artin specs") {
  for (long m = 3; m <= 8; ++m) {
    auto        tau  = artin_hnn(m, symbolic_params());
    auto const& spec = *tau.spec();
    CHECK(tau.degree() == 2 * spec.power);
    CHECK(verify_defining_relations(tau, hnn_relations(tau)).all_passed());
    auto z = center_generator(spec);
    CHECK(tau.eval(z) == PM::scalar(tau.degree(), P::s()));
  }
}

TEST_CASE("A(4) on the canonical generators") {
  auto rho = artin_even(2, symbolic_params());
  CHECK(rho.degree() == 4);
  auto x0 = PM{{1, 0}, {l, 1}};
  CHECK(rho.generator("x").image == block_diag<P>({x0, x0}));
  auto b = P::s() * (PM{{1, 0}, {-l, 1}} * PM{{one - l * mu, mu}, {-l, 1}});
  CHECK(rho.generator("y").image.block(1, 0, 2) == b);
  CHECK(rho.generator("y").image.block(0, 1, 2) == PM{{1, -mu}, {0, 1}});
  CHECK(verify_defining_relations(rho, artin_relations(rho, 4)).all_passed());
  auto x = rho.index_of("x");
  auto y = rho.index_of("y");
  auto rel = verify_defining_relations(
      rho, {{LetterWord{{x, false}, {y, false}}, LetterWord{{y, false}, {x, false}}},
            {LetterWord{{x, false}}, LetterWord{{x, false}}}});
  REQUIRE(rel.results.size() == 2);
  CHECK_FALSE(rel.results[0].passed);
  REQUIRE(rel.results[0].difference.has_value());
  CHECK_FALSE(rel.results[0].difference->lhs == rel.results[0].difference->rhs);
  CHECK(rel.results[1].passed);
}

TEST_CASE("A(2n) relations, n = 2..4") {
  for (long n = 2; n <= 4; ++n) {
    auto rho = artin_even(n, symbolic_params());
    CHECK(rho.degree() == static_cast<std::size_t>(2 * n));
    CHECK(verify_defining_relations(rho, artin_relations(rho, 2 * n)).all_passed());
  }
}

TEST_CASE("A(3) and A(5)") {
  auto b3 = artin_odd(1, symbolic_params());
  CHECK(b3.degree() == 12);
  CHECK(verify_defining_relations(b3, artin_relations(b3, 3)).all_passed());
  auto a5 = artin_odd(2, qp_params(2, 2, 5));
  CHECK(a5.degree() == 20);
  CHECK(verify_defining_relations(a5, artin_relations(a5, 5)).all_passed());
}

TEST_CASE("explicit B3 matrices") {
  auto b = b3_explicit(symbolic_params());
  CHECK(b.X.degree() == 12);
  auto sigma_inv = golden_table_displayed().entries[0].second;
  CHECK(b.X.block(1, 2, 2) == sigma_inv);
  CHECK(b.Y.block(5, 0, 2) == P::s() * PM{{1, -mu}, {l, one - l * mu}});
  CHECK(b.X * b.Y * b.X == b.Y * b.X * b.Y);
}

TEST_CASE("reference matrices") {
  auto shown    = golden_table_displayed();
  auto computed = golden_table_computed();
  REQUIRE(shown.entries.size() == 5);
  REQUIRE(computed.entries.size() == 5);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(shown.entries[k].first == computed.entries[k].first);
    CHECK(shown.entries[k].second == computed.entries[k].second);
  }
  // Independent symbolic expansion of psi^4(X0); sigma lands in SL_2.
  auto const& psi4 = computed.entries[4].second;
  CHECK(determinant2(psi4) == one);
  CHECK(psi4(0, 0) == one - 2 * l * l * mu * mu);
  CHECK(psi4(1, 0) == -l + 2 * l * l * mu - 2 * l * l * l * mu * mu);
  // The displayed psi^4(X0) differs only at (2,1) and is not unimodular.
  auto const& shown4 = shown.entries[4].second;
  auto        diff   = first_difference(psi4, shown4);
  REQUIRE(diff.has_value());
  CHECK(diff->row == 1);
  CHECK(diff->col == 0);
  CHECK(shown4(0, 0) == psi4(0, 0));
  CHECK(shown4(0, 1) == psi4(0, 1));
  CHECK(shown4(1, 1) == psi4(1, 1));
  CHECK_FALSE(determinant2(shown4) == one);
}

TEST_CASE("integer representation of B3") {
  auto rho = artin_integer(3, 2, 2, BigInt(1));
  CHECK(rho.degree() == 24);
  CHECK(verify_defining_relations(rho, artin_relations(rho, 3)).all_passed());
  CHECK(determinant_bareiss(rho.generator("x").image) == 1);
  CHECK(determinant_bareiss(rho.generator("y").image) == 1);
  auto spec  = artin_spec(3);
  auto sigma = sigma_free<BigInt>(2, BigInt(2), BigInt(2), SigmaBasis::rank2_mixed,
                                  RingDescriptor{RingKind::integer, 0});
  CHECK_THROWS_AS(integer_hnn(spec, sigma, BigInt(0)), InvalidArgument);
}

TEST_CASE("specialization commutes with construction") {
  for (long m : {3L, 4L, 5L}) {
    auto sym = artin(m, symbolic_params());
    auto qp  = artin(m, qp_params(2, 2, 5));
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(specialize(sym.generators()[k].image, 2, 2, 5) == qp.generators()[k].image);
      CHECK(specialize(sym.generators()[k].inverse, 2, 2, 5)
            == qp.generators()[k].inverse);
    }
  }
}

TEST_CASE("faithfulness probe") {
  auto tau    = artin_hnn(4, qp_params(2, 2, 5));
  auto report = probe_faithfulness(tau, 4, 2);
  CHECK(report.counterexample_count == 0);
  // 1 + 6 + 6*5 + 6*25 + 6*125 reduced words over 3 generators.
  CHECK(report.words_checked == 1 + 6 + 30 + 150 + 750);
  CHECK(report.identity_images == report.trivial_normal_forms);
  CHECK(report.identity_images >= 1);

  // A non-faithful stand-in: sigma with lambda = mu = 0 sends x0 to I.
  auto spec  = artin_spec(4);
  auto zero  = QpScalar::make(BigInt(0), 0, 5);
  auto sigma = sigma_free(2, zero, zero, SigmaBasis::conjugated,
                          RingDescriptor{RingKind::qp, 5});
  auto p     = qp_params(0, 0, 5);
  auto bad   = hnn_induced(spec, sigma, p.s, p.s_inv);
  auto r2    = probe_faithfulness(bad, 2, 1);
  CHECK(r2.counterexample_count > 0);
  CHECK_FALSE(r2.counterexamples.empty());
}
