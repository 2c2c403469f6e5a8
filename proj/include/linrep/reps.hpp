// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Builders for the explicit representations:
//
//   * sigma(lambda, mu) of a free group, x_0 -> [[1,0],[lambda,1]] and
//     x_i -> V^-i x_0 V^i with V = [[1,mu],[0,1]] (or the rank-2 basis
//     X_0 = [[1,0],[lambda,1]], X_1 = [[1,mu],[0,1]]);
//   * the coset-induced representation of F_phi(X) over the cosets
//     {1, t, .., t^{n-1}} of <F(X), t^n>, with t^n -> s f^sigma;
//   * the A(2n) and A(2n+1) representations on the canonical generators;
//   * the 12 x 12 B_3 matrices and the integer SL_{4n}(Z) variant.
//
// Every builder re-checks the identities its output must satisfy and throws
// VerificationFailure when one does not hold.

#ifndef LINREP_REPS_HPP_
#define LINREP_REPS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linrep/matrix.hpp"
#include "linrep/ring.hpp"
#include "linrep/words.hpp"

namespace linrep {

  enum class RingKind { laurent, qp, integer, rational };

  struct RingDescriptor {
    RingKind      kind  = RingKind::laurent;
    unsigned long prime = 0;

    bool operator==(RingDescriptor const&) const = default;
  };

  std::string to_string(RingKind kind);

  //! A letter of a representation's alphabet: generator index and sign.
  struct Letter {
    std::uint32_t gen     = 0;
    bool          inverse = false;

    Letter inverted() const noexcept {
      return Letter{gen, !inverse};
    }
    bool operator==(Letter const&) const = default;
  };

  template <typename Scalar>
  struct GeneratorImage {
    std::string    name;
    Matrix<Scalar> image;
    Matrix<Scalar> inverse;
  };

  template <typename Scalar>
  class Representation {
   public:
    Representation() = default;
    //! Checks image * inverse = identity (both orders) for every generator.
    Representation(std::string                          group,
                   RingDescriptor                       ring,
                   std::vector<GeneratorImage<Scalar>> generators);

    std::string const& group() const noexcept {
      return _group;
    }
    RingDescriptor const& ring() const noexcept {
      return _ring;
    }
    std::size_t degree() const noexcept {
      return _degree;
    }
    std::vector<GeneratorImage<Scalar>> const& generators() const noexcept {
      return _generators;
    }
    GeneratorImage<Scalar> const& generator(std::string_view name) const;
    //! Throws InvalidArgument for an unknown generator.
    std::uint32_t index_of(std::string_view name) const;

    //! Ties the representation to F_phi(X): generator k stands for
    //! generator_words[k] in the spec's alphabet.
    void attach_spec(HnnSpec spec, std::vector<MixedWord> generator_words);
    std::optional<HnnSpec> const& spec() const noexcept {
      return _spec;
    }
    std::vector<MixedWord> const& generator_words() const noexcept {
      return _generator_words;
    }

    Matrix<Scalar> image(Letter l) const {
      auto const& g = _generators.at(l.gen);
      return l.inverse ? g.inverse : g.image;
    }

    Matrix<Scalar> eval(std::span<Letter const> word) const;
    //! Symbols x_i and t are looked up by the generator names "x<i>", "t".
    Matrix<Scalar> eval(MixedWord const& w) const;
    Matrix<Scalar> eval(Word const& w) const {
      return eval(MixedWord(w));
    }

    std::vector<Letter> letters(MixedWord const& w) const;
    //! Words over the generator names: term := name ('^' signed-int)?.
    std::vector<Letter> parse(std::string_view text) const;
    std::string         to_string(std::span<Letter const> word) const;
    //! The spec-level word a letter word stands for.
    MixedWord expand(std::span<Letter const> word) const;

   private:
    std::string                         _group;
    RingDescriptor                      _ring;
    std::size_t                         _degree = 0;
    std::vector<GeneratorImage<Scalar>> _generators;
    std::optional<HnnSpec>              _spec;
    std::vector<MixedWord>              _generator_words;
  };

  //! The scalars a construction needs; s must be a unit with inverse s_inv.
  template <typename Scalar>
  struct RingParams {
    Scalar         lambda;
    Scalar         mu;
    Scalar         s;
    Scalar         s_inv;
    RingDescriptor ring;
  };

  //! lambda, mu, s kept formal in Z[lambda, mu, s^{+-1}].
  RingParams<LaurentPoly> symbolic_params();
  //! lambda0, mu0 and s = p in Q_p. Throws InvalidArgument unless p is prime.
  RingParams<QpScalar> qp_params(long lambda0, long mu0, unsigned long p);

  enum class SigmaBasis { conjugated, rank2_mixed };

  //! sigma(lambda, mu) on x_0..x_{rank-1}. rank2_mixed requires rank 2.
  template <typename Scalar>
  Representation<Scalar> sigma_free(std::size_t           rank,
                                    Scalar const&         lambda,
                                    Scalar const&         mu,
                                    SigmaBasis            basis,
                                    RingDescriptor const& ring);

  //! The basis used for A(m): rank2_mixed for A(3), conjugated otherwise.
  SigmaBasis default_sigma_basis(HnnSpec const& spec);

  //! t -> companion(E, .., E | s f^sigma), x -> diag(sigma(phi^-j(x)))
  //! j = 0..n-1, f = w0^-1. Verifies t^-1 x_i t = phi(x_i) on the images.
  template <typename Scalar>
  Representation<Scalar> hnn_induced(HnnSpec const&                spec,
                                     Representation<Scalar> const& sigma,
                                     Scalar const&                 s,
                                     Scalar const&                 s_inv);

  //! hnn_induced on artin_spec(m) with the default sigma basis.
  template <typename Scalar>
  Representation<Scalar> artin_hnn(long m, RingParams<Scalar> const& params);

  //! A(2n), n >= 2, on x, y: the induced representation conjugated by
  //! u = diag(E, A, .., A^{n-1}), A = [[1,-mu],[0,1]].
  template <typename Scalar>
  Representation<Scalar> artin_even(long n, RingParams<Scalar> const& params);

  //! A(2n+1), n >= 1, on x = t, y = x_0 t; degree 4(2n+1).
  template <typename Scalar>
  Representation<Scalar> artin_odd(long n, RingParams<Scalar> const& params);

  template <typename Scalar>
  Representation<Scalar> artin(long m, RingParams<Scalar> const& params);

  //! Integer variant: base blocks diag(T(s), f^sigma) for t^n and
  //! diag(E_2, x^sigma) for x, T(s) = [[1,s],[0,1]], induced to degree 4n.
  Representation<BigInt> integer_hnn(HnnSpec const&                spec,
                                     Representation<BigInt> const& sigma,
                                     BigInt const&                 s);

  //! integer_hnn on artin_spec(m) restricted to the canonical x, y.
  Representation<BigInt>
  artin_integer(long m, long lambda0, long mu0, BigInt const& s);

  //! The 12 x 12 matrices X = U^-1 T U and Y = U^-1 D T U for B_3 = A(3),
  //! U = diag(E, E, Sigma^-1, Sigma^-1, Sigma^-1, Sigma^-1).
  template <typename Scalar>
  struct B3Explicit {
    Matrix<Scalar> X;
    Matrix<Scalar> Y;
    Matrix<Scalar> T;
    Matrix<Scalar> D;
    Matrix<Scalar> U;
  };

  template <typename Scalar>
  B3Explicit<Scalar> b3_explicit(RingParams<Scalar> const& params);

  //! Sigma^-1, psi(X0), .., psi^4(X0) for the rank-2 basis.
  struct GoldenTable {
    std::vector<std::pair<std::string, Matrix<LaurentPoly>>> entries;
  };

  //! The matrices as printed in the reference displays.
  GoldenTable golden_table_displayed();
  //! The same matrices computed as sigma images of the words Sigma^-1 and
  //! psi^k(x_0).
  GoldenTable golden_table_computed();

  template <typename Scalar>
  struct RelationResult {
    std::string                            label;
    bool                                   passed = false;
    std::optional<EntryDifference<Scalar>> difference;
  };

  template <typename Scalar>
  struct RelationReport {
    std::vector<RelationResult<Scalar>> results;

    bool all_passed() const {
      for (auto const& r : results) {
        if (!r.passed) {
          return false;
        }
      }
      return true;
    }
  };

  using LetterWord = std::vector<Letter>;

  template <typename Scalar>
  RelationReport<Scalar> verify_defining_relations(
      Representation<Scalar> const&                       rep,
      std::vector<std::pair<LetterWord, LetterWord>> const& relations);

  //! t^-1 x_i t = phi(x_i) for each base generator of an induced rep.
  template <typename Scalar>
  std::vector<std::pair<LetterWord, LetterWord>>
  hnn_relations(Representation<Scalar> const& rep);

  //! w_m(x, y) = w_m(y, x) on a rep with generators x, y.
  template <typename Scalar>
  std::vector<std::pair<LetterWord, LetterWord>>
  artin_relations(Representation<Scalar> const& rep, long m);

  struct ProbeReport {
    std::size_t              max_length            = 0;
    std::size_t              words_checked         = 0;
    std::size_t              identity_images       = 0;
    std::size_t              trivial_normal_forms  = 0;
    std::size_t              counterexample_count  = 0;
    std::vector<std::string> counterexamples;  // first few, for display

    void merge(ProbeReport const& that);
  };

  //! Every freely reduced word w over the rep's generators with |w| <=
  //! max_length: eval(w) = I iff the normal form of w is trivial.
  template <typename Scalar>
  ProbeReport probe_faithfulness(Representation<Scalar> const& rep,
                                 std::size_t                   max_length,
                                 unsigned                      workers = 0);

}  // namespace linrep

#endif  // LINREP_REPS_HPP_
