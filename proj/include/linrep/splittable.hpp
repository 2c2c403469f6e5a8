// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Representations of semidirect products Phi x| G from splittable
// coordinates. Phi <= GL_m(Q) and G <= GL_n(Q) are given by generators; a
// tau oracle supplies for every Phi-word phi a matrix g_phi in GL_n(Q) with
//
//     phi^-1 g phi = g_phi^-1 g g_phi     for g in G.
//
// Elements are pairs (phi, g) with
//
//     (phi1, g1)(phi2, g2) = (phi1 phi2, g_phi2^-1 g1 g_phi2 g2),
//
// and the coordinate functions T1_ij(phi, g) = phi_ij, T2_pq(phi, g) = g_pq
// span, together with all their shifts f^x(y) = f(x y), a space of
// dimension at most m^2 + n^4 on which the group acts linearly. The span is
// computed by orbit closure with exact rational elimination on a finite
// sample of elements and re-checked on a disjoint sample.

#ifndef LINREP_SPLITTABLE_HPP_
#define LINREP_SPLITTABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linrep/matrix.hpp"
#include "linrep/reps.hpp"
#include "linrep/ring.hpp"

namespace linrep {

  using QMatrix = Matrix<Rational>;

  struct GroupGenerator {
    std::string name;
    QMatrix     matrix;
    QMatrix     inverse;
  };

  //! Generators of a matrix group; each pair multiplies to the identity.
  class MatrixGroupGens {
   public:
    MatrixGroupGens() = default;
    //! An empty generator list describes the trivial subgroup of GL_degree.
    MatrixGroupGens(std::size_t degree, std::vector<GroupGenerator> gens);

    //! Inverses computed by elimination; throws InvalidArgument when a
    //! matrix is singular.
    static MatrixGroupGens from_matrices(std::size_t              degree,
                                         std::vector<std::string> names,
                                         std::vector<QMatrix>     matrices);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t size() const noexcept {
      return _gens.size();
    }
    bool empty() const noexcept {
      return _gens.empty();
    }
    std::vector<GroupGenerator> const& generators() const noexcept {
      return _gens;
    }
    GroupGenerator const& operator[](std::size_t i) const {
      return _gens.at(i);
    }

   private:
    std::size_t                 _degree = 0;
    std::vector<GroupGenerator> _gens;
  };

  struct TauValue {
    QMatrix g;
    QMatrix g_inv;
  };

  //! tau on Phi-words, multiplicative from its values on the generators:
  //! tau(uv) = tau(u) tau(v).
  class TauOracle {
   public:
    TauOracle() = default;
    TauOracle(std::size_t n, std::vector<TauValue> generator_values);
    static TauOracle trivial(std::size_t n);

    std::size_t degree() const noexcept {
      return _n;
    }
    std::vector<TauValue> const& generator_values() const noexcept {
      return _values;
    }
    //! Letters index the Phi generators.
    TauValue eval(std::span<Letter const> phi_word) const;

   private:
    std::size_t           _n = 0;
    std::vector<TauValue> _values;
  };

  //! The action phi^-1 g phi that tau must reproduce, as a function of the
  //! m x m matrix of phi.
  using DesignatedAction
      = std::function<QMatrix(QMatrix const& phi, QMatrix const& g)>;

  //! For m = n^2: g -> unvec(vec(g) . phi), vec row-major, row vectors.
  DesignatedAction matrix_space_action(std::size_t n);

  //! The m = n^2 matrix of M -> w^-1 M w in that convention:
  //! P[(i,j),(a,b)] = (w^-1)_{ai} w_{jb}.
  QMatrix conjugation_matrix(QMatrix const& w, QMatrix const& w_inv);

  struct SemidirectElement {
    LetterWord word;      // over the Phi x| G alphabet
    LetterWord phi_word;  // over the Phi generators
    QMatrix    phi;
    QMatrix    g;
    QMatrix    tau;  // tau(phi_word)
    QMatrix    tau_inv;

    bool is_identity() const {
      return phi.is_identity() && g.is_identity();
    }
  };

  //! (phi1, g1)(phi2, g2) with tau(phi2) taken from the oracle.
  SemidirectElement semidirect_mul(SemidirectElement const& a,
                                   SemidirectElement const& b,
                                   TauOracle const&         tau);

  //! H_{p k1 k2 q}(phi, g) = sum_k3 (g_phi^-1)_{p k1} (g_phi)_{k2 k3} g_{k3 q};
  //! indices are 1-based as in the formula.
  Rational h_eval(std::size_t              p,
                  std::size_t              k1,
                  std::size_t              k2,
                  std::size_t              q,
                  SemidirectElement const& e,
                  TauOracle const&         tau);

  //! Phi x| G presented by the Phi generators followed by the G generators.
  class SemidirectGroup {
   public:
    SemidirectGroup() = default;
    SemidirectGroup(MatrixGroupGens phi, MatrixGroupGens g, TauOracle tau);

    MatrixGroupGens const& phi_gens() const noexcept {
      return _phi;
    }
    MatrixGroupGens const& g_gens() const noexcept {
      return _g;
    }
    TauOracle const& tau() const noexcept {
      return _tau;
    }
    std::size_t m() const noexcept {
      return _phi.degree();
    }
    std::size_t n() const noexcept {
      return _g.degree();
    }
    std::size_t generator_count() const noexcept {
      return _phi.size() + _g.size();
    }
    std::string const& name(std::uint32_t gen) const;
    std::uint32_t      index_of(std::string_view name) const;

    SemidirectElement identity() const;
    SemidirectElement letter(Letter l) const;
    //! Uses the cached tau of b.
    SemidirectElement multiply(SemidirectElement const& a,
                               SemidirectElement const& b) const;
    SemidirectElement element(std::span<Letter const> word) const;

    //! Freely reduced words over the alphabet, in length-lexicographic order.
    std::vector<LetterWord> words_of_length(std::size_t length) const;
    std::vector<LetterWord> words_up_to(std::size_t max_length) const;

    std::string to_string(std::span<Letter const> word) const;
    LetterWord  parse(std::string_view text) const;

   private:
    MatrixGroupGens          _phi;
    MatrixGroupGens          _g;
    TauOracle                _tau;
    std::vector<std::string> _names;
    std::vector<TauValue>    _letter_tau;  // per Phi letter, sign-major
  };

  struct CoordId {
    enum class Kind { phi, g };
    Kind        kind = Kind::g;
    std::size_t i    = 1;  // 1-based
    std::size_t j    = 1;

    bool        operator==(CoordId const&) const = default;
    std::string to_string() const;  // "Phi(i,j)" or "G(p,q)"
    static CoordId parse(std::string_view text);
  };

  //! The coordinate of a element product x y, computed without forming it.
  Rational coordinate_of_product(CoordId const&           c,
                                 SemidirectElement const& x,
                                 SemidirectElement const& y);

  struct ShiftedCoordinate {
    CoordId           coord;
    SemidirectElement shift;
  };

  struct TauContractReport {
    std::size_t words_checked = 0;
    std::size_t violations    = 0;
    std::string first_violation;

    bool passed() const noexcept {
      return violations == 0;
    }
  };

  //! tau(u)^-1 g tau(u) = action(phi(u), g) for every Phi-word u with
  //! |u| <= max_length and every G generator g.
  TauContractReport check_tau_contract(SemidirectGroup const&  group,
                                       DesignatedAction const& action,
                                       std::size_t             max_length);

  struct SplittableOptions {
    std::size_t sample_length = 4;
    //! Cap on the fresh sample (words of length sample_length + 1).
    std::size_t fresh_limit = 2000;
    //! Phi-word length for the tau contract check.
    std::size_t contract_length = 3;
    //! When set, the tau contract is checked before the closure and a
    //! violation throws VerificationFailure.
    std::optional<DesignatedAction> action;
  };

  class SplittableRep {
   public:
    SemidirectGroup const& group() const noexcept {
      return _group;
    }
    std::size_t degree() const noexcept {
      return _basis.size();
    }
    std::size_t bound() const noexcept {
      return _group.m() * _group.m()
             + _group.n() * _group.n() * _group.n() * _group.n();
    }
    std::vector<ShiftedCoordinate> const& basis() const noexcept {
      return _basis;
    }
    //! Action on the basis functions: b(gamma y) = A_gamma b(y).
    QMatrix const& action(Letter l) const;
    QMatrix        action(std::span<Letter const> word) const;

    //! The coordinates in use (T1 only when Phi has generators) and their
    //! expansions T = sum_k a_k b_k.
    std::vector<CoordId> const& coordinates() const noexcept {
      return _coords;
    }
    std::vector<std::vector<Rational>> const& expansions() const noexcept {
      return _expansions;
    }
    //! b_k(e).
    std::vector<Rational> const& identity_values() const noexcept {
      return _identity_values;
    }
    std::size_t sample_size() const noexcept {
      return _sample_size;
    }
    std::size_t fresh_size() const noexcept {
      return _fresh_size;
    }
    std::optional<TauContractReport> const& contract() const noexcept {
      return _contract;
    }

    //! Basis function k at element y.
    Rational basis_value(std::size_t k, SemidirectElement const& y) const;
    //! Coordinates at the element reached by word, read off its action.
    std::vector<Rational> recover_coordinates(QMatrix const& action) const;

   private:
    friend SplittableRep build_rep(MatrixGroupGens const&,
                                   MatrixGroupGens const&,
                                   TauOracle const&,
                                   SplittableOptions const&);

    SemidirectGroup                    _group;
    std::vector<ShiftedCoordinate>     _basis;
    std::vector<QMatrix>               _actions;  // per letter, sign-major
    std::vector<CoordId>               _coords;
    std::vector<std::vector<Rational>> _expansions;
    std::vector<Rational>              _identity_values;
    std::size_t                        _sample_size = 0;
    std::size_t                        _fresh_size  = 0;
    std::optional<TauContractReport>   _contract;
  };

  //! Throws VerificationFailure when the basis exceeds m^2 + n^4, the tau
  //! contract fails, an action is singular, or an expansion fails on the
  //! fresh sample.
  SplittableRep build_rep(MatrixGroupGens const&   phi,
                          MatrixGroupGens const&   g,
                          TauOracle const&         tau,
                          SplittableOptions const& options = {});

  //! Phi = Int(G) acting on n x n matrices (m = n^2), tau(inn(w)) = w.
  SplittableRep int_g_rep(MatrixGroupGens const& g,
                          SplittableOptions      options = {});

  //! The Phi generators used by int_g_rep: inn(w) for every G generator w.
  MatrixGroupGens inner_automorphism_gens(MatrixGroupGens const& g);

  struct SplittableVerifyReport {
    std::size_t              max_length             = 0;
    std::size_t              pairs_checked          = 0;
    std::size_t              homomorphism_failures  = 0;
    std::size_t              words_checked          = 0;
    std::size_t              identity_actions       = 0;
    std::size_t              injectivity_failures   = 0;
    std::size_t              recovery_failures      = 0;
    std::vector<std::string> failures;  // first few, for display

    bool passed() const noexcept {
      return homomorphism_failures == 0 && injectivity_failures == 0
             && recovery_failures == 0;
    }
  };

  //! (a) For random pairs u, v with |u|, |v| <= max_length:
  //!     b(uv y) = A_u A_v b(y) at y = e and at every generator.
  //! (b) For every reduced w with |w| <= max_length: the coordinates read
  //!     off A_w equal those of w, so A_w = I forces w = e.
  SplittableVerifyReport verify_rep(SplittableRep const& rep,
                                    std::size_t          max_length,
                                    std::size_t          pairs = 100,
                                    std::uint32_t        seed  = 1);

}  // namespace linrep

#endif  // LINREP_SPLITTABLE_HPP_
