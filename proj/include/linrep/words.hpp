// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Free-group words, automorphisms of free groups and the HNN-extension
//
//     F_phi(X) = < X, t || t^-1 x t = phi(x), x in X >
//
// for a virtually inner automorphism phi (phi^n is conjugation by w0). Every
// element of F_phi(X) has a unique form t^l f with f a reduced word, which is
// what all equality tests in this library go through.

#ifndef LINREP_WORDS_HPP_
#define LINREP_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace linrep {

  //! One letter: a base generator x_i or the stable letter t, with a sign.
  struct Symbol {
    static constexpr std::uint32_t kStable
        = std::numeric_limits<std::uint32_t>::max();

    std::uint32_t gen     = 0;
    bool          inverse = false;

    static constexpr Symbol base(std::uint32_t i, bool inv = false) noexcept {
      return Symbol{i, inv};
    }
    static constexpr Symbol stable(bool inv = false) noexcept {
      return Symbol{kStable, inv};
    }

    constexpr bool is_stable() const noexcept {
      return gen == kStable;
    }
    constexpr Symbol inverted() const noexcept {
      return Symbol{gen, !inverse};
    }
    constexpr int sign() const noexcept {
      return inverse ? -1 : 1;
    }
    constexpr bool cancels(Symbol other) const noexcept {
      return gen == other.gen && inverse != other.inverse;
    }

    auto operator<=>(Symbol const&) const = default;
  };

  std::string to_string(Symbol s);

  //! Cancel adjacent inverse pairs until none remain.
  std::vector<Symbol> free_reduce(std::vector<Symbol> const& letters);

  //! A freely reduced word in the base generators x_0, ..., x_{rank-1}.
  class Word {
   public:
    Word() = default;
    explicit Word(std::size_t rank) : _rank(rank) {}
    // Validates every symbol against rank and reduces.
    Word(std::size_t rank, std::vector<Symbol> const& letters);

    static Word generator(std::size_t rank, std::uint32_t i, bool inv = false);
    // Grammar: term*, term := 'x' digits ('^' signed-int)?
    static Word parse(std::size_t rank, std::string_view text);

    std::size_t rank() const noexcept {
      return _rank;
    }
    std::vector<Symbol> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    bool operator==(Word const& that) const noexcept {
      return _letters == that._letters;
    }
    auto operator<=>(Word const& that) const noexcept {
      return _letters <=> that._letters;
    }

    std::string to_string() const;

   private:
    std::size_t         _rank = 0;
    std::vector<Symbol> _letters;
  };

  // word_arith
  Word concat(Word const& u, Word const& v);
  Word invert(Word const& u);
  Word power(Word const& u, long k);
  inline Word operator*(Word const& u, Word const& v) {
    return concat(u, v);
  }

  //! A word in the base generators and t; stored exactly as written.
  class MixedWord {
   public:
    MixedWord() = default;
    explicit MixedWord(std::size_t rank) : _rank(rank) {}
    MixedWord(std::size_t rank, std::vector<Symbol> symbols);
    // Base words embed directly.
    explicit MixedWord(Word const& w);

    static MixedWord stable(std::size_t rank, long exponent = 1);
    static MixedWord generator(std::size_t rank, std::uint32_t i, long e = 1);

    // Grammar: term*, term := gen ('^' signed-int)?, gen := 'x' digits | 't'.
    // Optional aliases expand a bare token (e.g. the Artin generators "x",
    // "y") into a fixed mixed word.
    static MixedWord
    parse(std::size_t                             rank,
          std::string_view                        text,
          std::map<std::string, MixedWord> const* aliases = nullptr);

    std::size_t rank() const noexcept {
      return _rank;
    }
    std::vector<Symbol> const& symbols() const noexcept {
      return _symbols;
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }
    bool empty() const noexcept {
      return _symbols.empty();
    }

    MixedWord inverse() const;
    MixedWord pow(long k) const;

    bool operator==(MixedWord const&) const = default;

    std::string to_string() const;

   private:
    std::size_t         _rank = 0;
    std::vector<Symbol> _symbols;
  };

  MixedWord operator*(MixedWord const& u, MixedWord const& v);

  //! Free-group endomorphism given by the images of the generators, with
  //! optional inverse images (which make it an automorphism).
  class Endomorphism {
   public:
    Endomorphism() = default;
    Endomorphism(std::size_t                      rank,
                 std::vector<Word>                images,
                 std::optional<std::vector<Word>> inverse_images = {});

    static Endomorphism identity(std::size_t rank);

    // phi(x_i) = x_{i-1} for i >= 1 and phi(x_0) = image_of_x0, where
    // x_{rank-1} occurs exactly once in image_of_x0. The inverse images are
    // solved from the resulting triangular system.
    static Endomorphism shift(std::size_t rank, Word const& image_of_x0);

    std::size_t rank() const noexcept {
      return _rank;
    }
    std::vector<Word> const& images() const noexcept {
      return _images;
    }
    Word const& image(std::size_t i) const {
      return _images.at(i);
    }
    bool has_inverse() const noexcept {
      return _inverse.has_value();
    }
    std::vector<Word> const& inverse_images() const;

    // Throws InvalidArgument without inverse images.
    Endomorphism inverse() const;

    Word apply(Word const& w) const;

    // Substitution check of the inverse images in both orders.
    bool inverse_is_consistent() const;

    bool operator==(Endomorphism const& that) const noexcept {
      return _rank == that._rank && _images == that._images;
    }

   private:
    std::size_t                      _rank = 0;
    std::vector<Word>                _images;
    std::optional<std::vector<Word>> _inverse;
  };

  inline Word apply(Endomorphism const& e, Word const& w) {
    return e.apply(w);
  }

  //! x -> outer(inner(x)). Inverse images are composed when both have them.
  Endomorphism compose(Endomorphism const& outer, Endomorphism const& inner);

  //! e^k; k < 0 needs inverse images, k = 0 is the identity.
  Endomorphism endo_power(Endomorphism const& e, long k);

  //! Inner automorphism x -> g x g^-1.
  Endomorphism inner(Word const& g);

  //! The data (r, phi, n, w0) of F_phi(X) with phi^n(x) = w0 x w0^-1.
  struct HnnSpec {
    std::size_t  rank = 0;
    Endomorphism phi;
    std::size_t  power = 1;
    Word         w0;
    std::string  name;

    //! f with phi^n(x) = f^-1 x f, i.e. w0^-1.
    Word conjugator() const {
      return invert(w0);
    }

    //! Checks phi^n(x_i) = w0 x_i w0^-1 on every generator and that phi is
    //! invertible. Throws VerificationFailure.
    void validate() const;
  };

  //! A(2n) = F_phi(x_0..x_{n-1}), phi(x_0) = x_0..x_{n-1} x_{n-2}^-1..x_0^-1.
  HnnSpec artin_even_spec(long n);
  //! A(2n+1) = F_psi(x_0..x_{2n-1}), psi(x_0) = x_0 x_2 .. x_{2n-2}
  //! x_{2n-1}^-1 .. x_3^-1 x_1^-1.
  HnnSpec artin_odd_spec(long n);
  //! Dispatch on the Artin parameter m >= 3.
  HnnSpec artin_spec(long m);

  //! Sigma = x_0 x_2 .. x_{2n-2} (x_0 x_1 .. x_{2n-1})^-1 x_1 x_3 .. x_{2n-1}.
  Word artin_odd_sigma(long n);

  //! Closed form for psi^-i(x_0), 1 <= i <= 4n+1:
  //! x_i for i < 2n, and Sigma^-1 psi^{4n+2-i}(x_0) Sigma otherwise.
  Word psi_inverse_power_x0(long n, long i);

  struct NormalForm {
    long l = 0;
    Word f;

    bool operator==(NormalForm const&) const = default;
    bool is_identity() const noexcept {
      return l == 0 && f.empty();
    }
    std::string to_string() const;
  };

  NormalForm normal_form(HnnSpec const& spec, MixedWord const& w);

  //! t^{l1} f1 . t^{l2} f2 = t^{l1+l2} phi^{l2}(f1) f2.
  NormalForm multiply(HnnSpec const&    spec,
                      NormalForm const& a,
                      NormalForm const& b);

  bool equal(HnnSpec const& spec, MixedWord const& u, MixedWord const& v);

  //! t^n w0, verified to commute with every x_i and t.
  MixedWord center_generator(HnnSpec const& spec);

  //! w_m(u, v): (uv)^{m/2} for even m, (uv)^{(m-1)/2} u for odd m.
  MixedWord alternating_word(long m, MixedWord const& u, MixedWord const& v);

  struct ArtinCanonical {
    long      m = 0;
    MixedWord x;
    MixedWord y;
    MixedWord lhs;  // w_m(x, y)
    MixedWord rhs;  // w_m(y, x)
  };

  //! The canonical generators x, y of A(m) inside the matching HnnSpec:
  //! x = x_0, y = t for even m; x = t, y = x_0 t for odd m.
  ArtinCanonical artin_canonical(long m);

  struct HolomorphReport {
    bool holds = false;
    //! Composition applied left to right: first phi^-1, then g^, then phi.
    bool left_to_right = false;
    //! Function composition phi^-1 o g^ o phi (phi applied first).
    bool right_to_left = false;

    std::string convention() const;
  };

  //! Compares phi^-1 g^ phi with (phi(g))^ on every generator, where g^ is
  //! w -> g w g^-1, under both composition orders.
  HolomorphReport holomorph_conjugation_check(Endomorphism const& phi,
                                              Word const&         g);
  //! Same check with a caller-supplied map standing in for g^.
  HolomorphReport holomorph_conjugation_check(Endomorphism const& phi,
                                              Word const&         g,
                                              Endomorphism const& g_hat);

}  // namespace linrep

#endif  // LINREP_WORDS_HPP_
