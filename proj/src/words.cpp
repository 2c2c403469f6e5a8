// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "linrep/errors.hpp"

namespace linrep {

  namespace {

    void push_reduced(std::vector<Symbol>& out, Symbol s) {
      if (!out.empty() && out.back().cancels(s)) {
        out.pop_back();
      } else {
        out.push_back(s);
      }
    }

    void check_symbol(std::size_t rank, Symbol s, bool allow_stable) {
      if (s.is_stable()) {
        if (!allow_stable) {
          throw InvalidArgument("the stable letter t is not a base generator");
        }
      } else if (s.gen >= rank) {
        throw InvalidArgument("generator x" + std::to_string(s.gen)
                              + " is out of range for rank "
                              + std::to_string(rank));
      }
    }

    long parse_exponent(std::string_view text, std::string_view token) {
      long value = 0;
      auto first = text.data();
      auto last  = text.data() + text.size();
      if (first != last && *first == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || first == last) {
        throw ParseError("bad exponent in term '" + std::string(token) + "'");
      }
      return value;
    }

    std::vector<Symbol> repeat(std::vector<Symbol> const& base, long k) {
      std::vector<Symbol> out;
      if (k == 0) {
        return out;
      }
      std::vector<Symbol> unit = base;
      if (k < 0) {
        std::reverse(unit.begin(), unit.end());
        for (auto& s : unit) {
          s = s.inverted();
        }
        k = -k;
      }
      out.reserve(unit.size() * static_cast<std::size_t>(k));
      for (long j = 0; j < k; ++j) {
        out.insert(out.end(), unit.begin(), unit.end());
      }
      return out;
    }

    std::vector<Symbol>
    tokenize(std::size_t                             rank,
             std::string_view                        text,
             bool                                    allow_stable,
             std::map<std::string, MixedWord> const* aliases) {
      std::vector<Symbol> out;
      std::size_t         pos = 0;
      while (pos < text.size()) {
        while (pos < text.size()
               && std::isspace(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        if (pos == text.size()) {
          break;
        }
        std::size_t end = pos;
        while (end < text.size()
               && !std::isspace(static_cast<unsigned char>(text[end]))) {
          ++end;
        }
        std::string_view token = text.substr(pos, end - pos);
        pos                    = end;

        auto             caret = token.find('^');
        std::string_view gen   = token.substr(0, caret);
        long             e     = 1;
        if (caret != std::string_view::npos) {
          e = parse_exponent(token.substr(caret + 1), token);
        }

        std::vector<Symbol> unit;
        if (aliases != nullptr) {
          auto it = aliases->find(std::string(gen));
          if (it != aliases->end()) {
            unit = it->second.symbols();
          }
        }
        if (unit.empty()) {
          if (gen == "t") {
            if (!allow_stable) {
              throw ParseError("the stable letter t is not allowed here");
            }
            unit.push_back(Symbol::stable());
          } else if (gen.size() >= 2 && gen[0] == 'x') {
            std::uint32_t i      = 0;
            auto          digits = gen.substr(1);
            auto [ptr, ec]       = std::from_chars(
                digits.data(), digits.data() + digits.size(), i);
            if (ec != std::errc() || ptr != digits.data() + digits.size()) {
              throw ParseError("bad generator '" + std::string(gen) + "'");
            }
            if (i >= rank) {
              throw ParseError("generator '" + std::string(gen)
                               + "' is out of range for rank "
                               + std::to_string(rank));
            }
            unit.push_back(Symbol::base(i));
          } else {
            throw ParseError("unknown generator '" + std::string(gen) + "'");
          }
        }
        auto expanded = repeat(unit, e);
        out.insert(out.end(), expanded.begin(), expanded.end());
      }
      return out;
    }

    std::string join(std::vector<Symbol> const& letters) {
      if (letters.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += to_string(letters[i]);
      }
      return out;
    }

  }  // namespace

  std::string to_string(Symbol s) {
    std::string out = s.is_stable() ? "t" : "x" + std::to_string(s.gen);
    if (s.inverse) {
      out += "^-1";
    }
    return out;
  }

  std::vector<Symbol> free_reduce(std::vector<Symbol> const& letters) {
    std::vector<Symbol> out;
    out.reserve(letters.size());
    for (auto s : letters) {
      push_reduced(out, s);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::size_t rank, std::vector<Symbol> const& letters)
      : _rank(rank) {
    for (auto s : letters) {
      check_symbol(rank, s, false);
    }
    _letters = free_reduce(letters);
  }

  Word Word::generator(std::size_t rank, std::uint32_t i, bool inv) {
    return Word(rank, {Symbol::base(i, inv)});
  }

  Word Word::parse(std::size_t rank, std::string_view text) {
    return Word(rank, tokenize(rank, text, false, nullptr));
  }

  std::string Word::to_string() const {
    return join(_letters);
  }

  Word concat(Word const& u, Word const& v) {
    if (u.rank() != v.rank()) {
      throw InvalidArgument("rank mismatch: " + std::to_string(u.rank())
                            + " vs " + std::to_string(v.rank()));
    }
    std::vector<Symbol> out = u.letters();
    for (auto s : v.letters()) {
      push_reduced(out, s);
    }
    return Word(u.rank(), out);
  }

  Word invert(Word const& u) {
    std::vector<Symbol> out(u.letters().rbegin(), u.letters().rend());
    for (auto& s : out) {
      s = s.inverted();
    }
    return Word(u.rank(), out);
  }

  Word power(Word const& u, long k) {
    return Word(u.rank(), repeat(u.letters(), k));
  }

  ////////////////////////////////////////////////////////////////////////
  // MixedWord
  ////////////////////////////////////////////////////////////////////////

  MixedWord::MixedWord(std::size_t rank, std::vector<Symbol> symbols)
      : _rank(rank), _symbols(std::move(symbols)) {
    for (auto s : _symbols) {
      check_symbol(rank, s, true);
    }
  }

  MixedWord::MixedWord(Word const& w) : _rank(w.rank()), _symbols(w.letters()) {}

  MixedWord MixedWord::stable(std::size_t rank, long exponent) {
    return MixedWord(rank, repeat({Symbol::stable()}, exponent));
  }

  MixedWord MixedWord::generator(std::size_t rank, std::uint32_t i, long e) {
    return MixedWord(rank, repeat({Symbol::base(i)}, e));
  }

  MixedWord MixedWord::parse(std::size_t                             rank,
                             std::string_view                        text,
                             std::map<std::string, MixedWord> const* aliases) {
    return MixedWord(rank, tokenize(rank, text, true, aliases));
  }

  MixedWord MixedWord::inverse() const {
    return MixedWord(_rank, repeat(_symbols, -1));
  }

  MixedWord MixedWord::pow(long k) const {
    return MixedWord(_rank, repeat(_symbols, k));
  }

  std::string MixedWord::to_string() const {
    return join(_symbols);
  }

  MixedWord operator*(MixedWord const& u, MixedWord const& v) {
    if (u.rank() != v.rank()) {
      throw InvalidArgument("rank mismatch in mixed word product");
    }
    std::vector<Symbol> out = u.symbols();
    out.insert(out.end(), v.symbols().begin(), v.symbols().end());
    return MixedWord(u.rank(), std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphism
  ////////////////////////////////////////////////////////////////////////

  Endomorphism::Endomorphism(std::size_t                      rank,
                             std::vector<Word>                images,
                             std::optional<std::vector<Word>> inverse_images)
      : _rank(rank), _images(std::move(images)), _inverse(std::move(inverse_images)) {
    if (rank == 0) {
      throw InvalidArgument("an endomorphism needs positive rank");
    }
    auto check = [rank](std::vector<Word> const& ws) {
      if (ws.size() != rank) {
        throw InvalidArgument("expected " + std::to_string(rank)
                              + " generator images, found "
                              + std::to_string(ws.size()));
      }
      for (auto const& w : ws) {
        if (w.rank() != rank) {
          throw InvalidArgument("rank mismatch in generator image");
        }
      }
    };
    check(_images);
    if (_inverse) {
      check(*_inverse);
    }
  }

  Endomorphism Endomorphism::identity(std::size_t rank) {
    std::vector<Word> gens;
    for (std::uint32_t i = 0; i < rank; ++i) {
      gens.push_back(Word::generator(rank, i));
    }
    return Endomorphism(rank, gens, gens);
  }

  Endomorphism Endomorphism::shift(std::size_t rank, Word const& image_of_x0) {
    if (image_of_x0.rank() != rank) {
      throw InvalidArgument("rank mismatch in image of x0");
    }
    auto const  top = static_cast<std::uint32_t>(rank - 1);
    auto const& ls  = image_of_x0.letters();
    auto        occ = std::count_if(
        ls.begin(), ls.end(), [top](Symbol s) { return s.gen == top; });
    if (occ != 1) {
      throw InvalidArgument("x" + std::to_string(top)
                            + " must occur exactly once in the image of x0");
    }

    std::vector<Word> images;
    images.push_back(image_of_x0);
    for (std::uint32_t i = 1; i < rank; ++i) {
      images.push_back(Word::generator(rank, i - 1));
    }

    // phi^-1(x_j) = x_{j+1} for j < rank - 1; x_{rank-1} is solved from
    // x_0 = phi^-1(P) phi^-1(x_{rank-1})^e phi^-1(S) where image_of_x0 = P
    // x_{rank-1}^e S.
    auto shift_up = [rank](std::vector<Symbol> part) {
      for (auto& s : part) {
        s.gen += 1;
      }
      return Word(rank, part);
    };
    auto it = std::find_if(
        ls.begin(), ls.end(), [top](Symbol s) { return s.gen == top; });
    Word prefix = shift_up({ls.begin(), it});
    Word suffix = shift_up({it + 1, ls.end()});
    Word solved
        = invert(prefix) * Word::generator(rank, 0) * invert(suffix);
    if (it->inverse) {
      solved = invert(solved);
    }

    std::vector<Word> inverses;
    for (std::uint32_t j = 0; j + 1 < rank; ++j) {
      inverses.push_back(Word::generator(rank, j + 1));
    }
    inverses.push_back(solved);

    Endomorphism result(rank, std::move(images), std::move(inverses));
    if (!result.inverse_is_consistent()) {
      throw VerificationFailure("solved inverse images do not invert the map");
    }
    return result;
  }

  std::vector<Word> const& Endomorphism::inverse_images() const {
    if (!_inverse) {
      throw InvalidArgument("endomorphism has no inverse images");
    }
    return *_inverse;
  }

  Endomorphism Endomorphism::inverse() const {
    return Endomorphism(_rank, inverse_images(), _images);
  }

  Word Endomorphism::apply(Word const& w) const {
    if (w.rank() > _rank) {
      throw InvalidArgument("rank mismatch: word of rank "
                            + std::to_string(w.rank())
                            + " under an endomorphism of rank "
                            + std::to_string(_rank));
    }
    std::vector<Symbol> out;
    for (auto s : w.letters()) {
      auto const& img = _images[s.gen].letters();
      if (s.inverse) {
        for (auto r = img.rbegin(); r != img.rend(); ++r) {
          push_reduced(out, r->inverted());
        }
      } else {
        for (auto l : img) {
          push_reduced(out, l);
        }
      }
    }
    return Word(_rank, out);
  }

  bool Endomorphism::inverse_is_consistent() const {
    if (!_inverse) {
      return false;
    }
    Endomorphism inv(_rank, *_inverse);
    for (std::uint32_t i = 0; i < _rank; ++i) {
      auto x = Word::generator(_rank, i);
      if (apply(inv.apply(x)) != x || inv.apply(apply(x)) != x) {
        return false;
      }
    }
    return true;
  }

  Endomorphism compose(Endomorphism const& outer, Endomorphism const& inner) {
    if (outer.rank() != inner.rank()) {
      throw InvalidArgument("rank mismatch in composition");
    }
    std::vector<Word> images;
    for (auto const& w : inner.images()) {
      images.push_back(outer.apply(w));
    }
    std::optional<std::vector<Word>> inverses;
    if (outer.has_inverse() && inner.has_inverse()) {
      Endomorphism outer_inv(outer.rank(), outer.inverse_images());
      Endomorphism inner_inv(inner.rank(), inner.inverse_images());
      inverses.emplace();
      for (auto const& w : outer_inv.images()) {
        inverses->push_back(inner_inv.apply(w));
      }
    }
    return Endomorphism(outer.rank(), std::move(images), std::move(inverses));
  }

  Endomorphism endo_power(Endomorphism const& e, long k) {
    Endomorphism base = k < 0 ? e.inverse() : e;
    Endomorphism acc  = Endomorphism::identity(e.rank());
    long const   n    = k < 0 ? -k : k;
    for (long j = 0; j < n; ++j) {
      acc = compose(base, acc);
    }
    return acc;
  }

  Endomorphism inner(Word const& g) {
    auto const        rank = g.rank();
    auto const        gi   = invert(g);
    std::vector<Word> images, inverses;
    for (std::uint32_t i = 0; i < rank; ++i) {
      auto x = Word::generator(rank, i);
      images.push_back(g * x * gi);
      inverses.push_back(gi * x * g);
    }
    return Endomorphism(rank, std::move(images), std::move(inverses));
  }

  ////////////////////////////////////////////////////////////////////////
  // HnnSpec
  ////////////////////////////////////////////////////////////////////////

  void HnnSpec::validate() const {
    if (phi.rank() != rank || w0.rank() != rank) {
      throw VerificationFailure("HnnSpec rank mismatch");
    }
    if (power == 0) {
      throw VerificationFailure("HnnSpec power must be positive");
    }
    if (!phi.inverse_is_consistent()) {
      throw VerificationFailure("HnnSpec phi is not an automorphism");
    }
    auto phi_n = endo_power(phi, static_cast<long>(power));
    auto w0i   = invert(w0);
    for (std::uint32_t i = 0; i < rank; ++i) {
      auto x = Word::generator(rank, i);
      if (phi_n.apply(x) != w0 * x * w0i) {
        throw VerificationFailure("phi^" + std::to_string(power) + "(x"
                                  + std::to_string(i)
                                  + ") is not w0 x w0^-1");
      }
    }
  }

  HnnSpec artin_even_spec(long n) {
    if (n < 2) {
      throw InvalidArgument("artin_even_spec needs n >= 2");
    }
    auto const          rank = static_cast<std::size_t>(n);
    std::vector<Symbol> img, delta;
    for (std::uint32_t i = 0; i < rank; ++i) {
      img.push_back(Symbol::base(i));
      delta.push_back(Symbol::base(i));
    }
    for (long i = n - 2; i >= 0; --i) {
      img.push_back(Symbol::base(static_cast<std::uint32_t>(i), true));
    }
    HnnSpec spec;
    spec.rank  = rank;
    spec.phi   = Endomorphism::shift(rank, Word(rank, img));
    spec.power = rank;
    spec.w0    = Word(rank, delta);
    spec.name  = "A(" + std::to_string(2 * n) + ")";
    spec.validate();
    return spec;
  }

  Word artin_odd_sigma(long n) {
    if (n < 1) {
      throw InvalidArgument("artin_odd_sigma needs n >= 1");
    }
    auto const          rank = static_cast<std::size_t>(2 * n);
    std::vector<Symbol> evens, all, odds;
    for (std::uint32_t i = 0; i < rank; ++i) {
      all.push_back(Symbol::base(i));
      (i % 2 == 0 ? evens : odds).push_back(Symbol::base(i));
    }
    return Word(rank, evens) * invert(Word(rank, all)) * Word(rank, odds);
  }

  HnnSpec artin_odd_spec(long n) {
    if (n < 1) {
      throw InvalidArgument("artin_odd_spec needs n >= 1");
    }
    auto const          rank = static_cast<std::size_t>(2 * n);
    std::vector<Symbol> img;
    for (long i = 0; i < 2 * n; i += 2) {
      img.push_back(Symbol::base(static_cast<std::uint32_t>(i)));
    }
    for (long i = 2 * n - 1; i >= 1; i -= 2) {
      img.push_back(Symbol::base(static_cast<std::uint32_t>(i), true));
    }
    HnnSpec spec;
    spec.rank  = rank;
    spec.phi   = Endomorphism::shift(rank, Word(rank, img));
    spec.power = static_cast<std::size_t>(2 * (2 * n + 1));
    spec.w0    = artin_odd_sigma(n);
    spec.name  = "A(" + std::to_string(2 * n + 1) + ")";
    spec.validate();
    return spec;
  }

  HnnSpec artin_spec(long m) {
    if (m < 3) {
      throw InvalidArgument("Artin groups A(m) need m >= 3");
    }
    return m % 2 == 0 ? artin_even_spec(m / 2) : artin_odd_spec(m / 2);
  }

  Word psi_inverse_power_x0(long n, long i) {
    if (n < 1 || i < 1 || i > 4 * n + 1) {
      throw InvalidArgument("psi_inverse_power_x0 needs 1 <= i <= 4n+1");
    }
    auto const rank = static_cast<std::size_t>(2 * n);
    if (i <= 2 * n - 1) {
      return Word::generator(rank, static_cast<std::uint32_t>(i));
    }
    auto spec  = artin_odd_spec(n);
    auto sigma = spec.w0;
    auto psi_k = endo_power(spec.phi, 4 * n + 2 - i);
    return invert(sigma) * psi_k.apply(Word::generator(rank, 0)) * sigma;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form
  ////////////////////////////////////////////////////////////////////////

  std::string NormalForm::to_string() const {
    return "t^" + std::to_string(l) + " · " + f.to_string();
  }

  NormalForm normal_form(HnnSpec const& spec, MixedWord const& w) {
    if (w.rank() > spec.rank) {
      throw InvalidArgument("word rank exceeds the spec rank");
    }
    auto const&         phi     = spec.phi;
    auto const          phi_inv = phi.inverse();
    long                l       = 0;
    std::vector<Symbol> f;
    for (auto s : w.symbols()) {
      if (s.is_stable()) {
        auto const& e = s.inverse ? phi_inv : phi;
        f             = e.apply(Word(spec.rank, f)).letters();
        l += s.sign();
      } else {
        push_reduced(f, s);
      }
    }
    return NormalForm{l, Word(spec.rank, f)};
  }

  NormalForm multiply(HnnSpec const&    spec,
                      NormalForm const& a,
                      NormalForm const& b) {
    auto moved = endo_power(spec.phi, b.l).apply(a.f);
    return NormalForm{a.l + b.l, moved * b.f};
  }

  bool equal(HnnSpec const& spec, MixedWord const& u, MixedWord const& v) {
    return normal_form(spec, u) == normal_form(spec, v);
  }

  MixedWord center_generator(HnnSpec const& spec) {
    auto z = MixedWord::stable(spec.rank, static_cast<long>(spec.power))
             * MixedWord(spec.w0);
    std::vector<MixedWord> gens;
    for (std::uint32_t i = 0; i < spec.rank; ++i) {
      gens.push_back(MixedWord::generator(spec.rank, i));
    }
    gens.push_back(MixedWord::stable(spec.rank));
    for (auto const& g : gens) {
      if (!equal(spec, z * g, g * z)) {
        throw VerificationFailure("t^n w0 does not commute with "
                                  + g.to_string() + " in " + spec.name);
      }
    }
    return z;
  }

  MixedWord alternating_word(long m, MixedWord const& u, MixedWord const& v) {
    if (m < 1) {
      throw InvalidArgument("alternating word length must be positive");
    }
    auto w = (u * v).pow(m / 2);
    if (m % 2 == 1) {
      w = w * u;
    }
    return w;
  }

  ArtinCanonical artin_canonical(long m) {
    if (m < 3) {
      throw InvalidArgument("Artin groups A(m) need m >= 3");
    }
    ArtinCanonical out;
    out.m = m;
    if (m % 2 == 0) {
      auto const rank = static_cast<std::size_t>(m / 2);
      out.x           = MixedWord::generator(rank, 0);
      out.y           = MixedWord::stable(rank);
    } else {
      auto const rank = static_cast<std::size_t>(2 * (m / 2));
      out.x           = MixedWord::stable(rank);
      out.y           = MixedWord::generator(rank, 0) * out.x;
    }
    out.lhs = alternating_word(m, out.x, out.y);
    out.rhs = alternating_word(m, out.y, out.x);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Holomorph identity
  ////////////////////////////////////////////////////////////////////////

  std::string HolomorphReport::convention() const {
    if (left_to_right && right_to_left) {
      return "both";
    }
    if (left_to_right) {
      return "left-to-right";
    }
    if (right_to_left) {
      return "right-to-left";
    }
    return "none";
  }

  HolomorphReport holomorph_conjugation_check(Endomorphism const& phi,
                                              Word const&         g) {
    return holomorph_conjugation_check(phi, g, inner(g));
  }

  HolomorphReport holomorph_conjugation_check(Endomorphism const& phi,
                                              Word const&         g,
                                              Endomorphism const& g_hat) {
    if (!phi.has_inverse()) {
      throw InvalidArgument("holomorph check needs an invertible phi");
    }
    if (g.rank() != phi.rank() || g_hat.rank() != phi.rank()) {
      throw InvalidArgument("rank mismatch in holomorph check");
    }
    Endomorphism const phi_inv(phi.rank(), phi.inverse_images());
    Endomorphism const phi_fwd(phi.rank(), phi.images());
    Endomorphism const gh(g_hat.rank(), g_hat.images());
    auto const         target = inner(phi.apply(g));

    auto l2r = compose(phi_fwd, compose(gh, phi_inv));
    auto r2l = compose(phi_inv, compose(gh, phi_fwd));

    HolomorphReport report;
    report.left_to_right = l2r.images() == target.images();
    report.right_to_left = r2l.images() == target.images();
    report.holds         = report.left_to_right || report.right_to_left;
    return report;
  }

}  // namespace linrep
