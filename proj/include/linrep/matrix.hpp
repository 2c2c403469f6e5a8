// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Dense square matrices over an exact scalar ring, together with the block
// assembly used by the coset-induced representations: block diagonals and
// block companions (identity-like blocks on the superdiagonal, one corner
// block in the bottom-left position).

#ifndef LINREP_MATRIX_HPP_
#define LINREP_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linrep/errors.hpp"
#include "linrep/ring.hpp"

namespace linrep {

  template <typename Scalar>
  class Matrix {
   public:
    using scalar_type = Scalar;

    Matrix() = default;
    explicit Matrix(std::size_t degree)
        : _degree(degree), _entries(degree * degree, Scalar(0)) {}
    Matrix(std::size_t degree, std::vector<Scalar> entries)
        : _degree(degree), _entries(std::move(entries)) {
      if (_entries.size() != degree * degree) {
        throw InvalidArgument("matrix of degree " + std::to_string(degree)
                              + " needs " + std::to_string(degree * degree)
                              + " entries");
      }
    }
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
        : _degree(rows.size()) {
      _entries.reserve(_degree * _degree);
      for (auto const& row : rows) {
        if (row.size() != _degree) {
          throw InvalidArgument("matrix rows must form a square");
        }
        _entries.insert(_entries.end(), row.begin(), row.end());
      }
    }

    static Matrix identity(std::size_t degree) {
      return scalar(degree, Scalar(1));
    }
    static Matrix scalar(std::size_t degree, Scalar const& s) {
      Matrix out(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        out(i, i) = s;
      }
      return out;
    }

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::vector<Scalar> const& entries() const noexcept {
      return _entries;
    }

    Scalar& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _degree + j];
    }
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _degree + j];
    }
    Scalar const& at(std::size_t i, std::size_t j) const {
      if (i >= _degree || j >= _degree) {
        throw InvalidArgument("matrix index out of range");
      }
      return (*this)(i, j);
    }

    bool is_identity() const {
      for (std::size_t i = 0; i < _degree; ++i) {
        for (std::size_t j = 0; j < _degree; ++j) {
          auto const& x = (*this)(i, j);
          if (i == j ? !(x == Scalar(1)) : !is_zero(x)) {
            return false;
          }
        }
      }
      return true;
    }

    //! Block (bi, bj) of size b.
    Matrix block(std::size_t bi, std::size_t bj, std::size_t b) const {
      check_block(bi, bj, b);
      Matrix out(b);
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          out(i, j) = (*this)(bi * b + i, bj * b + j);
        }
      }
      return out;
    }

    void set_block(std::size_t bi, std::size_t bj, Matrix const& m) {
      auto const b = m.degree();
      check_block(bi, bj, b);
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          (*this)(bi * b + i, bj * b + j) = m(i, j);
        }
      }
    }

    template <typename F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<Scalar>()))> {
      using T = decltype(f(std::declval<Scalar>()));
      std::vector<T> out;
      out.reserve(_entries.size());
      for (auto const& x : _entries) {
        out.push_back(f(x));
      }
      return Matrix<T>(_degree, std::move(out));
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      check_same(a, b);
      auto const n = a._degree;
      Matrix     out(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          auto const& x = a(i, k);
          if (is_zero(x)) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            auto const& y = b(k, j);
            if (!is_zero(y)) {
              out(i, j) += x * y;
            }
          }
        }
      }
      return out;
    }

    friend Matrix operator+(Matrix a, Matrix const& b) {
      check_same(a, b);
      for (std::size_t i = 0; i < a._entries.size(); ++i) {
        a._entries[i] += b._entries[i];
      }
      return a;
    }

    friend Matrix operator-(Matrix a, Matrix const& b) {
      check_same(a, b);
      for (std::size_t i = 0; i < a._entries.size(); ++i) {
        a._entries[i] -= b._entries[i];
      }
      return a;
    }

    friend Matrix operator*(Scalar const& s, Matrix a) {
      for (auto& x : a._entries) {
        x = s * x;
      }
      return a;
    }

    Matrix& operator*=(Matrix const& that) {
      *this = *this * that;
      return *this;
    }

    bool operator==(Matrix const& that) const {
      return _degree == that._degree && _entries == that._entries;
    }

   private:
    static void check_same(Matrix const& a, Matrix const& b) {
      if (a._degree != b._degree) {
        throw InvalidArgument("degree mismatch: " + std::to_string(a._degree)
                              + " vs " + std::to_string(b._degree));
      }
    }

    void check_block(std::size_t bi, std::size_t bj, std::size_t b) const {
      if (b == 0 || _degree % b != 0 || (bi + 1) * b > _degree
          || (bj + 1) * b > _degree) {
        throw InvalidArgument("block out of range");
      }
    }

    std::size_t         _degree = 0;
    std::vector<Scalar> _entries;
  };

  template <typename Scalar>
  Matrix<Scalar> pow(Matrix<Scalar> const& m, unsigned k) {
    auto out = Matrix<Scalar>::identity(m.degree());
    for (unsigned i = 0; i < k; ++i) {
      out *= m;
    }
    return out;
  }

  template <typename Scalar>
  struct EntryDifference {
    std::size_t row = 0;
    std::size_t col = 0;
    Scalar      lhs;
    Scalar      rhs;
  };

  //! First (row-major) entry where a and b differ.
  template <typename Scalar>
  std::optional<EntryDifference<Scalar>> first_difference(Matrix<Scalar> const& a,
                                                          Matrix<Scalar> const& b) {
    if (a.degree() != b.degree()) {
      throw InvalidArgument("degree mismatch in comparison");
    }
    for (std::size_t i = 0; i < a.degree(); ++i) {
      for (std::size_t j = 0; j < a.degree(); ++j) {
        if (!(a(i, j) == b(i, j))) {
          return EntryDifference<Scalar>{i, j, a(i, j), b(i, j)};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Block layouts
  ////////////////////////////////////////////////////////////////////////

  enum class BlockKind { zero, identity, explicit_matrix };

  template <typename Scalar>
  struct BlockRef {
    BlockKind      kind = BlockKind::zero;
    Matrix<Scalar> value;

    static BlockRef zero() {
      return BlockRef{};
    }
    static BlockRef identity() {
      return BlockRef{BlockKind::identity, {}};
    }
    static BlockRef of(Matrix<Scalar> m) {
      return BlockRef{BlockKind::explicit_matrix, std::move(m)};
    }
  };

  //! A k x k grid of blocks of degree b.
  template <typename Scalar>
  class BlockLayout {
   public:
    BlockLayout(std::size_t k, std::size_t b)
        : _k(k), _b(b), _grid(k * k, BlockRef<Scalar>::zero()) {
      if (k == 0 || b == 0) {
        throw InvalidArgument("block layout needs positive sizes");
      }
    }

    std::size_t blocks() const noexcept {
      return _k;
    }
    std::size_t block_degree() const noexcept {
      return _b;
    }

    void set(std::size_t i, std::size_t j, BlockRef<Scalar> ref) {
      if (i >= _k || j >= _k) {
        throw InvalidArgument("block position out of range");
      }
      if (ref.kind == BlockKind::explicit_matrix && ref.value.degree() != _b) {
        throw InvalidArgument("inhomogeneous blocks: expected degree "
                              + std::to_string(_b) + ", found "
                              + std::to_string(ref.value.degree()));
      }
      _grid[i * _k + j] = std::move(ref);
    }

    Matrix<Scalar> assemble() const {
      Matrix<Scalar> out(_k * _b);
      for (std::size_t i = 0; i < _k; ++i) {
        for (std::size_t j = 0; j < _k; ++j) {
          auto const& ref = _grid[i * _k + j];
          if (ref.kind == BlockKind::identity) {
            out.set_block(i, j, Matrix<Scalar>::identity(_b));
          } else if (ref.kind == BlockKind::explicit_matrix) {
            out.set_block(i, j, ref.value);
          }
        }
      }
      return out;
    }

   private:
    std::size_t                   _k;
    std::size_t                   _b;
    std::vector<BlockRef<Scalar>> _grid;
  };

  template <typename Scalar>
  Matrix<Scalar> block_diag(std::vector<Matrix<Scalar>> const& blocks) {
    if (blocks.empty()) {
      throw InvalidArgument("block_diag needs at least one block");
    }
    BlockLayout<Scalar> layout(blocks.size(), blocks[0].degree());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      layout.set(i, i, BlockRef<Scalar>::of(blocks[i]));
    }
    return layout.assemble();
  }

  //! Block (i, i+1) = superdiag[i], block (k-1, 0) = corner. With a single
  //! block the corner sits at (0, 0).
  template <typename Scalar>
  Matrix<Scalar>
  block_companion(std::vector<BlockRef<Scalar>> const& superdiag,
                  Matrix<Scalar> const&                corner) {
    auto const          k = superdiag.size() + 1;
    BlockLayout<Scalar> layout(k, corner.degree());
    for (std::size_t i = 0; i + 1 < k; ++i) {
      layout.set(i, i + 1, superdiag[i]);
    }
    layout.set(k - 1, 0, BlockRef<Scalar>::of(corner));
    return layout.assemble();
  }

  //! The inverse shape of block_companion: block (i+1, i) = subdiag[i] and
  //! block (0, k-1) = corner.
  template <typename Scalar>
  Matrix<Scalar>
  block_companion_inverse(std::vector<BlockRef<Scalar>> const& subdiag,
                          Matrix<Scalar> const&                corner) {
    auto const          k = subdiag.size() + 1;
    BlockLayout<Scalar> layout(k, corner.degree());
    for (std::size_t i = 0; i + 1 < k; ++i) {
      layout.set(i + 1, i, subdiag[i]);
    }
    layout.set(0, k - 1, BlockRef<Scalar>::of(corner));
    return layout.assemble();
  }

  //! U^-1 M U, after checking that u_inv is a two-sided inverse of u.
  template <typename Scalar>
  Matrix<Scalar> conjugate(Matrix<Scalar> const& m,
                           Matrix<Scalar> const& u,
                           Matrix<Scalar> const& u_inv) {
    if (!(u * u_inv).is_identity() || !(u_inv * u).is_identity()) {
      throw InvalidArgument("conjugate: Uinv is not a two-sided inverse of U");
    }
    return u_inv * m * u;
  }

  template <typename Scalar>
  Scalar determinant2(Matrix<Scalar> const& m) {
    if (m.degree() != 2) {
      throw InvalidArgument("determinant2 needs a 2x2 matrix");
    }
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  }

  //! Fraction-free (Bareiss) elimination over the integers.
  BigInt determinant_bareiss(Matrix<BigInt> m);

  //! Gauss-Jordan inverse over Q; nullopt for a singular matrix.
  std::optional<Matrix<Rational>> inverse_rational(Matrix<Rational> m);

  //! Entrywise specialization lambda -> lambda0, mu -> mu0, s -> p.
  Matrix<QpScalar> specialize(Matrix<LaurentPoly> const& m,
                              long                       lambda0,
                              long                       mu0,
                              unsigned long              p);

}  // namespace linrep

#endif  // LINREP_MATRIX_HPP_
