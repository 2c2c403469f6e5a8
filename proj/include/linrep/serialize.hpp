// linrep - exact linear representations of HNN-extensions and Artin groups
//
// JSON documents for polynomials, matrices, representations and splittable
// representations. Every writer emits a canonical form, so a read followed by
// a write reproduces the input byte for byte.
//
//   poly            [[a, b, c, "coefficient"], ...] sorted on (a, b, c)
//   matrix          {"degree", "ring": {"kind", "prime"?}, "rows"}
//   representation  {"group", "degree", "ring", "generators": [{"name",
//                   "image", "imageInverse"}]} with matrix documents
//   splittable      {"mDegree", "nDegree", "basis": [{"coordId",
//                   "shiftWord"}], "actions": {name: matrix}}
//   generators      {"degree", "generators": [{"name", "matrix",
//                   "inverse"?}]} with integer or "a/b" entries
//
// Matrix entries by ring kind: laurent entries are polys; qp entries are
// ["numerator", k] for numerator / p^k; integer entries are constant polys;
// rational entries are "a/b" strings ("a" when integral).

#ifndef LINREP_SERIALIZE_HPP_
#define LINREP_SERIALIZE_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "linrep/matrix.hpp"
#include "linrep/reps.hpp"
#include "linrep/ring.hpp"
#include "linrep/splittable.hpp"

namespace linrep {

  using Json = nlohmann::ordered_json;

  //! Throws ParseError on malformed text.
  Json        parse_json(std::string_view text);
  std::string dump_json(Json const& doc);  // two-space indent, trailing newline

  Json           ring_to_json(RingDescriptor const& ring);
  RingDescriptor ring_from_json(Json const& doc);

  Json        poly_to_json(LaurentPoly const& p);
  LaurentPoly poly_from_json(Json const& doc);

  //! Scalar must match ring.kind.
  template <typename Scalar>
  Json matrix_to_json(Matrix<Scalar> const& m, RingDescriptor const& ring);

  //! Throws ParseError when the document's ring kind does not fit Scalar.
  template <typename Scalar>
  Matrix<Scalar> matrix_from_json(Json const& doc);

  template <typename Scalar>
  Json representation_to_json(Representation<Scalar> const& rep);

  //! Rebuilds the representation and re-checks every generator inverse.
  //! Instantiated for LaurentPoly, QpScalar and BigInt.
  template <typename Scalar>
  Representation<Scalar> representation_from_json(Json const& doc);

  //! A serializable view of a SplittableRep.
  struct SplittableExport {
    struct BasisEntry {
      std::string coord_id;
      std::string shift_word;

      bool operator==(BasisEntry const&) const = default;
    };

    std::size_t                                  m_degree = 0;
    std::size_t                                  n_degree = 0;
    std::vector<BasisEntry>                      basis;
    std::vector<std::pair<std::string, QMatrix>> actions;  // generator order

    bool operator==(SplittableExport const&) const = default;
  };

  SplittableExport export_splittable(SplittableRep const& rep);
  Json             splittable_to_json(SplittableExport const& doc);
  SplittableExport splittable_from_json(Json const& doc);

  Json            gens_to_json(MatrixGroupGens const& gens);
  MatrixGroupGens gens_from_json(Json const& doc);

}  // namespace linrep

#endif  // LINREP_SERIALIZE_HPP_
