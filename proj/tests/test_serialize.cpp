#include "doctest.h"
#include "linrep/errors.hpp"
#include "linrep/serialize.hpp"

using namespace linrep;

namespace {

  template <typename Scalar>
  void check_rep_round_trip(Representation<Scalar> const& rep) {
    auto const text  = dump_json(representation_to_json(rep));
    auto const back  = representation_from_json<Scalar>(parse_json(text));
    CHECK(back.degree() == rep.degree());
    CHECK(back.group() == rep.group());
    for (std::size_t k = 0; k < rep.generators().size(); ++k) {
      CHECK(back.generators()[k].image == rep.generators()[k].image);
      CHECK(back.generators()[k].inverse == rep.generators()[k].inverse);
    }
    CHECK(dump_json(representation_to_json(back)) == text);
  }

}  // namespace

TEST_CASE("poly documents") {
  auto l  = LaurentPoly::lambda();
  auto mu = LaurentPoly::mu();
  auto p  = LaurentPoly(1) - l * mu + 2 * LaurentPoly::s(-3);
  auto j  = poly_to_json(p);
  CHECK(j.dump() == R"([[0,0,-3,"2"],[0,0,0,"1"],[1,1,0,"-1"]])");
  CHECK(poly_from_json(j) == p);
  CHECK(poly_to_json(LaurentPoly()).dump() == "[]");
  // Unsorted input is canonicalized.
  CHECK(poly_from_json(parse_json(R"([[1,0,0,"3"],[0,0,0,"1"],[1,0,0,"-3"]])"))
        == LaurentPoly(1));
  CHECK_THROWS_AS(poly_from_json(parse_json(R"([[0,0,0,1]])")), ParseError);
  CHECK_THROWS_AS(poly_from_json(parse_json(R"([[-1,0,0,"1"]])")), ParseError);
  CHECK_THROWS_AS(poly_from_json(parse_json(R"([[0,0,0,"x"]])")), ParseError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("matrix documents for every ring kind") {
  auto pm  = Matrix<LaurentPoly>{{1, LaurentPoly::s()}, {LaurentPoly::lambda(), 0}};
  auto doc = matrix_to_json(pm, RingDescriptor{RingKind::laurent, 0});
  CHECK(doc["ring"].dump() == R"({"kind":"laurent"})");
  CHECK(matrix_from_json<LaurentPoly>(doc) == pm);

  auto q = Matrix<QpScalar>{{QpScalar::make(BigInt(3), 2, 5), QpScalar(-7)},
                            {QpScalar(0), QpScalar(1)}};
  auto qd = matrix_to_json(q, RingDescriptor{RingKind::qp, 5});
  CHECK(qd.dump()
        == R"({"degree":2,"ring":{"kind":"qp","prime":5},"rows":[[["3",2],["-7",0]],[["0",0],["1",0]]]})");
  CHECK(matrix_from_json<QpScalar>(qd) == q);
  CHECK_THROWS_AS(matrix_from_json<LaurentPoly>(qd), ParseError);
  // 5/5^1 is not normalized.
  auto bad = qd;
  bad["rows"][0][0] = Json::array({"5", 1});
  CHECK_THROWS_AS(matrix_from_json<QpScalar>(bad), ParseError);

  auto z  = Matrix<BigInt>{{BigInt(2), BigInt(0)}, {BigInt(-1), BigInt(1)}};
  auto zd = matrix_to_json(z, RingDescriptor{RingKind::integer, 0});
  CHECK(zd["rows"][0][0].dump() == R"([[0,0,0,"2"]])");
  CHECK(matrix_from_json<BigInt>(zd) == z);

  auto r  = QMatrix{{Rational(1, 2), Rational(0)}, {Rational(-3), Rational(2, 3)}};
  auto rd = matrix_to_json(r, RingDescriptor{RingKind::rational, 0});
  CHECK(rd["rows"].dump() == R"([["1/2","0"],["-3","2/3"]])");
  CHECK(matrix_from_json<Rational>(rd) == r);
  CHECK_THROWS_AS(matrix_to_json(r, RingDescriptor{RingKind::qp, 5}), InvalidArgument);

  auto short_rows = rd;
  short_rows["rows"].erase(1);
  CHECK_THROWS_AS(matrix_from_json<Rational>(short_rows), ParseError);
}

TEST_CASE("representation documents round-trip byte for byte") {
  check_rep_round_trip(artin(4, symbolic_params()));
  check_rep_round_trip(artin(3, qp_params(2, 2, 5)));
  check_rep_round_trip(artin_integer(3, 2, 2, BigInt(1)));

  auto doc = representation_to_json(artin(4, symbolic_params()));
  CHECK(doc["group"] == "A(4)");
  CHECK(doc["degree"] == 4);
  CHECK(doc["generators"][1]["name"] == "y");
  // A wrong inverse is caught on import.
  doc["generators"][0]["imageInverse"] = doc["generators"][0]["image"];
  CHECK_THROWS_AS(representation_from_json<LaurentPoly>(doc), InvalidArgument);
}

TEST_CASE("splittable documents round-trip") {
  auto g = MatrixGroupGens::from_matrices(
      2, {"a", "b"},
      {QMatrix{{Rational(1), Rational(0)}, {Rational(2), Rational(1)}},
       QMatrix{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}});
  auto rep = int_g_rep(g);
  auto exp = export_splittable(rep);
  CHECK(exp.m_degree == 4);
  CHECK(exp.n_degree == 2);
  CHECK(exp.basis.size() == rep.degree());
  CHECK(exp.basis[0].shift_word == "1");
  CHECK(exp.actions.size() == 4);
  CHECK(exp.actions[0].first == "inn(a)");
  auto text = dump_json(splittable_to_json(exp));
  auto back = splittable_from_json(parse_json(text));
  CHECK(back == exp);
  CHECK(dump_json(splittable_to_json(back)) == text);

  auto gens_text = dump_json(gens_to_json(g));
  auto g2        = gens_from_json(parse_json(gens_text));
  CHECK(dump_json(gens_to_json(g2)) == gens_text);
}

TEST_CASE("generator files") {
  auto g = gens_from_json(parse_json(
      R"({"degree": 2, "generators": [{"name": "h", "matrix": [["1/2", 0], [0, 2]]}]})"));
  CHECK(g.size() == 1);
  CHECK(g[0].inverse == QMatrix{{Rational(2), Rational(0)}, {Rational(0), Rational(1, 2)}});
  CHECK_THROWS_AS(
      gens_from_json(parse_json(
          R"({"degree": 2, "generators": [{"name": "s", "matrix": [[1, 1], [1, 1]]}]})")),
      ParseError);
  CHECK_THROWS_AS(gens_from_json(parse_json(
                      R"({"degree": 2, "generators": [{"name": "s", "matrix": [[1, 0]]}]})")),
                  ParseError);
  CHECK_THROWS_AS(gens_from_json(parse_json(R"({"generators": []})")), ParseError);
  CHECK_THROWS_AS(
      gens_from_json(parse_json(
          R"({"degree": 1, "generators": [{"name": "s", "matrix": [["1/0"]]}]})")),
      ParseError);
}
