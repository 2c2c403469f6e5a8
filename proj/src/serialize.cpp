// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/serialize.hpp"

#include "linrep/errors.hpp"

namespace linrep {

  namespace {

    [[noreturn]] void fail(std::string const& what) {
      throw ParseError(what);
    }

    Json const& field(Json const& doc, char const* key) {
      if (!doc.is_object() || !doc.contains(key)) {
        fail(std::string("missing field '") + key + "'");
      }
      return doc.at(key);
    }

    std::size_t size_field(Json const& doc, char const* key) {
      auto const& v = field(doc, key);
      if (!v.is_number_unsigned()) {
        fail(std::string("field '") + key + "' must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    std::string string_field(Json const& doc, char const* key) {
      auto const& v = field(doc, key);
      if (!v.is_string()) {
        fail(std::string("field '") + key + "' must be a string");
      }
      return v.get<std::string>();
    }

    BigInt parse_bigint(std::string const& text) {
      BigInt out;
      if (text.empty() || out.set_str(text, 10) != 0) {
        fail("bad integer '" + text + "'");
      }
      return out;
    }

    Rational parse_rational(Json const& v) {
      if (v.is_number_integer()) {
        return Rational(BigInt(v.get<long>()));
      }
      if (!v.is_string()) {
        fail("rational entries are integers or \"a/b\" strings");
      }
      auto const text  = v.get<std::string>();
      auto const slash = text.find('/');
      if (slash == std::string::npos) {
        return Rational(parse_bigint(text));
      }
      auto const den = parse_bigint(text.substr(slash + 1));
      if (sgn(den) == 0) {
        fail("zero denominator in '" + text + "'");
      }
      Rational out(parse_bigint(text.substr(0, slash)), den);
      out.canonicalize();
      return out;
    }

    std::string rational_text(Rational const& q) {
      return q.get_str(10);
    }

    // Entry codecs per scalar type.

    Json entry_to_json(LaurentPoly const& x) {
      return poly_to_json(x);
    }
    Json entry_to_json(QpScalar const& x) {
      return Json::array({x.numerator().get_str(10), x.k()});
    }
    Json entry_to_json(BigInt const& x) {
      return poly_to_json(LaurentPoly(x));
    }
    Json entry_to_json(Rational const& x) {
      return rational_text(x);
    }

    template <typename Scalar>
    struct Entry;

    template <>
    struct Entry<LaurentPoly> {
      static constexpr RingKind kind = RingKind::laurent;
      static LaurentPoly        read(Json const& v, RingDescriptor const&) {
        return poly_from_json(v);
      }
    };

    template <>
    struct Entry<QpScalar> {
      static constexpr RingKind kind = RingKind::qp;
      static QpScalar           read(Json const& v, RingDescriptor const& ring) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_string()
            || !v[1].is_number_unsigned()) {
          fail("qp entries are [\"numerator\", k]");
        }
        auto const num = parse_bigint(v[0].get<std::string>());
        auto const k   = v[1].get<unsigned>();
        auto const out = QpScalar::make(num, k, ring.prime);
        if (out.k() != k || out.numerator() != num) {
          fail("qp entry is not normalized");
        }
        return out;
      }
    };

    template <>
    struct Entry<BigInt> {
      static constexpr RingKind kind = RingKind::integer;
      static BigInt             read(Json const& v, RingDescriptor const&) {
        auto p = poly_from_json(v);
        if (p.is_zero()) {
          return BigInt(0);
        }
        if (p.terms().size() != 1 || !(p.terms()[0].first == Monomial{})) {
          fail("integer entries are constant polys");
        }
        return p.terms()[0].second;
      }
    };

    template <>
    struct Entry<Rational> {
      static constexpr RingKind kind = RingKind::rational;
      static Rational           read(Json const& v, RingDescriptor const&) {
        return parse_rational(v);
      }
    };

    Json rows_to_json(QMatrix const& m) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.degree(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.degree(); ++j) {
          row.push_back(rational_text(m(i, j)));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    QMatrix rows_from_json(Json const& rows, std::size_t degree) {
      if (!rows.is_array() || rows.size() != degree) {
        fail("expected " + std::to_string(degree) + " rows");
      }
      QMatrix out(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        if (!rows[i].is_array() || rows[i].size() != degree) {
          fail("row " + std::to_string(i) + " must have " + std::to_string(degree)
               + " entries");
        }
        for (std::size_t j = 0; j < degree; ++j) {
          out(i, j) = parse_rational(rows[i][j]);
        }
      }
      return out;
    }

  }  // namespace

  Json parse_json(std::string_view text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }

  std::string dump_json(Json const& doc) {
    return doc.dump(2) + "\n";
  }

  Json ring_to_json(RingDescriptor const& ring) {
    Json out = Json::object();
    out["kind"] = to_string(ring.kind);
    if (ring.kind == RingKind::qp) {
      out["prime"] = ring.prime;
    }
    return out;
  }

  RingDescriptor ring_from_json(Json const& doc) {
    auto const     kind = string_field(doc, "kind");
    RingDescriptor out;
    if (kind == "laurent") {
      out.kind = RingKind::laurent;
    } else if (kind == "qp") {
      out.kind  = RingKind::qp;
      out.prime = size_field(doc, "prime");
      if (out.prime < 2) {
        fail("qp ring needs a prime");
      }
    } else if (kind == "integer") {
      out.kind = RingKind::integer;
    } else if (kind == "rational") {
      out.kind = RingKind::rational;
    } else {
      fail("unknown ring kind '" + kind + "'");
    }
    return out;
  }

  Json poly_to_json(LaurentPoly const& p) {
    Json out = Json::array();
    for (auto const& [m, c] : p.terms()) {
      out.push_back(Json::array({m.a, m.b, m.c, c.get_str(10)}));
    }
    return out;
  }

  LaurentPoly poly_from_json(Json const& doc) {
    if (!doc.is_array()) {
      fail("a poly is an array of [a, b, c, \"coefficient\"]");
    }
    std::vector<LaurentPoly::Term> terms;
    for (auto const& t : doc) {
      if (!t.is_array() || t.size() != 4 || !t[0].is_number_integer()
          || !t[1].is_number_integer() || !t[2].is_number_integer() || !t[3].is_string()) {
        fail("a poly term is [a, b, c, \"coefficient\"]");
      }
      terms.emplace_back(Monomial{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()},
                         parse_bigint(t[3].get<std::string>()));
    }
    try {
      return LaurentPoly::from_terms(std::move(terms));
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
  }

  template <typename Scalar>
  Json matrix_to_json(Matrix<Scalar> const& m, RingDescriptor const& ring) {
    if (ring.kind != Entry<Scalar>::kind) {
      throw InvalidArgument("ring kind does not match the matrix entries");
    }
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.degree(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.degree(); ++j) {
        row.push_back(entry_to_json(m(i, j)));
      }
      rows.push_back(std::move(row));
    }
    Json out      = Json::object();
    out["degree"] = m.degree();
    out["ring"]   = ring_to_json(ring);
    out["rows"]   = std::move(rows);
    return out;
  }

  template <typename Scalar>
  Matrix<Scalar> matrix_from_json(Json const& doc) {
    auto const degree = size_field(doc, "degree");
    auto const ring   = ring_from_json(field(doc, "ring"));
    if (ring.kind != Entry<Scalar>::kind) {
      fail("expected a " + to_string(Entry<Scalar>::kind) + " matrix, got "
           + to_string(ring.kind));
    }
    if (degree == 0) {
      fail("matrix degree must be positive");
    }
    auto const& rows = field(doc, "rows");
    if (!rows.is_array() || rows.size() != degree) {
      fail("expected " + std::to_string(degree) + " rows");
    }
    Matrix<Scalar> out(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      if (!rows[i].is_array() || rows[i].size() != degree) {
        fail("row " + std::to_string(i) + " must have " + std::to_string(degree)
             + " entries");
      }
      for (std::size_t j = 0; j < degree; ++j) {
        out(i, j) = Entry<Scalar>::read(rows[i][j], ring);
      }
    }
    return out;
  }

  template <typename Scalar>
  Json representation_to_json(Representation<Scalar> const& rep) {
    Json gens = Json::array();
    for (auto const& g : rep.generators()) {
      Json entry            = Json::object();
      entry["name"]         = g.name;
      entry["image"]        = matrix_to_json(g.image, rep.ring());
      entry["imageInverse"] = matrix_to_json(g.inverse, rep.ring());
      gens.push_back(std::move(entry));
    }
    Json out          = Json::object();
    out["group"]      = rep.group();
    out["degree"]     = rep.degree();
    out["ring"]       = ring_to_json(rep.ring());
    out["generators"] = std::move(gens);
    return out;
  }

  template <typename Scalar>
  Representation<Scalar> representation_from_json(Json const& doc) {
    auto const  group  = string_field(doc, "group");
    auto const  degree = size_field(doc, "degree");
    auto const  ring   = ring_from_json(field(doc, "ring"));
    auto const& gens   = field(doc, "generators");
    if (!gens.is_array()) {
      fail("'generators' must be an array");
    }
    std::vector<GeneratorImage<Scalar>> images;
    for (auto const& g : gens) {
      GeneratorImage<Scalar> img{string_field(g, "name"),
                                 matrix_from_json<Scalar>(field(g, "image")),
                                 matrix_from_json<Scalar>(field(g, "imageInverse"))};
      if (img.image.degree() != degree) {
        fail("generator " + img.name + " does not have the declared degree");
      }
      if (!(ring_from_json(field(field(g, "image"), "ring")) == ring)) {
        fail("generator " + img.name + " is over a different ring");
      }
      images.push_back(std::move(img));
    }
    return Representation<Scalar>(group, ring, std::move(images));
  }

#define LINREP_SERIALIZE_MATRIX(S)                                          \
  template Json      matrix_to_json<S>(Matrix<S> const&, RingDescriptor const&); \
  template Matrix<S> matrix_from_json<S>(Json const&);
#define LINREP_SERIALIZE(S)                                                 \
  LINREP_SERIALIZE_MATRIX(S)                                                \
  template Json              representation_to_json<S>(Representation<S> const&); \
  template Representation<S> representation_from_json<S>(Json const&);

  LINREP_SERIALIZE(LaurentPoly)
  LINREP_SERIALIZE(QpScalar)
  LINREP_SERIALIZE(BigInt)
  LINREP_SERIALIZE_MATRIX(Rational)

#undef LINREP_SERIALIZE
#undef LINREP_SERIALIZE_MATRIX

  SplittableExport export_splittable(SplittableRep const& rep) {
    SplittableExport out;
    auto const&      group = rep.group();
    out.m_degree           = group.m();
    out.n_degree           = group.n();
    for (auto const& b : rep.basis()) {
      out.basis.push_back({b.coord.to_string(), group.to_string(b.shift.word)});
    }
    for (std::uint32_t gen = 0; gen < group.generator_count(); ++gen) {
      out.actions.emplace_back(group.name(gen), rep.action(Letter{gen, false}));
    }
    return out;
  }

  Json splittable_to_json(SplittableExport const& doc) {
    RingDescriptor const rational{RingKind::rational, 0};
    Json                 basis = Json::array();
    for (auto const& b : doc.basis) {
      Json entry         = Json::object();
      entry["coordId"]   = b.coord_id;
      entry["shiftWord"] = b.shift_word;
      basis.push_back(std::move(entry));
    }
    Json actions = Json::object();
    for (auto const& [name, m] : doc.actions) {
      actions[name] = matrix_to_json(m, rational);
    }
    Json out       = Json::object();
    out["mDegree"] = doc.m_degree;
    out["nDegree"] = doc.n_degree;
    out["basis"]   = std::move(basis);
    out["actions"] = std::move(actions);
    return out;
  }

  SplittableExport splittable_from_json(Json const& doc) {
    SplittableExport out;
    out.m_degree      = size_field(doc, "mDegree");
    out.n_degree      = size_field(doc, "nDegree");
    auto const& basis = field(doc, "basis");
    if (!basis.is_array()) {
      fail("'basis' must be an array");
    }
    for (auto const& b : basis) {
      auto id = string_field(b, "coordId");
      CoordId::parse(id);
      out.basis.push_back({id, string_field(b, "shiftWord")});
    }
    auto const& actions = field(doc, "actions");
    if (!actions.is_object()) {
      fail("'actions' must be an object");
    }
    for (auto const& [name, m] : actions.items()) {
      auto a = matrix_from_json<Rational>(m);
      if (a.degree() != out.basis.size()) {
        fail("action of " + name + " does not match the basis size");
      }
      out.actions.emplace_back(name, std::move(a));
    }
    return out;
  }

  Json gens_to_json(MatrixGroupGens const& gens) {
    Json list = Json::array();
    for (auto const& g : gens.generators()) {
      Json entry       = Json::object();
      entry["name"]    = g.name;
      entry["matrix"]  = rows_to_json(g.matrix);
      entry["inverse"] = rows_to_json(g.inverse);
      list.push_back(std::move(entry));
    }
    Json out          = Json::object();
    out["degree"]     = gens.degree();
    out["generators"] = std::move(list);
    return out;
  }

  MatrixGroupGens gens_from_json(Json const& doc) {
    auto const  degree = size_field(doc, "degree");
    auto const& list   = field(doc, "generators");
    if (!list.is_array()) {
      fail("'generators' must be an array");
    }
    if (degree == 0) {
      fail("degree must be positive");
    }
    std::vector<std::string> names;
    std::vector<QMatrix>     matrices;
    std::vector<QMatrix>     inverses;
    bool                     all_inverses = true;
    for (auto const& g : list) {
      names.push_back(string_field(g, "name"));
      matrices.push_back(rows_from_json(field(g, "matrix"), degree));
      if (g.contains("inverse")) {
        inverses.push_back(rows_from_json(g.at("inverse"), degree));
      } else {
        all_inverses = false;
      }
    }
    try {
      if (!all_inverses) {
        return MatrixGroupGens::from_matrices(degree, std::move(names), std::move(matrices));
      }
      std::vector<GroupGenerator> gens;
      for (std::size_t i = 0; i < names.size(); ++i) {
        gens.push_back({names[i], matrices[i], inverses[i]});
      }
      return MatrixGroupGens(degree, std::move(gens));
    } catch (InvalidArgument const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace linrep
