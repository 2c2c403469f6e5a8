// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/suites.hpp"

#include "linrep/errors.hpp"

namespace linrep {

  namespace {

    template <typename Scalar>
    std::string describe(EntryDifference<Scalar> const& d) {
      return "entry (" + std::to_string(d.row + 1) + "," + std::to_string(d.col + 1)
             + "): " + to_string(d.lhs) + " vs " + to_string(d.rhs);
    }

    template <typename Scalar>
    SuiteCheck compare(std::string label, Matrix<Scalar> const& a, Matrix<Scalar> const& b) {
      auto d = first_difference(a, b);
      return SuiteCheck{std::move(label), !d, d ? describe(*d) : std::string()};
    }

    template <typename Scalar>
    void add_relations(SuiteReport& report, Representation<Scalar> const& rep,
                       std::vector<std::pair<LetterWord, LetterWord>> const& rels,
                       std::string const& prefix) {
      auto result = verify_defining_relations(rep, rels);
      for (auto const& r : result.results) {
        report.checks.push_back(SuiteCheck{prefix + r.label,
                                           r.passed,
                                           r.difference ? describe(*r.difference)
                                                        : std::string()});
      }
    }

    template <typename Scalar>
    struct Built {
      Representation<Scalar> canonical;
      Representation<Scalar> hnn;
      std::optional<Scalar>  s;  // the image of t^n w0 is s I when set
    };

    template <typename Scalar>
    SuiteReport relations(Built<Scalar> const& b, long m) {
      SuiteReport report;
      add_relations(report, b.canonical, artin_relations(b.canonical, m), "");
      add_relations(report, b.hnn, hnn_relations(b.hnn), "");
      report.extra["degree"]    = b.canonical.degree();
      report.extra["hnnDegree"] = b.hnn.degree();
      return report;
    }

    template <typename Scalar>
    SuiteReport center(Built<Scalar> const& b, long m) {
      SuiteReport report;
      auto const& spec = *b.hnn.spec();
      auto const  z    = b.hnn.eval(center_generator(spec));
      auto const  zw   = center_generator(spec).to_string();
      if (b.s) {
        report.checks.push_back(
            compare(zw + " = s I", z, Matrix<Scalar>::scalar(z.degree(), *b.s)));
      }
      for (auto const& g : b.hnn.generators()) {
        report.checks.push_back(
            compare(zw + " commutes with " + g.name, z * g.image, g.image * z));
      }
      auto const word = canonical_center_word(m);
      auto const c    = b.canonical.eval(b.canonical.parse(word));
      for (auto const& g : b.canonical.generators()) {
        report.checks.push_back(
            compare(word + " commutes with " + g.name, c * g.image, g.image * c));
      }
      return report;
    }

    template <typename Scalar>
    SuiteReport faithfulness(Built<Scalar> const& b, SuiteParams const& p) {
      SuiteReport report;
      auto const  probe = probe_faithfulness(b.hnn, p.max_len, p.workers);
      std::string detail;
      for (auto const& c : probe.counterexamples) {
        detail += (detail.empty() ? "" : "; ") + c;
      }
      report.checks.push_back(SuiteCheck{
          "eval(w) = I iff w = 1 for |w| <= " + std::to_string(p.max_len),
          probe.counterexample_count == 0,
          detail});
      report.extra["maxLength"]           = probe.max_length;
      report.extra["wordsChecked"]        = probe.words_checked;
      report.extra["identityImages"]      = probe.identity_images;
      report.extra["trivialNormalForms"]  = probe.trivial_normal_forms;
      report.extra["counterexampleCount"] = probe.counterexample_count;
      report.extra["counterexamples"]     = probe.counterexamples;
      return report;
    }

    template <typename Scalar>
    SuiteReport dispatch(std::string_view suite, Built<Scalar> const& b,
                         SuiteParams const& p) {
      if (suite == "relations") {
        return relations(b, p.m);
      }
      if (suite == "center") {
        return center(b, p.m);
      }
      return faithfulness(b, p);
    }

    SuiteReport golden() {
      SuiteReport report;
      auto const  shown    = golden_table_displayed();
      auto const  computed = golden_table_computed();
      for (std::size_t k = 0; k < shown.entries.size(); ++k) {
        auto check = compare(shown.entries[k].first, computed.entries[k].second,
                             shown.entries[k].second);
        if (!check.passed) {
          check.detail = "computed vs displayed at " + check.detail;
        }
        report.checks.push_back(std::move(check));
      }
      report.group = "A(3)";
      report.ring  = "laurent";
      return report;
    }

  }  // namespace

  bool SuiteReport::passed() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  std::string SuiteReport::text() const {
    std::string out = "suite " + suite + ": " + group + " over " + ring + "\n";
    for (auto const& c : checks) {
      out += std::string(c.passed ? "  ok    " : "  FAIL  ") + c.label;
      if (!c.detail.empty()) {
        out += " [" + c.detail + "]";
      }
      out += "\n";
    }
    for (auto const& [key, value] : extra.items()) {
      out += "  " + key + ": " + value.dump() + "\n";
    }
    out += std::string("result: ") + (passed() ? "PASS" : "FAIL") + "\n";
    return out;
  }

  Json SuiteReport::to_json() const {
    Json list = Json::array();
    for (auto const& c : checks) {
      Json entry      = Json::object();
      entry["label"]  = c.label;
      entry["passed"] = c.passed;
      if (!c.detail.empty()) {
        entry["detail"] = c.detail;
      }
      list.push_back(std::move(entry));
    }
    Json out      = Json::object();
    out["suite"]  = suite;
    out["group"]  = group;
    out["ring"]   = ring;
    out["passed"] = passed();
    out["checks"] = std::move(list);
    for (auto const& [key, value] : extra.items()) {
      out[key] = value;
    }
    return out;
  }

  std::string canonical_center_word(long m) {
    if (m < 3) {
      throw InvalidArgument("A(m) needs m >= 3");
    }
    std::string xy;
    for (long k = 0; k < m / 2; ++k) {
      xy += "x y ";
    }
    if (m % 2 == 0) {
      return xy.substr(0, xy.size() - 1);
    }
    auto const half = xy + "x";
    return half + " " + half;
  }

  SuiteReport run_suite(std::string_view suite, SuiteParams const& p) {
    if (suite == "golden") {
      auto r  = golden();
      r.suite = "golden";
      return r;
    }
    if (suite != "relations" && suite != "center" && suite != "faithfulness") {
      throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
    }
    if (p.m < 3) {
      throw InvalidArgument("--m must be at least 3");
    }
    auto const spec = artin_spec(p.m);
    SuiteReport report;
    if (p.integer) {
      auto sigma = sigma_free<BigInt>(spec.rank, BigInt(p.lambda), BigInt(p.mu),
                                      default_sigma_basis(spec),
                                      RingDescriptor{RingKind::integer, 0});
      Built<BigInt> b{artin_integer(p.m, p.lambda, p.mu, BigInt(p.s)),
                      integer_hnn(spec, sigma, BigInt(p.s)),
                      std::nullopt};
      report = dispatch(suite, b, p);
      report.ring = "integer";
    } else if (p.symbolic) {
      auto const         params = symbolic_params();
      Built<LaurentPoly> b{artin(p.m, params), artin_hnn(p.m, params), params.s};
      report      = dispatch(suite, b, p);
      report.ring = "laurent";
    } else {
      auto const      params = qp_params(p.lambda, p.mu, p.s);
      Built<QpScalar> b{artin(p.m, params), artin_hnn(p.m, params), params.s};
      report      = dispatch(suite, b, p);
      report.ring = "qp(" + std::to_string(p.s) + ")";
    }
    report.suite = std::string(suite);
    report.group = "A(" + std::to_string(p.m) + ")";
    return report;
  }

}  // namespace linrep
