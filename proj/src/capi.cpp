// linrep - exact linear representations of HNN-extensions and Artin groups

#include "linrep/linrep.h"

#include <cstdlib>
#include <cstring>
#include <variant>

#include "linrep/errors.hpp"
#include "linrep/serialize.hpp"
#include "linrep/splittable.hpp"
#include "linrep/suites.hpp"

using namespace linrep;

struct lr_rep {
  std::variant<Representation<LaurentPoly>, Representation<QpScalar>, Representation<BigInt>>
      value;
};

namespace {

  thread_local std::string last_error;

  lr_status fail(lr_status status, std::string message) {
    last_error = std::move(message);
    return status;
  }

  template <typename F>
  lr_status guard(F&& f) {
    try {
      last_error.clear();
      return f();
    } catch (ParseError const& e) {
      return fail(LR_PARSE_ERROR, e.what());
    } catch (VerificationFailure const& e) {
      return fail(LR_VERIFICATION_FAILED, e.what());
    } catch (InvalidArgument const& e) {
      return fail(LR_INVALID_ARGUMENT, e.what());
    } catch (nlohmann::json::exception const& e) {
      return fail(LR_PARSE_ERROR, e.what());
    } catch (std::exception const& e) {
      return fail(LR_INTERNAL_ERROR, e.what());
    }
  }

  char* copy(std::string const& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void put(char** dst, std::string const& s) {
    if (dst != nullptr) {
      *dst = copy(s);
    }
  }

  void require(void const* p, char const* what) {
    if (p == nullptr) {
      throw InvalidArgument(std::string(what) + " must not be null");
    }
  }

  SuiteParams suite_params(lr_artin_params const& p) {
    SuiteParams out;
    out.m        = p.m;
    out.symbolic = p.symbolic != 0;
    out.lambda   = p.lambda;
    out.mu       = p.mu;
    out.s        = p.s;
    out.integer  = p.integer != 0;
    return out;
  }

  MixedWord parse_artin_word(HnnSpec const& spec, long m, char const* text) {
    auto const                       canon = artin_canonical(m);
    std::map<std::string, MixedWord> aliases{{"x", canon.x}, {"y", canon.y}};
    return MixedWord::parse(spec.rank, text, &aliases);
  }

}  // namespace

extern "C" {

const char* lr_last_error(void) {
  return last_error.c_str();
}

void lr_string_free(char* s) {
  std::free(s);
}

lr_status lr_artin_build(const lr_artin_params* params, lr_rep** out) {
  return guard([&] {
    require(params, "params");
    require(out, "out");
    auto const& p = *params;
    if (p.m < 3) {
      throw InvalidArgument("m must be at least 3");
    }
    auto rep = std::make_unique<lr_rep>();
    if (p.integer) {
      rep->value = artin_integer(p.m, p.lambda, p.mu, BigInt(p.s));
    } else if (p.symbolic) {
      rep->value = artin(p.m, symbolic_params());
    } else {
      rep->value = artin(p.m, qp_params(p.lambda, p.mu, p.s));
    }
    *out = rep.release();
    return LR_OK;
  });
}

lr_status lr_rep_from_json(const char* json, lr_rep** out) {
  return guard([&] {
    require(json, "json");
    require(out, "out");
    auto const doc  = parse_json(json);
    auto const ring = ring_from_json(doc.at("ring"));
    auto       rep  = std::make_unique<lr_rep>();
    switch (ring.kind) {
      case RingKind::laurent:
        rep->value = representation_from_json<LaurentPoly>(doc);
        break;
      case RingKind::qp:
        rep->value = representation_from_json<QpScalar>(doc);
        break;
      case RingKind::integer:
        rep->value = representation_from_json<BigInt>(doc);
        break;
      case RingKind::rational:
        throw ParseError("representations over the rationals are not supported");
    }
    *out = rep.release();
    return LR_OK;
  });
}

lr_status lr_rep_to_json(const lr_rep* rep, char** out) {
  return guard([&] {
    require(rep, "rep");
    require(out, "out");
    std::visit([&](auto const& r) { *out = copy(dump_json(representation_to_json(r))); },
               rep->value);
    return LR_OK;
  });
}

lr_status lr_rep_degree(const lr_rep* rep, size_t* out) {
  return guard([&] {
    require(rep, "rep");
    require(out, "out");
    std::visit([&](auto const& r) { *out = r.degree(); }, rep->value);
    return LR_OK;
  });
}

lr_status lr_rep_eval(const lr_rep* rep, const char* word, char** out) {
  return guard([&] {
    require(rep, "rep");
    require(word, "word");
    require(out, "out");
    std::visit(
        [&](auto const& r) {
          *out = copy(dump_json(matrix_to_json(r.eval(r.parse(word)), r.ring())));
        },
        rep->value);
    return LR_OK;
  });
}

void lr_rep_free(lr_rep* rep) {
  delete rep;
}

lr_status lr_check_suite(const char*            suite,
                         const lr_artin_params* params,
                         size_t                 max_len,
                         unsigned               workers,
                         int*                   passed,
                         char**                 text,
                         char**                 json) {
  return guard([&] {
    require(suite, "suite");
    require(params, "params");
    require(passed, "passed");
    auto p    = suite_params(*params);
    p.max_len = max_len;
    p.workers = workers;
    auto const report = run_suite(suite, p);
    *passed           = report.passed() ? 1 : 0;
    put(text, report.text());
    put(json, dump_json(report.to_json()));
    return LR_OK;
  });
}

lr_status lr_word_normal_form(long m, const char* word, char** out) {
  return guard([&] {
    require(word, "word");
    require(out, "out");
    auto const spec = artin_spec(m);
    *out            = copy(normal_form(spec, parse_artin_word(spec, m, word)).to_string());
    return LR_OK;
  });
}

lr_status lr_word_equal(long m, const char* word, const char* word2, int* equal_out) {
  return guard([&] {
    require(word, "word");
    require(word2, "word2");
    require(equal_out, "equal");
    auto const spec = artin_spec(m);
    *equal_out
        = equal(spec, parse_artin_word(spec, m, word), parse_artin_word(spec, m, word2))
              ? 1
              : 0;
    return LR_OK;
  });
}

lr_status lr_splittable_run(const char* g_json,
                            const char* phi_json,
                            const char* tau,
                            size_t      sample_len,
                            size_t      max_len,
                            int*        passed,
                            char**      rep_json,
                            char**      text,
                            char**      report_json) {
  return guard([&] {
    require(g_json, "g_json");
    require(passed, "passed");
    auto const        g = gens_from_json(parse_json(g_json));
    SplittableOptions options;
    options.sample_length = sample_len;

    std::string   mode;
    SplittableRep rep;
    if (tau != nullptr && std::string_view(tau) != "inner") {
      throw InvalidArgument("unknown tau '" + std::string(tau) + "'; expected inner");
    }
    if (phi_json == nullptr && tau == nullptr) {
      mode = "trivial Phi";
      rep  = build_rep(MatrixGroupGens(1, {}), g, TauOracle::trivial(g.degree()), options);
    } else if (phi_json == nullptr) {
      mode = "Int(G)";
      rep  = int_g_rep(g, options);
    } else if (tau == nullptr) {
      throw InvalidArgument("a Phi generator file needs a tau");
    } else {
      auto const phi = gens_from_json(parse_json(phi_json));
      if (phi.size() != g.size()) {
        throw InvalidArgument("tau inner pairs the Phi generators with the G generators;"
                              " their counts differ");
      }
      std::vector<TauValue> values;
      for (auto const& w : g.generators()) {
        values.push_back(TauValue{w.matrix, w.inverse});
      }
      if (phi.degree() == g.degree() * g.degree()) {
        options.action = matrix_space_action(g.degree());
      }
      mode = "given Phi";
      rep  = build_rep(phi, g, TauOracle(g.degree(), std::move(values)), options);
    }

    auto const report = verify_rep(rep, max_len);
    *passed           = report.passed() ? 1 : 0;
    put(rep_json, dump_json(splittable_to_json(export_splittable(rep))));

    auto const& group = rep.group();
    Json        r     = Json::object();
    r["mode"]                 = mode;
    r["mDegree"]              = group.m();
    r["nDegree"]              = group.n();
    r["degree"]               = rep.degree();
    r["bound"]                = rep.bound();
    r["sampleSize"]           = rep.sample_size();
    r["freshSize"]            = rep.fresh_size();
    if (rep.contract()) {
      r["contractWordsChecked"] = rep.contract()->words_checked;
    }
    r["maxLength"]            = report.max_length;
    r["pairsChecked"]         = report.pairs_checked;
    r["homomorphismFailures"] = report.homomorphism_failures;
    r["wordsChecked"]         = report.words_checked;
    r["identityActions"]      = report.identity_actions;
    r["injectivityFailures"]  = report.injectivity_failures;
    r["recoveryFailures"]     = report.recovery_failures;
    r["failures"]             = report.failures;
    r["passed"]               = report.passed();
    put(report_json, dump_json(r));

    std::string t;
    t += "splittable (" + mode + "): m = " + std::to_string(group.m())
         + ", n = " + std::to_string(group.n()) + "\n";
    t += "  basis dimension " + std::to_string(rep.degree()) + " (bound m^2 + n^4 = "
         + std::to_string(rep.bound()) + ")\n";
    t += "  sample " + std::to_string(rep.sample_size()) + " elements, fresh check "
         + std::to_string(rep.fresh_size()) + "\n";
    if (rep.contract()) {
      t += "  tau contract held on " + std::to_string(rep.contract()->words_checked)
           + " cases\n";
    }
    t += "  homomorphism: " + std::to_string(report.pairs_checked) + " pairs, "
         + std::to_string(report.homomorphism_failures) + " failures\n";
    t += "  injectivity: " + std::to_string(report.words_checked) + " words up to length "
         + std::to_string(report.max_length) + ", "
         + std::to_string(report.injectivity_failures + report.recovery_failures)
         + " failures\n";
    for (auto const& f : report.failures) {
      t += "  FAIL  " + f + "\n";
    }
    t += std::string("result: ") + (report.passed() ? "PASS" : "FAIL") + "\n";
    put(text, t);
    return LR_OK;
  });
}

}  // extern "C"
