// linrep - exact linear representations of HNN-extensions and Artin groups
//
// Command-line front end over the C interface. Exit codes: 0 success,
// 1 verification failure (report on stdout), 2 parse or validation error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "linrep/linrep.h"

namespace {

  constexpr int kOk       = 0;
  constexpr int kFailed   = 1;
  constexpr int kBadInput = 2;

  struct Owned {
    char* p = nullptr;
    ~Owned() {
      lr_string_free(p);
    }
    std::string str() const {
      return p != nullptr ? std::string(p) : std::string();
    }
  };

  int report_status(lr_status status) {
    if (status == LR_VERIFICATION_FAILED) {
      std::cout << "verification failed: " << lr_last_error() << "\n";
      return kFailed;
    }
    std::cerr << "error: " << lr_last_error() << "\n";
    return status == LR_INTERNAL_ERROR ? kFailed : kBadInput;
  }

  bool write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << path << "\n";
      return false;
    }
    return true;
  }

  std::optional<std::string> read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << path << "\n";
      return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  struct RingFlags {
    bool                         symbolic = false;
    std::optional<long>          lambda;
    std::optional<long>          mu;
    std::optional<unsigned long> s;
    bool                         integer = false;

    void add(CLI::App* app) {
      app->add_flag("--symbolic", symbolic, "entries in Z[lambda, mu, s^+-1]");
      app->add_option("--lambda", lambda, "integer value of lambda");
      app->add_option("--mu", mu, "integer value of mu");
      app->add_option("--s", s, "prime p for Q_p, or the shear for --integer");
      app->add_flag("--integer", integer, "the SL representation over Z");
    }

    // Numeric values default to lambda = mu = 2, s = 5.
    std::optional<lr_artin_params> resolve(long m) const {
      bool const numeric = lambda || mu || s;
      if (symbolic && (numeric || integer)) {
        std::cerr << "error: --symbolic excludes --lambda, --mu, --s and --integer\n";
        return std::nullopt;
      }
      lr_artin_params p{};
      p.m        = m;
      p.symbolic = !numeric && !integer;
      p.lambda   = lambda.value_or(2);
      p.mu       = mu.value_or(2);
      p.s        = s.value_or(5);
      p.integer  = integer ? 1 : 0;
      return p;
    }
  };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linear representations of HNN-extensions and Artin groups"};
  app.require_subcommand(1);

  // build
  auto*       build = app.add_subcommand("build", "emit a representation as JSON");
  std::string group = "artin";
  long        build_m = 0;
  std::string build_out;
  RingFlags   build_ring;
  build->add_option("--group", group, "group family")->check(CLI::IsMember({"artin"}));
  build->add_option("--m", build_m, "Artin parameter m >= 3")->required();
  build->add_option("--out", build_out, "output path")->required();
  build_ring.add(build);

  // check
  auto*       check = app.add_subcommand("check", "run a verification suite");
  std::string suite;
  long        check_m       = 0;
  std::size_t check_max_len = 4;
  unsigned    workers       = 0;
  std::string check_report;
  RingFlags   check_ring;
  check->add_option("--suite", suite, "relations, golden, center or faithfulness")
      ->required()
      ->check(CLI::IsMember({"relations", "golden", "center", "faithfulness"}));
  check->add_option("--m", check_m, "Artin parameter m >= 3");
  check->add_option("--max-len", check_max_len, "word length for the faithfulness probe");
  check->add_option("--workers", workers, "probe threads (0: hardware)");
  check->add_option("--json-report", check_report, "write the JSON report here");
  check_ring.add(check);

  // word
  auto*       word = app.add_subcommand("word", "normal forms and equality in A(m)");
  std::string op;
  long        word_m = 0;
  std::string w1;
  std::optional<std::string> w2;
  word->add_option("--op", op, "normal-form or equal")
      ->required()
      ->check(CLI::IsMember({"normal-form", "equal"}));
  word->add_option("--m", word_m, "Artin parameter m >= 3")->required();
  word->add_option("--word", w1, "word over x0.., t, x, y")->required();
  word->add_option("--word2", w2, "second word for equal");

  // splittable
  auto* split = app.add_subcommand("splittable", "representation of Phi x| G");
  std::string g_path;
  std::optional<std::string> phi_path;
  std::optional<std::string> tau;
  std::size_t sample_len = 4;
  std::size_t split_max_len = 3;
  std::string split_out;
  std::string split_report;
  split->add_option("--g", g_path, "G generators (JSON)")->required();
  split->add_option("--phi", phi_path, "Phi generators (JSON)");
  split->add_option("--tau", tau, "tau oracle")->check(CLI::IsMember({"inner"}));
  split->add_option("--sample-len", sample_len, "evaluation sample word length");
  split->add_option("--max-len", split_max_len, "verification word length");
  split->add_option("--out", split_out, "write the representation here");
  split->add_option("--json-report", split_report, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kBadInput;
  }

  if (build->parsed()) {
    auto params = build_ring.resolve(build_m);
    if (!params) {
      return kBadInput;
    }
    lr_rep* rep = nullptr;
    if (auto st = lr_artin_build(&*params, &rep); st != LR_OK) {
      return report_status(st);
    }
    std::unique_ptr<lr_rep, decltype(&lr_rep_free)> guard(rep, &lr_rep_free);
    Owned  json;
    size_t degree = 0;
    if (auto st = lr_rep_to_json(rep, &json.p); st != LR_OK) {
      return report_status(st);
    }
    lr_rep_degree(rep, &degree);
    if (!write_file(build_out, json.str())) {
      return kBadInput;
    }
    std::cout << "A(" << build_m << ") degree " << degree << " written to " << build_out
              << "\n";
    return kOk;
  }

  if (check->parsed()) {
    if (suite != "golden" && check->count("--m") == 0) {
      std::cerr << "error: --m is required for suite " << suite << "\n";
      return kBadInput;
    }
    auto params = check_ring.resolve(suite == "golden" ? 3 : check_m);
    if (!params) {
      return kBadInput;
    }
    int   passed = 0;
    Owned text, json;
    auto  st = lr_check_suite(suite.c_str(), &*params, check_max_len, workers, &passed,
                              &text.p, &json.p);
    if (st != LR_OK) {
      return report_status(st);
    }
    std::cout << text.str();
    if (!check_report.empty() && !write_file(check_report, json.str())) {
      return kBadInput;
    }
    return passed ? kOk : kFailed;
  }

  if (word->parsed()) {
    if (op == "normal-form") {
      Owned out;
      if (auto st = lr_word_normal_form(word_m, w1.c_str(), &out.p); st != LR_OK) {
        return report_status(st);
      }
      std::cout << out.str() << "\n";
      return kOk;
    }
    if (!w2) {
      std::cerr << "error: --op equal needs --word2\n";
      return kBadInput;
    }
    int eq = 0;
    if (auto st = lr_word_equal(word_m, w1.c_str(), w2->c_str(), &eq); st != LR_OK) {
      return report_status(st);
    }
    std::cout << (eq ? "equal" : "not equal") << "\n";
    return kOk;
  }

  // splittable
  auto g_text = read_file(g_path);
  if (!g_text) {
    return kBadInput;
  }
  std::optional<std::string> phi_text;
  if (phi_path) {
    phi_text = read_file(*phi_path);
    if (!phi_text) {
      return kBadInput;
    }
  }
  int   passed = 0;
  Owned rep_json, text, report_json;
  auto  st = lr_splittable_run(g_text->c_str(),
                              phi_text ? phi_text->c_str() : nullptr,
                              tau ? tau->c_str() : nullptr,
                              sample_len,
                              split_max_len,
                              &passed,
                              &rep_json.p,
                              &text.p,
                              &report_json.p);
  if (st != LR_OK) {
    return report_status(st);
  }
  std::cout << text.str();
  if (!split_out.empty() && !write_file(split_out, rep_json.str())) {
    return kBadInput;
  }
  if (!split_report.empty() && !write_file(split_report, report_json.str())) {
    return kBadInput;
  }
  return passed ? kOk : kFailed;
}
