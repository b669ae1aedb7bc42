// gotz: command-line front end over the C API.
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gotz/gotz.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int code;
  std::string message;
};

int exit_code(gotz_status s) {
  switch (s) {
    case GOTZ_OK: return 0;
    case GOTZ_ERR_ARGUMENT:
    case GOTZ_ERR_PARSE: return kExitUsage;
    case GOTZ_ERR_INVARIANT: return kExitInvariant;
    case GOTZ_ERR_INTERNAL: break;
  }
  return kExitInternal;
}

void check_status(gotz_status s) {
  if (s != GOTZ_OK) throw Failure{exit_code(s), gotz_last_error()};
}

std::string take(char* s) {
  std::unique_ptr<char, decltype(&gotz_string_free)> guard(s, gotz_string_free);
  return s;
}

template <class F>
json report(F&& call) {
  char* out = nullptr;
  check_status(call(&out));
  return json::parse(take(out));
}

// Input text from the positional argument, --file, or stdin for "-".
struct Source {
  std::string inline_text;
  std::string file;
  int n = 0;

  std::string read() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Failure{kExitUsage, "cannot read " + file};
      return {std::istreambuf_iterator<char>(in), {}};
    }
    if (inline_text == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    if (inline_text.empty()) throw Failure{kExitUsage, "no input given"};
    return inline_text;
  }
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("input", src.inline_text, "monomials, e.g. \"ab,ac,bd\" (\"-\" reads stdin)");
  cmd->add_option("-f,--file", src.file, "read the input from a file");
  cmd->add_option("--n", src.n, "number of variables (default: inferred)")->check(CLI::Range(1, 16));
}

int env_max_n() {
  if (const char* v = std::getenv("GOTZ_MAX_N")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "GOTZ_MAX_N is not an integer"};
    }
  }
  return 6;
}

void cap_n(int n) {
  const int cap = env_max_n();
  if (n > cap)
    throw Failure{kExitUsage, "n = " + std::to_string(n) + " exceeds GOTZ_MAX_N = " + std::to_string(cap)};
}

std::string join(const json& list) {
  if (list.empty()) return "0";
  std::string out;
  for (const auto& m : list) {
    if (!out.empty()) out += ',';
    out += m.get<std::string>();
  }
  return out;
}

std::string yes(const json& b) { return b.is_null() ? "n/a" : (b.get<bool>() ? "true" : "false"); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void print_check(const json& r) {
  std::cout << "ideal: " << join(r["gens"]) << "\n"
            << "ring: " << r["ring"].get<std::string>() << " (" << r["n"] << " variables)\n";
  for (const auto& d : r["diagnostics"]["degrees"])
    std::cout << "  degree " << d["degree"] << ": dim " << d["dim"] << ", shadow " << d["shadow"]
              << ", minimal growth " << d["minimal_growth"] << '\n';
  std::cout << "Gotzmann: " << yes(r["result"]["gotzmann"]) << '\n';
}

void print_classify(const json& r) {
  const auto& res = r["result"];
  std::cout << "ideal: " << join(r["gens"]) << "\n"
            << "Gotzmann in S: " << yes(res["gotzmann"]) << "\n"
            << "supernova form: "
            << (res["supernova"].is_null() ? std::string("none") : res["supernova"].get<std::string>())
            << '\n';
  if (!res["complex"].is_null()) {
    const auto& c = res["complex"];
    std::cout << "supernova complex: " << yes(c["supernova"]) << "\n"
              << "star-shaped: " << yes(c["star_shaped"]) << '\n';
  }
  std::cout << "linear form: " << yes(res["linear_form"]) << "\n"
            << "full support: " << yes(res["full_support"]) << '\n';
  if (!res["full_support_class"].is_null())
    std::cout << "class: " << res["full_support_class"].get<std::string>() << '\n';
  if (!res["canonical"].is_null())
    std::cout << "canonical: " << res["canonical"].get<std::string>() << '\n';
}

void print_lexify(const json& r) {
  const auto& d = r["diagnostics"];
  std::cout << "ideal: " << join(r["gens"]) << "\n"
            << "lex ideal in R: " << join(r["result"]["lex"]) << "\n"
            << "squarefree lex ideal in S: " << join(r["result"]["sqf_lex_in_S"]) << "\n"
            << "sqf Hilbert: " << d["sqf_hilbert"].dump() << "\n"
            << "generator counts: " << d["generator_counts"].dump() << " vs "
            << d["lex_generator_counts"].dump() << "\n"
            << "Gotzmann: " << yes(d["gotzmann"]) << '\n';
}

void print_count(const json& r, const std::string& format) {
  if (format == "json") return print_json(r);
  const char* cols[] = {"n", "supernova", "egf", "brute", "full_support", "full_support_egf", "agree"};
  auto cell = [](const json& v) {
    if (v.is_null()) return std::string("-");
    if (v.is_boolean()) return std::string(v.get<bool>() ? "yes" : "no");
    return v.dump();
  };
  if (format == "csv") {
    for (int k = 0; k < 7; ++k) std::cout << (k ? "," : "") << cols[k];
    std::cout << '\n';
    for (const auto& row : r["result"]) {
      for (int k = 0; k < 7; ++k) {
        const auto& v = row[cols[k]];
        std::cout << (k ? "," : "") << (v.is_null() ? std::string() : cell(v));
      }
      std::cout << '\n';
    }
    return;
  }
  for (int k = 0; k < 7; ++k) std::cout << std::setw(k ? 17 : 3) << cols[k];
  std::cout << '\n';
  for (const auto& row : r["result"]) {
    for (int k = 0; k < 7; ++k) std::cout << std::setw(k ? 17 : 3) << cell(row[cols[k]]);
    std::cout << '\n';
  }
  std::cout << "all agree: " << yes(r["diagnostics"]["all_agree"]) << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"Gotzmann squarefree monomial ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gotz_version()));

  bool as_json = false;
  bool quiet = false;

  Source check_src;
  std::string ring;
  auto* check = app.add_subcommand("check", "is the ideal Gotzmann in S or in R");
  add_source(check, check_src);
  check->add_option("--ring", ring, "S or R")->required()->check(CLI::IsMember({"S", "R"}));
  check->add_flag("--quiet", quiet, "no output; exit 0 if Gotzmann, 1 if not");
  check->add_flag("--json", as_json, "JSON report");

  Source classify_src;
  auto* classify = app.add_subcommand("classify", "supernova normal form of a squarefree ideal of S");
  add_source(classify, classify_src);
  classify->add_flag("--json", as_json, "JSON report");

  Source lexify_src;
  auto* lexify = app.add_subcommand("lexify", "lex ideal of R with the same squarefree Hilbert function");
  add_source(lexify, lexify_src);
  lexify->add_flag("--json", as_json, "JSON report");

  Source dual_src;
  bool dual_space = false;
  auto* dual = app.add_subcommand("dual", "Alexander dual of an ideal of R, or of a space with --space");
  add_source(dual, dual_src);
  dual->add_flag("--space", dual_space, "treat the input as one graded component");

  Source decompose_src;
  std::optional<std::string> decompose_var;
  auto* decompose = app.add_subcommand("decompose", "x_i-decomposition of a space of R");
  add_source(decompose, decompose_src);
  decompose->add_option("--var", decompose_var, "variable x_i (default: most frequent)");

  Source compress_src;
  std::string compress_var;
  std::optional<std::string> compress_order;
  auto* compress = app.add_subcommand("compress", "x_i-compression of a space of R");
  add_source(compress, compress_src);
  compress->add_option("--var", compress_var, "variable x_i")->required();
  compress->add_option("--order", compress_order, "order on the remaining variables, e.g. bcde");

  int enum_n = 0;
  std::string enum_output;
  auto* enumerate = app.add_subcommand("enumerate", "every Gotzmann squarefree ideal of S");
  enumerate->add_option("--n", enum_n, "number of variables")->required()->check(CLI::Range(0, 16));
  enumerate->add_option("-o,--output", enum_output, "write stanzas to this file");

  int max_n = 5;
  std::string format = "table";
  auto* count = app.add_subcommand("count", "Gotzmann squarefree ideals counted three ways");
  count->add_option("--max-n", max_n, "largest n")->check(CLI::Range(0, 16));
  count->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  int order = 12;
  auto* series = app.add_subcommand("series", "coefficients of the counting generating functions");
  series->add_option("--order", order, "truncation order")->check(CLI::Range(0, 40));

  auto* selftest = app.add_subcommand("selftest", "worked-example regression suite");
  selftest->add_flag("--json", as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (*check) {
    const auto text = check_src.read();
    const auto r = report([&](char** o) {
      return gotz_report_check(text.c_str(), check_src.n, ring == "R" ? GOTZ_RING_R : GOTZ_RING_S, o);
    });
    const bool result = r["result"]["gotzmann"].get<bool>();
    if (quiet) return result ? 0 : kExitFalse;
    as_json ? print_json(r) : print_check(r);
  } else if (*classify) {
    const auto text = classify_src.read();
    const auto r = report([&](char** o) { return gotz_report_classify(text.c_str(), classify_src.n, o); });
    as_json ? print_json(r) : print_classify(r);
  } else if (*lexify) {
    const auto text = lexify_src.read();
    const auto r = report([&](char** o) { return gotz_report_lexify(text.c_str(), lexify_src.n, o); });
    as_json ? print_json(r) : print_lexify(r);
  } else if (*dual) {
    const auto text = dual_src.read();
    print_json(report([&](char** o) {
      return dual_space ? gotz_report_dual_space(text.c_str(), dual_src.n, o)
                        : gotz_report_dual(text.c_str(), dual_src.n, o);
    }));
  } else if (*decompose) {
    const auto text = decompose_src.read();
    print_json(report([&](char** o) {
      return gotz_report_decompose(text.c_str(), decompose_src.n,
                                   decompose_var ? decompose_var->c_str() : nullptr, o);
    }));
  } else if (*compress) {
    const auto text = compress_src.read();
    print_json(report([&](char** o) {
      return gotz_report_compress(text.c_str(), compress_src.n, compress_var.c_str(),
                                  compress_order ? compress_order->c_str() : nullptr, o);
    }));
  } else if (*enumerate) {
    cap_n(enum_n);
    gotz_ideal_list* list = nullptr;
    check_status(gotz_enumerate(enum_n, &list));
    std::unique_ptr<gotz_ideal_list, decltype(&gotz_ideal_list_free)> guard(list, gotz_ideal_list_free);
    char* raw = nullptr;
    check_status(gotz_ideal_list_format(list, &raw));
    const auto text = take(raw);
    if (enum_output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(enum_output);
      if (!(out << text)) throw Failure{kExitUsage, "cannot write " + enum_output};
      std::cerr << "wrote " << gotz_ideal_list_size(list) << " ideals to " << enum_output << '\n';
    }
  } else if (*count) {
    cap_n(max_n);
    print_count(report([&](char** o) { return gotz_report_count(max_n, o); }), format);
  } else if (*series) {
    print_json(report([&](char** o) { return gotz_report_series(order, o); }));
  } else if (*selftest) {
    const auto r = report([](char** o) { return gotz_report_selftest(o); });
    if (as_json) {
      print_json(r);
    } else {
      for (const auto& c : r["result"]) {
        std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        if (!c["detail"].get<std::string>().empty()) std::cout << ": " << c["detail"].get<std::string>();
        std::cout << '\n';
      }
    }
    if (r["diagnostics"]["failed"].get<int>() > 0) return kExitInvariant;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
