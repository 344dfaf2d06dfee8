// linefree: build, verify and tabulate the layered line-free sets in F_p^3.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linefree/linefree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kDefaultSeed = 20240917;

struct SetDeleter {
  void operator()(lf_pointset* s) const { lf_pointset_free(s); }
};
using SetHandle = std::unique_ptr<lf_pointset, SetDeleter>;

struct StringDeleter {
  void operator()(char* s) const { lf_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int report(lf_status st) {
  std::cerr << "error: " << lf_status_string(st) << ": " << lf_last_error() << '\n';
  return kExitUsage;
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

void print_progress(std::uint64_t done, std::uint64_t total, void*) {
  std::fprintf(stderr, "\r  %llu / %llu lines", static_cast<unsigned long long>(done),
               static_cast<unsigned long long>(total));
  if (done == total) std::fputc('\n', stderr);
}

std::string line_text(const nlohmann::json& w) {
  std::string out = "base (";
  for (std::size_t i = 0; i < w["base"].size(); ++i)
    out += (i ? "," : "") + std::to_string(w["base"][i].get<unsigned>());
  out += ") dir (";
  for (std::size_t i = 0; i < w["dir"].size(); ++i)
    out += (i ? "," : "") + std::to_string(w["dir"][i].get<unsigned>());
  return out + ")";
}

void print_summary(std::ostream& os, const nlohmann::json& cert) {
  const auto& pa = cert["params"];
  const auto& sz = cert["sizes"];
  const auto& ch = cert["checks"];
  os << "p = " << cert["p"] << "  (r=" << pa["r"] << ", s=" << pa["s"] << ", l=" << pa["l"]
     << (pa["degenerate"].get<bool>() ? ", degenerate: hypercube" : "") << ")\n";
  os << "  |S| = " << sz["s"] << "  |S*| = " << sz["s_star"] << "  removed = " << sz["removed"]
     << "  hypercube = " << sz["hypercube"] << "  complement = " << sz["complement"] << '\n';
  for (const char* name : {"structured_cases", "line_free", "complement_blocking"}) {
    const auto& v = ch[name];
    os << "  " << name << ": " << (v["ok"].get<bool>() ? "ok" : "FAILED") << " ("
       << v["lines_checked"] << " lines, " << v["probes"] << " probes)";
    if (!v["witness"].is_null()) os << "  witness " << line_text(v["witness"]);
    os << '\n';
  }
  for (const char* name : {"thm3_ok", "param_window_ok", "layer_formula_ok",
                           "size_accounting_ok", "matches_construction"})
    os << "  " << name << ": " << (ch[name].get<bool>() ? "ok" : "FAILED") << '\n';
}

struct VerifyArgs {
  std::string target;
  std::string out;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  bool progress = false;
};

// Runs every check on S(p) or on a set file. Summary goes to `summary`, the
// certificate to `out` (or stdout when empty).
int run_verify(const VerifyArgs& a, std::ostream& summary) {
  char* raw = nullptr;
  int passed = 0;
  lf_status st;
  const lf_progress_fn progress = a.progress ? print_progress : nullptr;
  if (is_number(a.target)) {
    st = lf_certify(std::stoull(a.target), a.jobs, a.seed, progress, nullptr, &raw, &passed);
  } else {
    lf_pointset* loaded = nullptr;
    if ((st = lf_pointset_load(a.target.c_str(), &loaded)) != LF_OK) return report(st);
    SetHandle set(loaded);
    st = lf_certify_pointset(set.get(), a.target.c_str(), a.jobs, a.seed, progress, nullptr,
                             &raw, &passed);
  }
  if (st != LF_OK) return report(st);
  CString text(raw);
  const auto cert = nlohmann::json::parse(text.get());
  print_summary(summary, cert);

  if (a.out.empty()) {
    std::cout << text.get() << '\n';
  } else {
    std::ofstream f(a.out);
    if (!(f << text.get() << '\n')) {
      std::cerr << "error: cannot write certificate to " << a.out << '\n';
      return kExitUsage;
    }
    summary << "certificate written to " << a.out << '\n';
  }
  summary << (passed ? "all checks passed" : "CHECKS FAILED") << '\n';
  return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered line-free sets in F_p^3: construction, exhaustive verification, bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lf_version()));

  // build
  auto* build = app.add_subcommand("build", "Build S for a prime p and write it to a file");
  std::uint64_t build_p = 0;
  std::string build_out, build_format = "auto";
  build->add_option("p", build_p, "Prime p >= 3")->required();
  build->add_option("output", build_out, "Output path")->required();
  build->add_option("--format", build_format, "auto (by extension), bin or text")
      ->check(CLI::IsMember({"auto", "bin", "text"}));

  // verify / certify
  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Check S(p) or a set file; prints the certificate JSON unless --out is given");
  verify->add_option("target", verify_args.target, "Prime p or a point set file")->required();
  verify->add_option("--out", verify_args.out, "Write the certificate here");

  VerifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "verify, then write the certificate to a file");
  certify->add_option("target", certify_args.target, "Prime p or a point set file")->required();
  certify->add_option("certificate", certify_args.out, "Certificate output path")->required();

  for (auto [cmd, args] : {std::pair{verify, &verify_args}, std::pair{certify, &certify_args}}) {
    cmd->add_option("--jobs,-j", args->jobs, "Verifier worker threads (0 = all cores)");
    cmd->add_option("--seed", args->seed, "Seed recorded in the certificate");
    cmd->add_flag("--progress", args->progress, "Report verifier progress on stderr");
  }

  // table
  auto* table = app.add_subcommand("table", "Bounds table for every prime in a range");
  std::uint64_t p_min = 0, p_max = 0;
  std::string table_format = "csv";
  bool no_verify = false;
  unsigned table_jobs = 1;
  table->add_option("p_min", p_min)->required();
  table->add_option("p_max", p_max)->required();
  table->add_option("format,--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--no-verify", no_verify, "Skip the line-freeness sweep");
  table->add_option("--jobs,-j", table_jobs, "Verifier worker threads (0 = all cores)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact maximum line-free set size by search");
  std::uint64_t oracle_p = 0, budget = 0, oracle_seed = 0;
  unsigned oracle_n = 2;
  oracle->add_option("p", oracle_p)->required();
  oracle->add_option("n", oracle_n, "Dimension, 2 or 3")->required();
  oracle->add_option("--budget", budget, "Node budget (0 = default)");
  oracle->add_option("--seed", oracle_seed, "Shuffle branching order (0 = lexicographic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*build) {
    lf_params params;
    if (auto st = lf_derive_params(build_p, &params); st != LF_OK) return report(st);
    lf_pointset* raw = nullptr;
    if (auto st = lf_build_s(build_p, &raw); st != LF_OK) return report(st);
    SetHandle s(raw);
    const lf_format fmt = build_format == "bin"    ? LF_FORMAT_BINARY
                          : build_format == "text" ? LF_FORMAT_TEXT
                                                   : LF_FORMAT_AUTO;
    if (auto st = lf_pointset_save(s.get(), build_out.c_str(), fmt); st != LF_OK)
      return report(st);
    lf_pointset* star_raw = nullptr;
    if (auto st = lf_build_s_star(build_p, &star_raw); st != LF_OK) return report(st);
    SetHandle star(star_raw);
    const std::uint64_t p = build_p;
    if (params.degenerate)
      std::cout << "degenerate parameters (l = 0): S is the hypercube [0, p-2]^3\n";
    std::cout << "p = " << p << "  r = " << params.r << "  s = " << params.s
              << "  l = " << params.l << '\n'
              << "|S*| = " << lf_pointset_cardinality(star.get())
              << "  removed = " << lf_pointset_cardinality(star.get()) - lf_pointset_cardinality(s.get())
              << "  |S| = " << lf_pointset_cardinality(s.get())
              << "  hypercube = " << (p - 1) * (p - 1) * (p - 1) << '\n'
              << "wrote " << build_out << '\n';
    return kExitOk;
  }

  if (*verify) return run_verify(verify_args, std::cerr);
  if (*certify) return run_verify(certify_args, std::cout);

  if (*table) {
    char* raw = nullptr;
    int all_ok = 0;
    const auto fmt = table_format == "json" ? LF_TABLE_JSON : LF_TABLE_CSV;
    if (auto st = lf_table(p_min, p_max, no_verify ? 0 : 1, table_jobs, fmt, &raw, &all_ok);
        st != LF_OK)
      return report(st);
    CString text(raw);
    std::cout << text.get();
    if (fmt == LF_TABLE_JSON) std::cout << '\n';
    if (!all_ok) {
      std::cerr << "check failed for at least one row\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  }

  if (*oracle) {
    lf_search_result res;
    if (auto st = lf_oracle(oracle_p, oracle_n, budget, oracle_seed, &res, nullptr); st != LF_OK)
      return report(st);
    std::uint64_t hyper = 1;
    for (unsigned i = 0; i < oracle_n; ++i) hyper *= oracle_p - 1;
    std::cout << "best_size = " << res.best_size << '\n'
              << "exact = " << (res.exact ? "true" : "false") << '\n'
              << "nodes = " << res.nodes_explored << '\n'
              << "hypercube (p-1)^n = " << hyper << "  matches = "
              << (res.best_size == hyper ? "true" : "false") << '\n';
    if (!res.exact)
      std::cerr << "warning: node budget exhausted; best_size is a lower bound only\n";
    return kExitOk;
  }
  return kExitUsage;
}
