#include "dunkl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

#include "dunkl/exprparse.hpp"
#include "dunkl/identities.hpp"
#include "dunkl/oracle.hpp"

namespace dunkl {

std::vector<int> parse_k_list(const std::string& spec) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("bad k list '" + spec + "'");
    return std::stoi(s);
  };
  std::vector<int> ks;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      ks.push_back(number(item));
      continue;
    }
    const int lo = number(item.substr(0, dots));
    const int hi = number(item.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty k range '" + item + "'");
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
  }
  if (ks.empty()) throw std::invalid_argument("empty k list");
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

int max_k_from_env() {
  const char* v = std::getenv("DUNKL_MAX_K");
  if (!v || !*v) return kDefaultMaxK;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1 || n > 1000) throw std::invalid_argument(std::string("bad DUNKL_MAX_K '") + v + "'");
  return static_cast<int>(n);
}

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Row {
  CheckReport report;
  std::optional<OracleReport> oracle;
};

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string oracle_status(const Row& r) {
  if (!r.oracle || r.oracle->trials == 0) return "skipped";
  return r.oracle->pass ? "pass" : "fail";
}

nlohmann::ordered_json row_json(const Row& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.report.check_id;
  j["k"] = r.report.k;
  j["status"] = to_string(r.report.status);
  j["residual_term_count"] = r.report.residual_term_count;
  j["residual_sample"] = r.report.residual_sample;
  j["elapsed_ms"] = r.report.elapsed_ms;
  if (r.oracle) {
    j["oracle_status"] = oracle_status(r);
    j["oracle_trials"] = r.oracle->trials;
    j["oracle_failed_trials"] = r.oracle->failed_trials;
    j["oracle_max_deviation"] = r.oracle->max_deviation;
  }
  return j;
}

std::string row_text(const Row& r) {
  std::ostringstream s;
  s << std::left << std::setw(8) << to_string(r.report.status) << "k=" << std::setw(3) << r.report.k
    << std::setw(36) << r.report.check_id << "terms=" << std::setw(5) << r.report.residual_term_count
    << r.report.elapsed_ms << " ms";
  if (r.oracle) {
    s << "  oracle " << oracle_status(r);
    if (r.oracle->trials > 0)
      s << " (" << r.oracle->failed_trials << "/" << r.oracle->trials << " failed, max dev "
        << fmt_double(r.oracle->max_deviation) << ")";
  }
  if (!r.report.residual_sample.empty()) s << "\n        residual " << r.report.residual_sample;
  return s.str();
}

bool row_failed(const Row& r) {
  return r.report.status == Status::Fail || (r.oracle && r.oracle->trials > 0 && !r.oracle->pass);
}

OracleConfig oracle_config(const RunConfig& cfg) {
  OracleConfig oc;
  oc.trials = cfg.trials;
  oc.tol = cfg.tol;
  oc.seed = cfg.seed;
  return oc;
}

void check_config(const RunConfig& cfg) {
  for (int k : cfg.k_list)
    if (k < 1 || k > cfg.max_k)
      throw UsageError("k=" + std::to_string(k) + " outside [1, " + std::to_string(cfg.max_k) + "]");
  if (cfg.trials < 1) throw UsageError("--trials must be >= 1");
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const std::vector<CheckCase> cases = suite_cases(cfg.k_list, cfg.suite_filter, cfg.mut, cfg.max_k);
  if (cases.empty()) throw UsageError("suite '" + cfg.suite_filter + "' selects no checks");

  const bool stream = !cfg.json && cfg.out_path.empty();
  const OracleConfig oc = oracle_config(cfg);
  std::vector<Row> rows(cases.size());
  std::mutex io;
  parallel_for(cases.size(), [&](std::size_t t) {
    Row r{evaluate(cases[t]), std::nullopt};
    if (cfg.oracle) r.oracle = numeric_check(cases[t], oc);
    if (stream) {
      std::lock_guard<std::mutex> lock(io);
      out << row_text(r) << '\n' << std::flush;
    }
    rows[t] = std::move(r);
  });
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return report_less(x.report, y.report); });

  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const Row& r : rows) {
    if (row_failed(r))
      ++fail;
    else if (r.report.status == Status::Skipped)
      ++skipped;
    else
      ++pass;
  }

  std::string body;
  if (cfg.json) {
    auto arr = nlohmann::ordered_json::array();
    for (const Row& r : rows) arr.push_back(row_json(r));
    body = arr.dump(2) + "\n";
  } else if (!stream) {
    for (const Row& r : rows) body += row_text(r) + "\n";
  }
  const std::string summary = std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
                              std::to_string(skipped) + " skipped\n";
  if (cfg.out_path.empty()) {
    out << body;
    if (!cfg.json) out << summary;
  } else {
    std::ofstream f(cfg.out_path);
    if (!f) throw UsageError("cannot write " + cfg.out_path);
    f << body;
    if (!cfg.json) f << summary;
    out << summary;
  }
  return fail ? kExitFail : 0;
}

// Prints f(k) for every k, prefixed with the k when there are several.
template <class F>
int for_each_k(const RunConfig& cfg, std::ostream& out, F&& f) {
  check_config(cfg);
  int code = 0;
  for (int k : cfg.k_list) {
    const FieldPtr ctx = ctx_new(k, cfg.max_k);
    if (cfg.k_list.size() > 1) out << "k=" << k << ": ";
    code = std::max(code, f(ctx, out));
  }
  return code;
}

OpExpr parse_arg(const std::string& text, const FieldPtr& ctx) {
  try {
    return parse_op(text, ctx);
  } catch (const ParseError& e) {
    throw UsageError(e.annotate(text));
  }
}

OpSum parse_words(const std::string& text, const FieldPtr& ctx) {
  try {
    return elaborate_words(parse(text), ctx);
  } catch (const ParseError& e) {
    throw UsageError(e.annotate(text));
  }
}

int cmd_oracle_suite(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const std::vector<CheckCase> cases = suite_cases(cfg.k_list, cfg.suite_filter, cfg.mut, cfg.max_k);
  if (cases.empty()) throw UsageError("suite '" + cfg.suite_filter + "' selects no checks");
  const OracleConfig oc = oracle_config(cfg);
  std::vector<OracleReport> reps(cases.size());
  parallel_for(cases.size(), [&](std::size_t t) { reps[t] = numeric_check(cases[t], oc); });
  int code = 0;
  for (std::size_t t = 0; t < cases.size(); ++t) {
    Row r{CheckReport{cases[t].id, cases[t].k, cases[t].applicable ? Status::Pass : Status::Skipped, 0, "", 0},
          reps[t]};
    const std::string st = oracle_status(r);
    out << std::left << std::setw(8) << st << "k=" << std::setw(3) << cases[t].k << std::setw(36) << cases[t].id;
    if (reps[t].trials > 0)
      out << reps[t].failed_trials << "/" << reps[t].trials << " failed, max dev " << fmt_double(reps[t].max_deviation);
    out << '\n';
    if (st == "fail") code = kExitFail;
  }
  return code;
}

void add_k_option(CLI::App* sub, std::string& k_spec, bool required = true) {
  auto* opt = sub->add_option("-k,--k", k_spec, "values of k, e.g. 3, 1..6 or 1,3,5");
  if (required) opt->required();
}

void add_oracle_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--trials", cfg.trials, "numeric trials per relation")->capture_default_str();
  sub->add_option("--tol", cfg.tol, "relative tolerance")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric checks for dihedral Dunkl operators in polar coordinates", "dunkl"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expanded help");

  RunConfig cfg;
  std::string k_spec;
  std::string mutate = "none";
  std::optional<int> max_k_flag;
  app.add_option("--max-k", max_k_flag, "largest admissible k (env DUNKL_MAX_K)");

  std::vector<std::string> mutation_names;
  for (Mutation m : {Mutation::None, Mutation::BShift, Mutation::DropRSummand, Mutation::RScale, Mutation::SScale,
                     Mutation::TrigShift, Mutation::XPotential})
    mutation_names.push_back(to_string(m));

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  add_k_option(verify, k_spec);
  verify->add_option("--suite", cfg.suite_filter, "all, trig, odd, even, a check id or a glob, comma separated")
      ->capture_default_str();
  verify->add_flag("--json", cfg.json, "emit a JSON array of reports");
  verify->add_option("--out", cfg.out_path, "write the report to a file");
  verify->add_flag("--oracle", cfg.oracle, "also run the numeric oracle on every row");
  verify->add_option("--mutate", mutate, "build operators with a deliberate defect")
      ->check(CLI::IsMember(mutation_names))
      ->capture_default_str();
  add_oracle_options(verify, cfg);

  std::string op_name;
  auto* show = app.add_subcommand("show", "print a named operator");
  add_k_option(show, k_spec);
  show->add_option("--op", op_name, "R, I, S, Dr, Dphi, Hk, HkExt or Xk")->required();

  std::vector<std::string> exprs;
  auto* norm = app.add_subcommand("norm", "normal form of an expression");
  add_k_option(norm, k_spec);
  norm->add_option("expr", exprs, "operator expression")->required()->expected(1);

  bool anti = false;
  auto* commute = app.add_subcommand("commute", "commutator [X, Y]");
  add_k_option(commute, k_spec);
  commute->add_option("exprs", exprs, "X Y")->required()->expected(2);
  commute->add_flag("--anti", anti, "anticommutator {X, Y} instead");

  auto* adjoint_cmd = app.add_subcommand("adjoint", "formal adjoint for the measure r dr dphi");
  add_k_option(adjoint_cmd, k_spec);
  adjoint_cmd->add_option("expr", exprs, "operator expression")->required()->expected(1);

  auto* project = app.add_subcommand("project", "replace R and I by 1 after normal ordering");
  add_k_option(project, k_spec);
  project->add_option("expr", exprs, "operator expression")->required()->expected(1);

  bool symmetric = false;
  auto* oracle = app.add_subcommand("oracle", "numeric comparison of two expressions, or of suite checks");
  add_k_option(oracle, k_spec);
  oracle->add_option("exprs", exprs, "LHS RHS");
  oracle->add_option("--suite", cfg.suite_filter, "run the numeric checks of these suite rows instead");
  oracle->add_flag("--symmetric", symmetric, "use D_2k-invariant test functions");
  oracle->add_option("--mutate", mutate, "build suite operators with a deliberate defect")
      ->check(CLI::IsMember(mutation_names))
      ->capture_default_str();
  add_oracle_options(oracle, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    cfg.max_k = max_k_flag ? *max_k_flag : max_k_from_env();
    cfg.k_list = parse_k_list(k_spec);
    cfg.mut = parse_mutation(mutate).value_or(Mutation::None);

    if (*verify) return cmd_verify(cfg, out);

    if (*show) {
      return for_each_k(cfg, out, [&](const FieldPtr& ctx, std::ostream& o) {
        std::optional<OpExpr> x;
        try {
          x = named_operator(op_name, ctx);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        if (!x) throw UsageError("unknown operator '" + op_name + "'");
        o << pretty(*x) << '\n';
        return 0;
      });
    }
    if (*norm) {
      return for_each_k(cfg, out, [&](const FieldPtr& ctx, std::ostream& o) {
        o << pretty(parse_arg(exprs[0], ctx)) << '\n';
        return 0;
      });
    }
    if (*commute) {
      return for_each_k(cfg, out, [&](const FieldPtr& ctx, std::ostream& o) {
        const OpExpr x = parse_arg(exprs[0], ctx), y = parse_arg(exprs[1], ctx);
        o << pretty(anti ? anticommutator(x, y) : commutator(x, y)) << '\n';
        return 0;
      });
    }
    if (*adjoint_cmd) {
      return for_each_k(cfg, out, [&](const FieldPtr& ctx, std::ostream& o) {
        o << pretty(adjoint(parse_arg(exprs[0], ctx))) << '\n';
        return 0;
      });
    }
    if (*project) {
      return for_each_k(cfg, out, [&](const FieldPtr& ctx, std::ostream& o) {
        o << pretty(project_identity(parse_arg(exprs[0], ctx))) << '\n';
        return 0;
      });
    }
    if (*oracle) {
      const bool suite_mode = oracle->count("--suite") > 0;
      if (suite_mode == !exprs.empty()) throw UsageError("oracle takes either two expressions or --suite");
      if (suite_mode) return cmd_oracle_suite(cfg, out);
      if (exprs.size() != 2) throw UsageError("oracle needs LHS and RHS");
      const OracleConfig oc = oracle_config(cfg);
      return for_each_k(cfg, out, [&](const FieldPtr& ctx, std::ostream& o) {
        const OracleReport rep =
            numeric_check(parse_words(exprs[0], ctx), parse_words(exprs[1], ctx), ctx->k(), oc, symmetric);
        o << (rep.pass ? "pass" : "fail") << "  " << rep.failed_trials << "/" << rep.trials
          << " failed, max dev " << fmt_double(rep.max_deviation) << '\n';
        return rep.pass ? 0 : kExitFail;
      });
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dunkl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace dunkl
