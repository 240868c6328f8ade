// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/exprparse.hpp"
#include "dunkl/identities.hpp"
#include "dunkl/oracle.hpp"
#include "support.hpp"

using namespace dunkl;

namespace {

constexpr int kMaxSuiteK = 8;
constexpr double kSuiteBudgetSeconds = 120.0;
constexpr int kOracleTrials = 100;
constexpr double kOracleTol = 1e-9;
constexpr std::uint64_t kOracleSeed = 271828;
constexpr double kMutationTrialShare = 0.95;
constexpr int kAlgebraCases = 200;
constexpr int kAlgebraOracleTrials = 4;
constexpr int kRoundTripCases = 100;
constexpr int kFieldMaxK = 12;
constexpr int kFieldSamples = 50;
constexpr double kEmbedTol = 1e-12;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<int> k_range(int lo, int hi) {
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("%s  [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string describe(const CheckReport& r) {
  return r.check_id + " at k=" + std::to_string(r.k) + " (" + std::to_string(r.residual_term_count) +
         " residual terms, first: " + r.residual_sample + ")";
}

// 1 and 2 share the suite run.
std::vector<CheckReport> criterion_suite() {
  const auto t0 = Clock::now();
  const std::vector<CheckReport> reports = run_suite(k_range(1, kMaxSuiteK));
  const double secs = seconds_since(t0);
  std::size_t pass = 0, skipped = 0;
  std::vector<std::string> bad;
  for (const auto& r : reports) {
    if (r.status == Status::Pass && r.residual_term_count == 0)
      ++pass;
    else if (r.status == Status::Skipped)
      ++skipped;
    else
      bad.push_back(describe(r));
  }
  std::ostringstream d;
  d << pass << " rows pass, " << bad.size() << " fail, " << skipped << " skipped; " << secs << " s (limit "
    << kSuiteBudgetSeconds << " s)";
  for (const auto& b : bad) d << "\n      " << b;
  report(1, bad.empty() && pass > 0 && secs < kSuiteBudgetSeconds, "exact symbolic suite, k = 1.." + std::to_string(kMaxSuiteK), d.str());
  return reports;
}

void criterion_integral(const std::vector<CheckReport>& reports) {
  int seen = 0;
  std::vector<std::string> bad;
  for (const auto& r : reports) {
    if (r.check_id != "integral_commutes") continue;
    ++seen;
    if (r.status != Status::Pass) bad.push_back(describe(r));
  }
  std::ostringstream d;
  d << "[H_k, D_phi^2] = 0 for " << (seen - static_cast<int>(bad.size())) << " of " << seen << " values of k";
  for (const auto& b : bad) d << "\n      residual " << b;
  report(2, bad.empty() && seen == kMaxSuiteK, "extended Hamiltonian commutes with D_phi^2", d.str());
}

void criterion_oracle() {
  OracleConfig cfg;
  cfg.trials = kOracleTrials;
  cfg.tol = kOracleTol;
  cfg.seed = kOracleSeed;
  const std::vector<CheckCase> cases = suite_cases(k_range(1, kMaxSuiteK));
  const auto t0 = Clock::now();
  std::vector<OracleReport> first(cases.size()), second(cases.size());
  std::vector<Status> exact(cases.size());
  parallel_for(cases.size(), [&](std::size_t t) {
    exact[t] = cases[t].applicable ? Status::Pass : Status::Skipped;
    first[t] = numeric_check(cases[t], cfg);
    second[t] = numeric_check(cases[t], cfg);
  });
  int checked = 0;
  bool deterministic = true;
  double worst = 0;
  std::vector<std::string> bad;
  for (std::size_t t = 0; t < cases.size(); ++t) {
    if (first[t].max_deviation != second[t].max_deviation || first[t].failed_trials != second[t].failed_trials)
      deterministic = false;
    if (exact[t] == Status::Skipped) continue;
    ++checked;
    worst = std::max(worst, first[t].max_deviation);
    if (!first[t].pass || first[t].trials != kOracleTrials)
      bad.push_back(cases[t].id + " at k=" + std::to_string(cases[t].k) + ": " +
                    std::to_string(first[t].failed_trials) + " failed trials");
  }
  std::ostringstream d;
  d << checked << " rows x " << kOracleTrials << " trials, tol " << kOracleTol << ", seed " << kOracleSeed
    << "; max deviation " << worst << "; rerun " << (deterministic ? "identical" : "DIFFERS") << "; "
    << seconds_since(t0) << " s";
  for (const auto& b : bad) d << "\n      " << b;
  report(3, bad.empty() && deterministic && checked > 0, "numeric oracle shadow run", d.str());
}

void criterion_mutations() {
  OracleConfig cfg;
  cfg.trials = kOracleTrials;
  cfg.tol = kOracleTol;
  cfg.seed = kOracleSeed;
  struct Job {
    int k;
    std::string id;
  };
  std::vector<Job> jobs;
  for (int k = 2; k <= kMaxSuiteK; ++k)
    for (const auto& id : check_ids()) jobs.push_back({k, id});
  std::mutex mu;
  int flipped = 0, applicable = 0;
  std::vector<std::string> bad;
  parallel_for(jobs.size(), [&](std::size_t t) {
    const Job& j = jobs[t];
    const auto ctx = ctx_new(j.k);
    const Mutation m = documented_mutation(j.id);
    const auto cases = build_cases(j.id, ctx, m);
    if (!cases.front().applicable) return;
    // A multi-row family flips when any of its rows does.
    bool symbolic = false, numeric = false;
    for (const auto& c : cases) {
      if (evaluate(c).status != Status::Fail) continue;
      symbolic = true;
      const OracleReport rep = numeric_check(c, cfg);
      if (!rep.pass && rep.failed_trials >= kMutationTrialShare * rep.trials) numeric = true;
    }
    std::lock_guard<std::mutex> lock(mu);
    ++applicable;
    if (symbolic && numeric)
      ++flipped;
    else
      bad.push_back(j.id + " at k=" + std::to_string(j.k) + " under " + to_string(m) +
                    (symbolic ? ": numeric oracle did not flip" : ": still passes symbolically"));
  });
  std::ostringstream d;
  d << flipped << " of " << applicable << " (check, k) pairs flip under their documented mutation, k = 2.."
    << kMaxSuiteK << ", numeric flip means >= " << kMutationTrialShare * 100 << "% failing trials";
  for (const auto& b : bad) d << "\n      " << b;
  report(4, bad.empty() && applicable > 0, "mutation sensitivity", d.str());
}

void criterion_specializations() {
  const CheckReport k3 = check("k3_specialization", 3);
  const CheckReport k2 = check("k2_specialization", 2);
  std::ostringstream d;
  d << "k=3 D_r, D_phi, H_3: " << to_string(k3.status) << "; k=2 D_r, D_phi, D_phi^2, H_2: " << to_string(k2.status);
  if (k3.status != Status::Pass) d << "\n      " << describe(k3);
  if (k2.status != Status::Pass) d << "\n      " << describe(k2);
  report(5, k3.status == Status::Pass && k2.status == Status::Pass, "displayed operators reproduced", d.str());
}

void criterion_algebra() {
  std::mt19937_64 rng(606);
  OracleConfig cfg;
  cfg.trials = kAlgebraOracleTrials;
  cfg.tol = kOracleTol;
  int assoc = 0, dist = 0, invol = 0, witness = 0, round_trip = 0;
  std::vector<std::string> bad;
  for (int t = 0; t < kAlgebraCases; ++t) {
    auto c = ctx_new(1 + t % 6);
    const OpExpr x = testing::random_op(c, rng), y = testing::random_op(c, rng), z = testing::random_op(c, rng);
    const OpExpr xyz = x * (y * z);
    if (xyz == (x * y) * z) ++assoc;
    else bad.push_back("associativity, case " + std::to_string(t));
    if (x * (y + z) == x * y + x * z && (x + y) * z == x * z + y * z) ++dist;
    else bad.push_back("distributivity, case " + std::to_string(t));
    if (adjoint(adjoint(x)) == x) ++invol;
    else bad.push_back("adjoint involution, case " + std::to_string(t));
    if (numeric_check(OpSum{{x, y, z}}, OpSum{{xyz}}, c->k(), cfg).pass) ++witness;
    else bad.push_back("numeric witness of x(yz), case " + std::to_string(t));
  }
  for (int t = 0; t < kRoundTripCases; ++t) {
    auto c = ctx_new(1 + t % 6);
    const OpExpr x = testing::random_op(c, rng);
    try {
      if (parse_op(pretty(x), c) == x) {
        ++round_trip;
        continue;
      }
    } catch (const ParseError&) {
    }
    bad.push_back("round trip of " + pretty(x));
  }
  std::ostringstream d;
  d << "associativity " << assoc << "/" << kAlgebraCases << ", distributivity " << dist << "/" << kAlgebraCases
    << ", adjoint involution " << invol << "/" << kAlgebraCases << ", numeric witness " << witness << "/"
    << kAlgebraCases << ", parser round trip " << round_trip << "/" << kRoundTripCases;
  for (const auto& b : bad) d << "\n      " << b;
  report(6, bad.empty(), "algebra laws and parser round trip", d.str());
}

void criterion_field() {
  std::mt19937_64 rng(707);
  int samples = 0;
  double worst = 0;
  std::vector<std::string> bad;
  auto near = [&](std::complex<double> x, std::complex<double> y) {
    const double e = std::abs(x - y) / std::max(1.0, std::abs(y));
    worst = std::max(worst, e);
    return e <= kEmbedTol;
  };
  for (int k = 1; k <= kFieldMaxK; ++k) {
    auto ctx = ctx_new(k);
    const FieldCtx& f = *ctx;
    bool ok = true;
    const CycloScalar rho = CycloScalar::root_power(f, f.rho_exp());
    CycloScalar rk(f, 1);
    for (int t = 0; t < k; ++t) rk *= rho;
    ok = ok && rk == CycloScalar(f, -1) && CycloScalar::root_power(f, f.N()).is_one();
    ok = ok && near(numeric_embed(CycloScalar::imag_unit(f)), {0, 1});
    for (int t = 0; t < kFieldSamples; ++t, ++samples) {
      const CycloScalar x = testing::random_scalar(f, rng, true), y = testing::random_scalar(f, rng),
                        z = testing::random_scalar(f, rng);
      ok = ok && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && x * y == y * x;
      ok = ok && (x * x.inv()).is_one() && x.conj().conj() == x;
      ok = ok && near(numeric_embed(x.conj()), std::conj(numeric_embed(x)));
      ok = ok && near(numeric_embed(x * y), numeric_embed(x) * numeric_embed(y));
      ok = ok && near(numeric_embed(x.inv()), 1.0 / numeric_embed(x));
    }
    if (!ok) bad.push_back("k=" + std::to_string(k) + " (N=" + std::to_string(f.N()) + ")");
  }
  std::ostringstream d;
  d << samples << " samples over k = 1.." << kFieldMaxK << "; worst embedding error " << worst << " (tol "
    << kEmbedTol << ")";
  for (const auto& b : bad) d << "\n      failed at " << b;
  report(7, bad.empty(), "cyclotomic field properties", d.str());
}

} // namespace

int main() {
  const auto reports = criterion_suite();
  criterion_integral(reports);
  criterion_oracle();
  criterion_mutations();
  criterion_specializations();
  criterion_algebra();
  criterion_field();
  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
