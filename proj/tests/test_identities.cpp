#include <doctest.h>

#include <algorithm>

#include "dunkl/identities.hpp"

using namespace dunkl;

namespace {

std::size_t count(const std::vector<CheckReport>& rs, Status s) {
  return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const CheckReport& r) { return r.status == s; }));
}

} // namespace

TEST_CASE("single checks") {
  const CheckReport sec2 = check("trig_sec2", 3);
  CHECK(sec2.status == Status::Pass);
  CHECK(sec2.residual_term_count == 0);
  CHECK(sec2.residual_sample.empty());

  CHECK(check("trig_tan_tan", 1).status == Status::Skipped);
  CHECK(check("s_props", 3).status == Status::Skipped);
  CHECK(check("k3_specialization", 4).status == Status::Skipped);

  CHECK(check("dphi_squared", 5).status == Status::Pass);
  const CheckReport broken = check("dphi_squared", 5, Mutation::BShift);
  CHECK(broken.status == Status::Fail);
  CHECK(broken.residual_term_count > 0);
  CHECK_FALSE(broken.residual_sample.empty());

  CHECK(check("trig_mixed[j=2]", 5).status == Status::Pass);
  CHECK_THROWS_AS(check("no_such_check", 3), std::invalid_argument);
}

TEST_CASE("status is pass exactly when the residual vanishes") {
  for (const CheckReport& r : run_suite({3, 4}, "all", Mutation::BShift)) {
    CAPTURE(r.check_id);
    if (r.status == Status::Pass) CHECK(r.residual_term_count == 0);
    if (r.status == Status::Fail) CHECK(r.residual_term_count > 0);
  }
}

TEST_CASE("whole suite for k = 1..6") {
  const auto reports = run_suite({1, 2, 3, 4, 5, 6});
  CHECK(count(reports, Status::Fail) == 0);
  CHECK(count(reports, Status::Pass) > 0);
  for (const auto& r : reports) {
    CAPTURE(r.check_id);
    CAPTURE(r.k);
    CHECK(r.residual_term_count == 0);
  }
  // Deterministic order: by k, then by id with j compared numerically.
  CHECK(std::is_sorted(reports.begin(), reports.end(), report_less));
}

TEST_CASE("filters") {
  const auto odd_at_2 = run_suite({2}, "odd");
  CHECK_FALSE(odd_at_2.empty());
  CHECK(count(odd_at_2, Status::Skipped) == odd_at_2.size());

  // trig_sec2 plus three per-j families with j in {1, 2}; even-only trig rows are skipped.
  const auto trig3 = run_suite({3}, "trig");
  CHECK(trig3.size() - count(trig3, Status::Skipped) == 1 + 3 * 2);
  CHECK(count(trig3, Status::Pass) == 7);

  CHECK(filter_matches("trig_*", "trig_mixed"));
  CHECK(filter_matches("dr_props,hk_*", "hk_invariance"));
  CHECK_FALSE(filter_matches("dr_props", "dphi_props"));
  CHECK(suite_cases({3}, "nothing_matches").empty());
}

TEST_CASE("per-j rows at k = 5") {
  const auto rows = run_suite({5}, "trig_tan_tan");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].check_id == "trig_tan_tan[j=1]");
  CHECK(rows[3].check_id == "trig_tan_tan[j=4]");
}

TEST_CASE("every documented mutation breaks its check") {
  for (int k = 2; k <= 5; ++k) {
    for (const std::string& id : check_ids()) {
      const CheckReport clean = check(id, k);
      if (clean.status == Status::Skipped) continue;
      CAPTURE(id);
      CAPTURE(k);
      CHECK(clean.status == Status::Pass);
      CHECK(check(id, k, documented_mutation(id)).status == Status::Fail);
    }
  }
}

TEST_CASE("reports are reproducible") {
  const auto x = run_suite({3, 4}, "trig,dphi_squared");
  const auto y = run_suite({3, 4}, "trig,dphi_squared");
  REQUIRE(x.size() == y.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    CHECK(x[t].check_id == y[t].check_id);
    CHECK(x[t].status == y[t].status);
    CHECK(x[t].residual_term_count == y[t].residual_term_count);
  }
}
