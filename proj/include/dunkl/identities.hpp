#ifndef DUNKL_IDENTITIES_HPP
#define DUNKL_IDENTITIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dunkl/builders.hpp"

namespace dunkl {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct CheckReport {
  std::string check_id;
  int k = 0;
  Status status = Status::Skipped;
  std::size_t residual_term_count = 0;
  std::string residual_sample; ///< first nonzero residual term, empty on pass
  std::int64_t elapsed_ms = 0;
};

/// lhs = rhs between two unevaluated operator sums.
///
/// With adjoint_lhs the left side is replaced by its formal adjoint. With
/// project both sides are compared after R, I -> 1, which the numeric oracle
/// mirrors by acting on D_2k-symmetrised test functions.
struct OpRelation {
  std::string label;
  OpSum lhs;
  OpSum rhs;
  bool adjoint_lhs = false;
  bool project = false;
};

/// lhs = rhs between functions of phi, held exactly and as double lambdas.
struct ScalarRelation {
  std::string label;
  ZRat lhs;
  ZRat rhs;
  std::function<double(double)> lhs_num;
  std::function<double(double)> rhs_num;
};

/// One report row: the relations a check asserts for a given k.
struct CheckCase {
  std::string id; ///< row id, e.g. "dr_props" or "trig_mixed[j=2]"
  int k = 0;
  FieldPtr ctx; ///< keeps the field alive for the ZRat values below
  bool applicable = true;
  std::vector<OpRelation> ops;
  std::vector<ScalarRelation> scalars;
};

/// Registered check names, in report order.
const std::vector<std::string>& check_ids();

/// The mutation that is expected to break a check.
Mutation documented_mutation(const std::string& check_id);

/// Builds the rows of a registered check. Per-j families give one row per
/// j = 1..k-1, or a single skipped row when the family does not apply.
/// Throws std::invalid_argument for an unknown id.
std::vector<CheckCase> build_cases(const std::string& check_id, const FieldPtr& ctx, Mutation mut = Mutation::None);

/// Exact verdict for one row.
CheckReport evaluate(const CheckCase& c);

/// Exact verdict for a registered check or a single row id such as
/// "trig_tan_tan[j=1]". Multi-row checks are folded into one report.
CheckReport check(const std::string& check_id, int k, Mutation mut = Mutation::None, int max_k = kDefaultMaxK);

/// True when the filter selects the check. The filter is a comma separated
/// list of tokens: "all", "trig", "odd", "even", an id, or a glob using '*'.
bool filter_matches(const std::string& filter, const std::string& check_id);

/// Runs every selected check for every k, in parallel, sorted by k then row id.
std::vector<CheckReport> run_suite(const std::vector<int>& ks, const std::string& filter = "all",
                                   Mutation mut = Mutation::None, int max_k = kDefaultMaxK);

/// Rows of run_suite without evaluating them; used by the oracle shadow run.
std::vector<CheckCase> suite_cases(const std::vector<int>& ks, const std::string& filter = "all",
                                   Mutation mut = Mutation::None, int max_k = kDefaultMaxK);

/// Calls fn(0) .. fn(n-1) on a small thread pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Report order used by run_suite: by k, then by row id with numbers compared numerically.
bool report_less(const CheckReport& x, const CheckReport& y);

/// First term of a nonzero operator, pretty-printed.
std::string first_term(const OpExpr& x);

} // namespace dunkl

#endif // DUNKL_IDENTITIES_HPP
