#ifndef DUNKL_CLI_HPP
#define DUNKL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/builders.hpp"
#include "dunkl/cyclofield.hpp"

namespace dunkl {

struct RunConfig {
  std::vector<int> k_list;
  std::string suite_filter = "all";
  bool json = false;
  std::string out_path; ///< empty: stdout
  bool oracle = false;
  std::uint64_t seed = 271828;
  double tol = 1e-9;
  int trials = 100;
  int max_k = kDefaultMaxK;
  Mutation mut = Mutation::None;
};

/// Expands "1..6", "1,3,5" or mixtures such as "1..3,7" into a sorted list
/// without duplicates. Throws std::invalid_argument on malformed input.
std::vector<int> parse_k_list(const std::string& spec);

/// DUNKL_MAX_K if set to a positive integer, otherwise the built-in default.
int max_k_from_env();

/// Entry point of the dunkl command. Returns the exit code: 0 when every
/// check passes, 1 on a failing check, 2 on usage or parse errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dunkl

#endif // DUNKL_CLI_HPP
