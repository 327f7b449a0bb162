#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "sadm/construct.hpp"
#include "sadm/oracle.hpp"

namespace sadm {

// Construct, then prune. Throws NotInGrounded.
ConstructResult small_strongly_admissible(const ArgumentationFramework& af, ArgId main);

struct CompareOptions {
  bool with_oracle = true;
  OracleLimits oracle_limits{};
  unsigned repeats = 5;  // timings are medians over this many runs
};

struct ComparisonRow {
  std::string query;
  std::size_t grounded_size = 0;
  std::size_t alg1_size = 0;
  std::size_t alg3_size = 0;
  std::optional<std::size_t> oracle_min_size;

  std::optional<double> alg1_pct_of_grounded;
  std::optional<double> alg3_pct_of_grounded;
  std::optional<double> alg3_pct_of_min;

  std::chrono::nanoseconds t_grounded{0};
  std::chrono::nanoseconds t_alg1{0};
  std::chrono::nanoseconds t_alg3{0};
  std::optional<std::chrono::nanoseconds> t_min;

  // Set when the oracle was requested but could not run (too large, timeout).
  std::optional<std::string> oracle_error;
};

// Sizes and runtimes of the grounded labelling, construct, construct+prune
// and (optionally) the exact minimum for one query. Throws NotInGrounded.
// Oracle failures are reported in oracle_error rather than thrown.
ComparisonRow compare(const ArgumentationFramework& af, ArgId main,
                      const CompareOptions& options = {});

// 100 * part / whole rounded to one decimal.
double percent_1dp(std::size_t part, std::size_t whole);

}  // namespace sadm
