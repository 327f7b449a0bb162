#include "sadm/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sadm/error.hpp"
#include "sadm/prune.hpp"

namespace sadm {

ConstructResult small_strongly_admissible(const ArgumentationFramework& af, ArgId main) {
  ConstructResult built = construct_for(af, main);
  PruneResult pruned =
      prune_unchecked(af, PruneInput{main, std::move(built.lab), std::move(built.mm)});
  return ConstructResult{std::move(pruned.lab), std::move(pruned.mm),
                         built.steps + pruned.steps};
}

double percent_1dp(std::size_t part, std::size_t whole) {
  if (whole == 0) return 0.0;
  return std::round(1000.0 * static_cast<double>(part) / static_cast<double>(whole)) / 10.0;
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs f `repeats` times and returns the last result with the median time.
template <class F>
auto timed(unsigned repeats, F&& f) {
  std::vector<std::chrono::nanoseconds> samples;
  repeats = std::max(repeats, 1u);
  samples.reserve(repeats);
  decltype(f()) result{};
  for (unsigned i = 0; i < repeats; ++i) {
    auto start = Clock::now();
    result = f();
    samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start));
  }
  std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
  return std::pair{std::move(result), samples[samples.size() / 2]};
}

}  // namespace

ComparisonRow compare(const ArgumentationFramework& af, ArgId main, const CompareOptions& options) {
  ComparisonRow row;
  row.query = af.name(main);

  auto [alg1, t1] = timed(options.repeats, [&] { return construct_for(af, main); });
  auto [alg3, t3] = timed(options.repeats, [&] { return small_strongly_admissible(af, main); });
  auto [grounded, tg] = timed(options.repeats, [&] { return grounded_with_minmax(af); });

  row.grounded_size = lab_size(grounded.lab);
  row.alg1_size = lab_size(alg1.lab);
  row.alg3_size = lab_size(alg3.lab);
  row.t_grounded = tg;
  row.t_alg1 = t1;
  row.t_alg3 = t3;
  row.alg1_pct_of_grounded = percent_1dp(row.alg1_size, row.grounded_size);
  row.alg3_pct_of_grounded = percent_1dp(row.alg3_size, row.grounded_size);

  if (options.with_oracle) {
    try {
      OracleLimits limits = options.oracle_limits;
      auto [minimal, tm] = timed(options.repeats, [&] {
        return std::optional(minimal_strongly_admissible_for(af, main, limits));
      });
      row.oracle_min_size = minimal->size;
      row.t_min = tm;
      row.alg3_pct_of_min = percent_1dp(row.alg3_size, minimal->size);
    } catch (const OracleTooLarge& e) {
      row.oracle_error = std::string("OracleTooLarge: ") + e.what();
    } catch (const OracleTimeout& e) {
      row.oracle_error = std::string("OracleTimeout: ") + e.what();
    }
  }
  return row;
}

}  // namespace sadm
