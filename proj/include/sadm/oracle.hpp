#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "sadm/semantics.hpp"

namespace sadm {

// Exponential ground truth. Nothing here goes through the construct/prune
// code or through compute_minmax: strong admissibility of sets is decided by
// growing the defended core inside the candidate set.
struct OracleLimits {
  std::size_t max_subset_args = 16;     // 2^n subsets
  std::size_t max_labelling_args = 8;   // 3^n labellings
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// All strongly admissible subsets, ordered by size then lexicographically by
// member indices. Throws OracleTooLarge / OracleTimeout.
std::vector<ArgSet> enumerate_strongly_admissible_sets(const ArgumentationFramework& af,
                                                       const OracleLimits& limits = {});

struct MinimalLabelling {
  Labelling lab;
  MinMaxNumbering mm;
  std::size_t size = 0;
};

// A smallest strongly admissible labelling labelling `main` in; on ties the
// lexicographically least in-set. Throws OracleTooLarge, OracleTimeout,
// NotInGrounded.
MinimalLabelling minimal_strongly_admissible_for(const ArgumentationFramework& af, ArgId main,
                                                 const OracleLimits& limits = {});

// Every labelling passing is_strongly_admissible_labelling, by brute force
// over all 3^n labellings. Throws OracleTooLarge.
std::vector<Labelling> enumerate_all_strongly_admissible_labellings(
    const ArgumentationFramework& af, const OracleLimits& limits = {});

// Min-max numbering by plain fixpoint iteration from all-infinity. Quadratic
// or worse; meant as a cross-check. Requires an admissible labelling.
MinMaxNumbering naive_minmax(const ArgumentationFramework& af, const Labelling& lab);

}  // namespace sadm
