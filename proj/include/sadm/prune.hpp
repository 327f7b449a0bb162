#pragma once

#include <cstdint>

#include "sadm/semantics.hpp"

namespace sadm {

struct PruneInput {
  ArgId main;
  Labelling lab;
  MinMaxNumbering mm;
};

struct PruneResult {
  Labelling lab;
  MinMaxNumbering mm;
  std::uint64_t steps = 0;
};

// Keeps only what is needed to defend `main`: starting from main, every
// attacker is labelled out and receives one minimally numbered in-attacker
// (lowest index on ties), recursively. Validates that the input labelling is
// strongly admissible, labels main in, and carries its min-max numbering;
// throws PreconditionViolated naming the failing clause otherwise.
PruneResult prune(const ArgumentationFramework& af, const PruneInput& input);

// No upfront validation. Still throws PreconditionViolated if an out argument
// is met without an in-labelled attacker.
PruneResult prune_unchecked(const ArgumentationFramework& af, const PruneInput& input);

}  // namespace sadm
