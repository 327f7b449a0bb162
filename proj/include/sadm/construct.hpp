#pragma once

#include <cstdint>

#include "sadm/semantics.hpp"

namespace sadm {

struct ConstructResult {
  Labelling lab;
  MinMaxNumbering mm;
  // Inner-loop steps (attacker/attackee visits), for complexity checks.
  std::uint64_t steps = 0;
};

// Hooks into the bottom-up construction, used by tests and tracing. All
// methods default to no-ops.
class ConstructObserver {
 public:
  virtual ~ConstructObserver() = default;
  virtual void on_enqueue(ArgId, MinMaxValue) {}
  virtual void on_dequeue(ArgId, MinMaxValue) {}
  // Called at the top of every main-loop iteration.
  virtual void on_iteration(const Labelling&, const MinMaxNumbering&) {}
};

// Builds the grounded labelling bottom-up with a FIFO worklist, stopping as
// soon as `main` is labelled in. The result is strongly admissible and carries
// its min-max numbering. Throws NotInGrounded when the worklist drains first.
ConstructResult construct_for(const ArgumentationFramework& af, ArgId main,
                              ConstructObserver* observer = nullptr);

// Same procedure without the early exit: the grounded labelling and its
// min-max numbering.
ConstructResult grounded_with_minmax(const ArgumentationFramework& af,
                                     ConstructObserver* observer = nullptr);

}  // namespace sadm
