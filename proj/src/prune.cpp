#include "sadm/prune.hpp"

#include <deque>

#include "sadm/error.hpp"

namespace sadm {

PruneResult prune(const ArgumentationFramework& af, const PruneInput& input) {
  if (input.lab.arg_count() != af.size() || input.mm.arg_count() != af.size())
    throw PreconditionViolated("labelling or numbering does not match the framework");
  if (input.main.index() >= af.size())
    throw PreconditionViolated("main argument out of range");
  if (!input.lab.is_in(input.main))
    throw PreconditionViolated("main argument " + af.name(input.main) + " is not labelled in");
  if (auto v = check_admissible(af, input.lab))
    throw PreconditionViolated("labelling is not admissible: " + v->message);
  if (auto v = check_minmax(af, input.lab, input.mm))
    throw PreconditionViolated("numbering is not the min-max numbering: " + v->message);
  if (input.mm.has_infinity())
    throw PreconditionViolated("labelling is not strongly admissible (infinite number)");
  return prune_unchecked(af, input);
}

PruneResult prune_unchecked(const ArgumentationFramework& af, const PruneInput& input) {
  const std::size_t n = af.size();
  const Labelling& lab_in = input.lab;
  const MinMaxNumbering& mm_in = input.mm;

  PruneResult r{Labelling(n), MinMaxNumbering(n), 0};
  std::deque<ArgId> unproc_in{input.main};
  r.lab.set(input.main, Label::in);
  r.mm.set(input.main, *mm_in[input.main]);

  while (!unproc_in.empty()) {
    ArgId x = unproc_in.front();
    unproc_in.pop_front();
    for (ArgId y : af.attackers(x)) {
      r.lab.set(y, Label::out);
      r.mm.set(y, *mm_in[y]);

      // Minimal value among y's in-attackers, and whether one of the minimal
      // ones is already in the output.
      std::optional<MinMaxValue> best;
      std::optional<ArgId> pick;
      bool already_covered = false;
      for (ArgId z : af.attackers(y)) {
        ++r.steps;
        if (!lab_in.is_in(z)) continue;
        MinMaxValue v = *mm_in[z];
        if (!best || v < *best) {
          best = v;
          pick = z;
          already_covered = r.lab.is_in(z);
        } else if (v == *best && r.lab.is_in(z)) {
          already_covered = true;
        }
      }
      if (!pick)
        throw PreconditionViolated("out-labelled " + af.name(y) + " has no in-labelled attacker");
      if (already_covered) continue;

      unproc_in.push_back(*pick);
      r.lab.set(*pick, Label::in);
      r.mm.set(*pick, *best);
    }
  }
  return r;
}

}  // namespace sadm
