#include "sadm/construct.hpp"

#include <deque>
#include <optional>

#include "sadm/error.hpp"

namespace sadm {

namespace {

// Returns nullopt when `target` is set but never reached.
std::optional<ConstructResult> run(const ArgumentationFramework& af, std::optional<ArgId> target,
                                   ConstructObserver* observer) {
  const std::size_t n = af.size();
  ConstructResult r{Labelling(n), MinMaxNumbering(n), 0};
  std::vector<std::size_t> undec_pre(n);
  std::deque<ArgId> unproc_in;

  auto label_in = [&](ArgId x, MinMaxValue v) {
    unproc_in.push_back(x);
    r.lab.set(x, Label::in);
    r.mm.set(x, v);
    if (observer) observer->on_enqueue(x, v);
  };

  for (std::size_t i = 0; i < n; ++i) {
    ArgId x = arg(i);
    undec_pre[i] = af.attackers(x).size();
    if (undec_pre[i] == 0) {
      label_in(x, MinMaxValue(1));
      if (target && x == *target) return r;
    }
  }

  while (!unproc_in.empty()) {
    if (observer) observer->on_iteration(r.lab, r.mm);
    ArgId x = unproc_in.front();
    unproc_in.pop_front();
    const MinMaxValue x_value = *r.mm[x];
    if (observer) observer->on_dequeue(x, x_value);

    for (ArgId y : af.attackees(x)) {
      ++r.steps;
      if (r.lab.is_out(y)) continue;
      r.lab.set(y, Label::out);
      const MinMaxValue y_value = x_value.next();
      r.mm.set(y, y_value);
      for (ArgId z : af.attackees(y)) {
        ++r.steps;
        if (!r.lab.is_undec(z)) continue;
        if (--undec_pre[z.index()] == 0) {
          label_in(z, y_value.next());
          if (target && z == *target) return r;
        }
      }
    }
  }

  if (target) return std::nullopt;
  return r;
}

}  // namespace

ConstructResult construct_for(const ArgumentationFramework& af, ArgId main,
                              ConstructObserver* observer) {
  auto r = run(af, main, observer);
  if (!r) throw NotInGrounded(af.name(main));
  return std::move(*r);
}

ConstructResult grounded_with_minmax(const ArgumentationFramework& af,
                                     ConstructObserver* observer) {
  return std::move(*run(af, std::nullopt, observer));
}

}  // namespace sadm
