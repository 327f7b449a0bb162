#include "sadm/semantics.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "sadm/error.hpp"

namespace sadm {

const char* to_string(Label l) {
  switch (l) {
    case Label::in:
      return "in";
    case Label::out:
      return "out";
    case Label::undec:
      return "undec";
  }
  return "?";
}

std::string to_string(MinMaxValue v) {
  return v.is_finite() ? std::to_string(v.value()) : std::string("inf");
}

ArgSet::ArgSet(std::size_t universe, std::initializer_list<ArgId> members) : bits_(universe, 0) {
  for (ArgId x : members) insert(x);
}

ArgSet::ArgSet(std::size_t universe, const std::vector<ArgId>& members) : bits_(universe, 0) {
  for (ArgId x : members) insert(x);
}

void ArgSet::insert(ArgId x) {
  char& b = bits_[x.index()];
  if (!b) {
    b = 1;
    ++count_;
  }
}

void ArgSet::erase(ArgId x) {
  char& b = bits_[x.index()];
  if (b) {
    b = 0;
    --count_;
  }
}

std::vector<ArgId> ArgSet::members() const {
  std::vector<ArgId> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(arg(i));
  return out;
}

Labelling Labelling::from_sets(std::size_t n, const ArgSet& in, const ArgSet& out) {
  Labelling lab(n);
  for (ArgId x : out.members()) lab.set(x, Label::out);
  for (ArgId x : in.members()) lab.set(x, Label::in);
  return lab;
}

Labelling Labelling::from_sets(std::size_t n, std::initializer_list<ArgId> in,
                               std::initializer_list<ArgId> out) {
  return from_sets(n, ArgSet(n, in), ArgSet(n, out));
}

ArgSet Labelling::with(Label l) const {
  ArgSet s(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) s.insert(arg(i));
  return s;
}

std::vector<ArgId> MinMaxNumbering::domain() const {
  std::vector<ArgId> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i]) out.push_back(arg(i));
  return out;
}

std::size_t MinMaxNumbering::domain_size() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

bool MinMaxNumbering::has_infinity() const {
  return std::any_of(values_.begin(), values_.end(),
                     [](const auto& v) { return v && !v->is_finite(); });
}

namespace {

void require_same(const ArgumentationFramework& af, std::size_t n, const char* what) {
  if (af.size() != n)
    throw MismatchedFramework(std::string(what) + " covers " + std::to_string(n) +
                              " arguments, framework has " + std::to_string(af.size()));
}

}  // namespace

bool is_conflict_free(const ArgumentationFramework& af, const ArgSet& s) {
  require_same(af, s.universe(), "set");
  for (ArgId x : s.members())
    for (ArgId y : af.attackees(x))
      if (s.contains(y)) return false;
  return true;
}

ArgSet attacked_by(const ArgumentationFramework& af, const ArgSet& s) {
  require_same(af, s.universe(), "set");
  ArgSet plus(af.size());
  for (ArgId x : s.members())
    for (ArgId y : af.attackees(x)) plus.insert(y);
  return plus;
}

namespace {

bool defended_given(const ArgumentationFramework& af, const ArgSet& plus, ArgId x) {
  for (ArgId y : af.attackers(x))
    if (!plus.contains(y)) return false;
  return true;
}

}  // namespace

bool defends(const ArgumentationFramework& af, const ArgSet& s, ArgId x) {
  return defended_given(af, attacked_by(af, s), x);
}

ArgSet characteristic(const ArgumentationFramework& af, const ArgSet& s) {
  ArgSet plus = attacked_by(af, s);
  ArgSet out(af.size());
  for (std::size_t i = 0; i < af.size(); ++i)
    if (defended_given(af, plus, arg(i))) out.insert(arg(i));
  return out;
}

ArgSet grounded_extension_fixpoint(const ArgumentationFramework& af) {
  ArgSet current(af.size());
  for (;;) {
    ArgSet next = characteristic(af, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

Labelling args2lab(const ArgumentationFramework& af, const ArgSet& s) {
  if (!is_conflict_free(af, s)) throw NotConflictFree("set is not conflict-free");
  return Labelling::from_sets(af.size(), s, attacked_by(af, s));
}

ArgSet lab2args(const Labelling& lab) { return lab.in_set(); }

std::optional<Violation> check_admissible(const ArgumentationFramework& af, const Labelling& lab) {
  require_same(af, lab.arg_count(), "labelling");
  for (std::size_t i = 0; i < af.size(); ++i) {
    ArgId x = arg(i);
    if (lab.is_in(x)) {
      for (ArgId y : af.attackers(x))
        if (!lab.is_out(y))
          return Violation{x, "in-labelled " + af.name(x) + " has attacker " + af.name(y) +
                                  " that is not out"};
    } else if (lab.is_out(x)) {
      auto atk = af.attackers(x);
      if (std::none_of(atk.begin(), atk.end(), [&](ArgId y) { return lab.is_in(y); }))
        return Violation{x, "out-labelled " + af.name(x) + " has no in-labelled attacker"};
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_complete(const ArgumentationFramework& af, const Labelling& lab) {
  if (auto v = check_admissible(af, lab)) return v;
  for (std::size_t i = 0; i < af.size(); ++i) {
    ArgId x = arg(i);
    if (!lab.is_undec(x)) continue;
    bool has_undec = false;
    for (ArgId y : af.attackers(x)) {
      if (lab.is_in(y))
        return Violation{x, "undec-labelled " + af.name(x) + " has in-labelled attacker " +
                                af.name(y)};
      has_undec = has_undec || lab.is_undec(y);
    }
    if (!has_undec)
      return Violation{x, "undec-labelled " + af.name(x) + " has no undec-labelled attacker"};
  }
  return std::nullopt;
}

bool is_admissible_labelling(const ArgumentationFramework& af, const Labelling& lab) {
  return !check_admissible(af, lab);
}

bool is_complete_labelling(const ArgumentationFramework& af, const Labelling& lab) {
  return !check_complete(af, lab);
}

bool lab_leq(const Labelling& a, const Labelling& b) {
  if (a.arg_count() != b.arg_count())
    throw MismatchedFramework("labellings cover different argument counts");
  for (std::size_t i = 0; i < a.arg_count(); ++i) {
    Label l = a[arg(i)];
    if (l != Label::undec && b[arg(i)] != l) return false;
  }
  return true;
}

std::size_t lab_size(const Labelling& lab) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < lab.arg_count(); ++i)
    if (!lab.is_undec(arg(i))) ++n;
  return n;
}

MinMaxNumbering compute_minmax(const ArgumentationFramework& af, const Labelling& lab) {
  if (auto v = check_admissible(af, lab)) throw NotAdmissible(v->message);

  const std::size_t n = af.size();
  // Every attacker of an in-labelled argument is out, so an in argument is
  // ready once all of its attackers are finalized.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::uint32_t> max_seen(n, 0);
  std::vector<char> queued(n, 0), done(n, 0);
  MinMaxNumbering mm(n);

  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (value, arg)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  for (std::size_t i = 0; i < n; ++i) {
    if (!lab.is_in(arg(i))) continue;
    pending[i] = af.attackers(arg(i)).size();
    if (pending[i] == 0) {
      heap.emplace(1, static_cast<std::uint32_t>(i));
      queued[i] = 1;
    }
  }

  // Values are popped in non-decreasing order, so the first in-attacker to be
  // finalized fixes an out argument's minimum, and the last out-attacker to be
  // finalized fixes an in argument's maximum.
  while (!heap.empty()) {
    auto [value, i] = heap.top();
    heap.pop();
    if (done[i]) continue;
    done[i] = 1;
    ArgId x = arg(i);
    mm.set(x, value);
    for (ArgId t : af.attackees(x)) {
      const std::size_t j = t.index();
      if (lab.is_in(x) && lab.is_out(t) && !queued[j]) {
        queued[j] = 1;
        heap.emplace(value + 1, t.value);
      } else if (lab.is_out(x) && lab.is_in(t)) {
        max_seen[j] = std::max(max_seen[j], value);
        if (--pending[j] == 0) {
          queued[j] = 1;
          heap.emplace(max_seen[j] + 1, t.value);
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (!lab.is_undec(arg(i)) && !done[i]) mm.set(arg(i), MinMaxValue::infinity());
  return mm;
}

std::optional<Violation> check_minmax(const ArgumentationFramework& af, const Labelling& lab,
                                      const MinMaxNumbering& mm) {
  require_same(af, lab.arg_count(), "labelling");
  require_same(af, mm.arg_count(), "numbering");
  for (std::size_t i = 0; i < af.size(); ++i) {
    ArgId x = arg(i);
    if (lab.is_undec(x) == mm.contains(x))
      return Violation{x, lab.is_undec(x) ? "undec-labelled " + af.name(x) + " is numbered"
                                          : af.name(x) + " is labelled but not numbered"};
  }
  for (std::size_t i = 0; i < af.size(); ++i) {
    ArgId x = arg(i);
    if (lab.is_undec(x)) continue;
    MinMaxValue expected(0);
    if (lab.is_in(x)) {
      // max(∅) = 0
      MinMaxValue m(0);
      for (ArgId y : af.attackers(x))
        if (lab.is_out(y)) m = std::max(m, *mm[y]);
      expected = m.next();
    } else {
      // min(∅) = ∞
      MinMaxValue m = MinMaxValue::infinity();
      for (ArgId y : af.attackers(x))
        if (lab.is_in(y)) m = std::min(m, *mm[y]);
      expected = m.next();
    }
    if (*mm[x] != expected)
      return Violation{x, std::string(lab.is_in(x) ? "in" : "out") + "-labelled " + af.name(x) +
                              " should be numbered " + to_string(expected) + ", got " +
                              to_string(*mm[x])};
  }
  return std::nullopt;
}

bool verify_minmax(const ArgumentationFramework& af, const Labelling& lab,
                   const MinMaxNumbering& mm) {
  return !check_minmax(af, lab, mm);
}

bool is_strongly_admissible_labelling(const ArgumentationFramework& af, const Labelling& lab) {
  if (!is_admissible_labelling(af, lab)) return false;
  return !compute_minmax(af, lab).has_infinity();
}

bool is_strongly_admissible_set(const ArgumentationFramework& af, const ArgSet& s) {
  if (!is_conflict_free(af, s)) return false;
  return is_strongly_admissible_labelling(af, args2lab(af, s));
}

}  // namespace sadm
