#include "sadm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "sadm/error.hpp"

namespace sadm {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 63;

struct BitGraph {
  std::vector<Mask> attackers;
  std::vector<Mask> attackees;

  explicit BitGraph(const ArgumentationFramework& af)
      : attackers(af.size(), 0), attackees(af.size(), 0) {
    for (const Attack& a : af.attacks()) {
      attackers[a.target.index()] |= Mask{1} << a.attacker.index();
      attackees[a.attacker.index()] |= Mask{1} << a.target.index();
    }
  }

  Mask plus(Mask s) const {
    Mask p = 0;
    for (Mask m = s; m; m &= m - 1) p |= attackees[std::countr_zero(m)];
    return p;
  }

  Mask minus(Mask s) const {
    Mask p = 0;
    for (Mask m = s; m; m &= m - 1) p |= attackers[std::countr_zero(m)];
    return p;
  }

  // Every member must be defended by a strongly admissible subset of the
  // others. Equivalently, repeatedly adding members defended by what has been
  // collected so far must eventually collect all of s.
  bool strongly_admissible(Mask s) const {
    if (plus(s) & s) return false;
    Mask core = 0;
    for (;;) {
      const Mask defeated = plus(core);
      Mask next = 0;
      for (Mask m = s; m; m &= m - 1) {
        int x = std::countr_zero(m);
        if ((attackers[x] & ~defeated) == 0) next |= Mask{1} << x;
      }
      if (next == core) return core == s;
      core = next;
    }
  }
};

std::vector<ArgId> members_of(Mask s) {
  std::vector<ArgId> out;
  for (Mask m = s; m; m &= m - 1) out.push_back(arg(std::countr_zero(m)));
  return out;
}

// Lexicographic on ascending member lists.
bool lex_less(Mask a, Mask b) {
  auto ma = members_of(a);
  auto mb = members_of(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void check_subset_limit(const ArgumentationFramework& af, const OracleLimits& limits) {
  const std::size_t cap = std::min(limits.max_subset_args, kMaskBits);
  if (af.size() > cap) throw OracleTooLarge(af.size(), cap);
}

class DeadlineCheck {
 public:
  explicit DeadlineCheck(const OracleLimits& limits) : deadline_(limits.deadline) {}
  void tick() {
    if (deadline_ && (++count_ & 0xfff) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw OracleTimeout();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::vector<ArgSet> enumerate_strongly_admissible_sets(const ArgumentationFramework& af,
                                                       const OracleLimits& limits) {
  check_subset_limit(af, limits);
  const std::size_t n = af.size();
  BitGraph g(af);
  DeadlineCheck clock(limits);
  std::vector<Mask> found;
  const Mask end = Mask{1} << n;
  for (Mask s = 0; s < end; ++s) {
    clock.tick();
    if (g.strongly_admissible(s)) found.push_back(s);
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : lex_less(a, b);
  });
  std::vector<ArgSet> out;
  out.reserve(found.size());
  for (Mask s : found) out.emplace_back(n, members_of(s));
  return out;
}

MinimalLabelling minimal_strongly_admissible_for(const ArgumentationFramework& af, ArgId main,
                                                 const OracleLimits& limits) {
  check_subset_limit(af, limits);
  const std::size_t n = af.size();
  BitGraph g(af);
  DeadlineCheck clock(limits);
  const Mask main_bit = Mask{1} << main.index();

  std::optional<Mask> best;
  std::size_t best_size = 0;
  // Candidates are (S, S-, rest); |S| alone bounds the size from below, so
  // sizes k >= best_size cannot improve.
  for (std::size_t k = 1; k <= n; ++k) {
    if (best && k >= best_size) break;
    // Gosper's hack over all k-subsets.
    Mask s = (Mask{1} << k) - 1;
    const Mask end = Mask{1} << n;
    while (s < end) {
      clock.tick();
      if ((s & main_bit) && g.strongly_admissible(s)) {
        std::size_t size = static_cast<std::size_t>(std::popcount(s | g.minus(s)));
        if (!best || size < best_size || (size == best_size && lex_less(s, *best))) {
          best = s;
          best_size = size;
        }
      }
      Mask c = s & (~s + 1);
      Mask r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  if (!best) throw NotInGrounded(af.name(main));

  ArgSet in(n, members_of(*best));
  ArgSet out(n, members_of(g.minus(*best)));
  MinimalLabelling result;
  result.lab = Labelling::from_sets(n, in, out);
  result.mm = naive_minmax(af, result.lab);
  result.size = best_size;
  return result;
}

std::vector<Labelling> enumerate_all_strongly_admissible_labellings(
    const ArgumentationFramework& af, const OracleLimits& limits) {
  const std::size_t n = af.size();
  if (n > limits.max_labelling_args) throw OracleTooLarge(n, limits.max_labelling_args);
  DeadlineCheck clock(limits);
  std::vector<Labelling> out;
  std::vector<std::uint8_t> digits(n, 0);
  Labelling lab(n);
  for (;;) {
    clock.tick();
    for (std::size_t i = 0; i < n; ++i) lab.set(arg(i), static_cast<Label>(digits[i]));
    if (is_strongly_admissible_labelling(af, lab)) out.push_back(lab);
    std::size_t i = 0;
    while (i < n && digits[i] == 2) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return out;
}

MinMaxNumbering naive_minmax(const ArgumentationFramework& af, const Labelling& lab) {
  if (auto v = check_admissible(af, lab)) throw NotAdmissible(v->message);
  const std::size_t n = af.size();
  MinMaxNumbering mm(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!lab.is_undec(arg(i))) mm.set(arg(i), MinMaxValue::infinity());

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      ArgId x = arg(i);
      if (lab.is_undec(x)) continue;
      MinMaxValue v(0);
      if (lab.is_in(x)) {
        for (ArgId y : af.attackers(x)) v = std::max(v, *mm[y]);
      } else {
        v = MinMaxValue::infinity();
        for (ArgId y : af.attackers(x))
          if (lab.is_in(y)) v = std::min(v, *mm[y]);
      }
      v = v.next();
      if (v != *mm[x]) {
        mm.set(x, v);
        changed = true;
      }
    }
  }
  return mm;
}

}  // namespace sadm
