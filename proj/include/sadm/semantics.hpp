#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sadm/af.hpp"

namespace sadm {

enum class Label : std::uint8_t { in, out, undec };

const char* to_string(Label l);

// Subset of the arguments of a fixed framework.
class ArgSet {
 public:
  ArgSet() = default;
  explicit ArgSet(std::size_t universe) : bits_(universe, 0) {}
  ArgSet(std::size_t universe, std::initializer_list<ArgId> members);
  ArgSet(std::size_t universe, const std::vector<ArgId>& members);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(ArgId x) const { return bits_[x.index()] != 0; }
  void insert(ArgId x);
  void erase(ArgId x);

  // Ascending by index.
  std::vector<ArgId> members() const;

  friend bool operator==(const ArgSet& a, const ArgSet& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<char> bits_;
  std::size_t count_ = 0;
};

// Total map argument -> Label; starts all-UNDEC.
class Labelling {
 public:
  Labelling() = default;
  explicit Labelling(std::size_t n) : labels_(n, Label::undec) {}
  static Labelling from_sets(std::size_t n, const ArgSet& in, const ArgSet& out);
  static Labelling from_sets(std::size_t n, std::initializer_list<ArgId> in,
                             std::initializer_list<ArgId> out);

  std::size_t arg_count() const { return labels_.size(); }
  Label operator[](ArgId x) const { return labels_[x.index()]; }
  void set(ArgId x, Label l) { labels_[x.index()] = l; }

  bool is_in(ArgId x) const { return labels_[x.index()] == Label::in; }
  bool is_out(ArgId x) const { return labels_[x.index()] == Label::out; }
  bool is_undec(ArgId x) const { return labels_[x.index()] == Label::undec; }

  ArgSet in_set() const { return with(Label::in); }
  ArgSet out_set() const { return with(Label::out); }
  ArgSet undec_set() const { return with(Label::undec); }

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  ArgSet with(Label l) const;
  std::vector<Label> labels_;
};

// A natural number >= 1 or infinity. Infinity compares greater than every
// finite value and absorbs increments.
class MinMaxValue {
 public:
  static constexpr MinMaxValue infinity() { return MinMaxValue(kInf); }
  constexpr explicit MinMaxValue(std::uint32_t v) : v_(v) {}

  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr std::uint32_t value() const { return v_; }
  constexpr MinMaxValue next() const { return is_finite() ? MinMaxValue(v_ + 1) : infinity(); }

  friend constexpr auto operator<=>(MinMaxValue, MinMaxValue) = default;

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_;
};

std::string to_string(MinMaxValue v);

// Partial map argument -> MinMaxValue.
class MinMaxNumbering {
 public:
  MinMaxNumbering() = default;
  explicit MinMaxNumbering(std::size_t n) : values_(n) {}

  std::size_t arg_count() const { return values_.size(); }
  std::optional<MinMaxValue> operator[](ArgId x) const { return values_[x.index()]; }
  bool contains(ArgId x) const { return values_[x.index()].has_value(); }
  void set(ArgId x, MinMaxValue v) { values_[x.index()] = v; }
  void set(ArgId x, std::uint32_t v) { values_[x.index()] = MinMaxValue(v); }
  void erase(ArgId x) { values_[x.index()].reset(); }

  std::vector<ArgId> domain() const;
  std::size_t domain_size() const;
  bool has_infinity() const;

  friend bool operator==(const MinMaxNumbering&, const MinMaxNumbering&) = default;

 private:
  std::vector<std::optional<MinMaxValue>> values_;
};

// First failing clause of a check, for diagnostics.
struct Violation {
  ArgId arg;
  std::string message;
};

bool is_conflict_free(const ArgumentationFramework& af, const ArgSet& s);
// S+ : everything attacked by some member of s.
ArgSet attacked_by(const ArgumentationFramework& af, const ArgSet& s);
bool defends(const ArgumentationFramework& af, const ArgSet& s, ArgId x);
ArgSet characteristic(const ArgumentationFramework& af, const ArgSet& s);
ArgSet grounded_extension_fixpoint(const ArgumentationFramework& af);

// (s, s+, rest). Throws NotConflictFree.
Labelling args2lab(const ArgumentationFramework& af, const ArgSet& s);
ArgSet lab2args(const Labelling& lab);

std::optional<Violation> check_admissible(const ArgumentationFramework& af, const Labelling& lab);
std::optional<Violation> check_complete(const ArgumentationFramework& af, const Labelling& lab);
bool is_admissible_labelling(const ArgumentationFramework& af, const Labelling& lab);
bool is_complete_labelling(const ArgumentationFramework& af, const Labelling& lab);

// in(a) ⊆ in(b) and out(a) ⊆ out(b). Throws MismatchedFramework.
bool lab_leq(const Labelling& a, const Labelling& b);
std::size_t lab_size(const Labelling& lab);

// The unique min-max numbering of an admissible labelling. Throws
// NotAdmissible.
MinMaxNumbering compute_minmax(const ArgumentationFramework& af, const Labelling& lab);

std::optional<Violation> check_minmax(const ArgumentationFramework& af, const Labelling& lab,
                                      const MinMaxNumbering& mm);
bool verify_minmax(const ArgumentationFramework& af, const Labelling& lab,
                   const MinMaxNumbering& mm);

bool is_strongly_admissible_labelling(const ArgumentationFramework& af, const Labelling& lab);
bool is_strongly_admissible_set(const ArgumentationFramework& af, const ArgSet& s);

}  // namespace sadm
