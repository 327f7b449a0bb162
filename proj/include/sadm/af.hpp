#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sadm {

// Dense 0-based argument index. Names live in the owning framework.
struct ArgId {
  std::uint32_t value = 0;

  constexpr std::size_t index() const { return value; }
  friend constexpr auto operator<=>(ArgId, ArgId) = default;
};

constexpr ArgId arg(std::size_t i) { return ArgId{static_cast<std::uint32_t>(i)}; }

struct Attack {
  ArgId attacker;
  ArgId target;
  friend constexpr auto operator<=>(const Attack&, const Attack&) = default;
};

// Immutable attack graph. Adjacency lists are sorted by argument index and
// free of duplicates; attackers_of and attackees_of are exact transposes.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  // Duplicate attacks are dropped. Throws std::invalid_argument on empty or
  // duplicate names and on out-of-range attack endpoints.
  ArgumentationFramework(std::vector<std::string> names, std::vector<Attack> attacks);

  std::size_t size() const { return names_.size(); }
  std::size_t attack_count() const { return attacks_.size(); }

  std::span<const ArgId> attackers(ArgId x) const { return attackers_[x.index()]; }
  std::span<const ArgId> attackees(ArgId x) const { return attackees_[x.index()]; }
  // Sorted by (attacker, target).
  std::span<const Attack> attacks() const { return attacks_; }

  bool attacks(ArgId from, ArgId to) const;
  bool is_unattacked(ArgId x) const { return attackers_[x.index()].empty(); }

  const std::string& name(ArgId x) const { return names_[x.index()]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ArgId> find(std::string_view name) const;

  // Same names in the same order and the same attack relation.
  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgId> by_name_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgId>> attackers_;
  std::vector<std::vector<ArgId>> attackees_;
};

// Trivial Graph Format: argument names, a "#" line, then "attacker target"
// pairs. Throws SyntaxError.
ArgumentationFramework parse_tgf(std::string_view text);
// ASPARTIX facts: arg(a). att(a,b). Throws SyntaxError / UndeclaredArgument.
ArgumentationFramework parse_apx(std::string_view text);

std::string to_tgf(const ArgumentationFramework& af);
std::string to_apx(const ArgumentationFramework& af);

enum class FileFormat { tgf, apx };

// Picks the format from the file extension; nullopt when unknown.
std::optional<FileFormat> format_from_path(std::string_view path);
ArgumentationFramework parse(std::string_view text, FileFormat format);
ArgumentationFramework load_file(const std::string& path, std::optional<FileFormat> format = {});

}  // namespace sadm
