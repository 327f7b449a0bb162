#include "sadm/fixtures.hpp"

#include <string>

namespace sadm::fixtures {

namespace {

ArgumentationFramework lettered(std::size_t n, std::initializer_list<std::pair<char, char>> att) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('A' + i));
  std::vector<Attack> attacks;
  for (auto [from, to] : att) attacks.push_back({arg(from - 'A'), arg(to - 'A')});
  return ArgumentationFramework(std::move(names), std::move(attacks));
}

}  // namespace

ArgumentationFramework fig1() {
  return lettered(8, {{'A', 'B'},
                      {'H', 'B'},
                      {'B', 'C'},
                      {'C', 'E'},
                      {'D', 'E'},
                      {'E', 'F'},
                      {'G', 'H'},
                      {'H', 'G'}});
}

ArgumentationFramework sq5() {
  return lettered(5, {{'A', 'B'}, {'B', 'C'}, {'C', 'D'}, {'D', 'E'}, {'E', 'B'}});
}

ArgumentationFramework chain(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  std::vector<Attack> attacks;
  attacks.reserve(n ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("a" + std::to_string(i));
    if (i > 0) attacks.push_back({arg(i - 1), arg(i)});
  }
  return ArgumentationFramework(std::move(names), std::move(attacks));
}

ArgumentationFramework self_attacker() {
  return ArgumentationFramework({"X"}, {{arg(0), arg(0)}});
}

}  // namespace sadm::fixtures
