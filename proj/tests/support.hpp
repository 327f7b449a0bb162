#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sadm/af.hpp"
#include "sadm/semantics.hpp"

namespace sadm::test {

inline ArgId id(const ArgumentationFramework& af, const std::string& name) {
  auto x = af.find(name);
  if (!x) throw std::invalid_argument("no argument " + name);
  return *x;
}

// "A C D" -> {A, C, D}
inline ArgSet set_of(const ArgumentationFramework& af, const std::string& names) {
  ArgSet s(af.size());
  std::istringstream in(names);
  std::string name;
  while (in >> name) s.insert(id(af, name));
  return s;
}

inline Labelling lab_of(const ArgumentationFramework& af, const std::string& in,
                        const std::string& out) {
  return Labelling::from_sets(af.size(), set_of(af, in), set_of(af, out));
}

// {{"A", 1}, {"G", 0}} with 0 meaning infinity.
inline MinMaxNumbering mm_of(const ArgumentationFramework& af,
                             std::initializer_list<std::pair<const char*, std::uint32_t>> values) {
  MinMaxNumbering mm(af.size());
  for (auto [name, v] : values)
    mm.set(id(af, name), v == 0 ? MinMaxValue::infinity() : MinMaxValue(v));
  return mm;
}

inline constexpr std::uint32_t kInf = 0;

inline ArgumentationFramework random_af(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::bernoulli_distribution coin(density);
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) attacks.push_back({arg(i), arg(j)});
  return ArgumentationFramework(std::move(names), std::move(attacks));
}

struct CorpusEntry {
  std::uint64_t seed;
  double density;
  ArgumentationFramework af;
};

// Deterministic corpus: n uniform in [min_n, max_n], density from
// {0.05, 0.10, ..., 0.50}.
inline std::vector<CorpusEntry> random_corpus(std::size_t count, std::size_t min_n,
                                              std::size_t max_n, std::uint64_t seed = 20211) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(min_n, max_n);
  std::uniform_int_distribution<int> step(1, 10);
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t s = rng();
    std::mt19937_64 local(s);
    double density = 0.05 * step(local);
    std::size_t n = size(local);
    out.push_back({s, density, random_af(local, n, density)});
  }
  return out;
}

}  // namespace sadm::test
