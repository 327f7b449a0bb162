#include "sadm/labelling_io.hpp"

#include <charconv>
#include <sstream>

#include "sadm/error.hpp"

namespace sadm {

namespace {

void append_line(std::ostringstream& out, const ArgumentationFramework& af, const char* key,
                 const ArgSet& s) {
  out << key << ':';
  for (ArgId x : s.members()) out << ' ' << af.name(x);
  out << '\n';
}

std::string_view trim(std::string_view s) {
  auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string format_labelling(const ArgumentationFramework& af, const Labelling& lab) {
  std::ostringstream out;
  append_line(out, af, "in", lab.in_set());
  append_line(out, af, "out", lab.out_set());
  append_line(out, af, "undec", lab.undec_set());
  return out.str();
}

std::string format_numbering(const ArgumentationFramework& af, const MinMaxNumbering& mm) {
  std::ostringstream out;
  out << "mm:";
  for (ArgId x : mm.domain()) out << ' ' << af.name(x) << '=' << to_string(*mm[x]);
  out << '\n';
  return out.str();
}

std::string format_certificate(const ArgumentationFramework& af, const Labelling& lab,
                               const MinMaxNumbering& mm) {
  return format_labelling(af, lab) + format_numbering(af, mm);
}

Certificate parse_certificate(const ArgumentationFramework& af, std::string_view text) {
  const std::size_t n = af.size();
  Certificate cert{Labelling(n), std::nullopt};
  std::vector<char> seen(n, 0);
  bool seen_key[4] = {false, false, false, false};

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw SyntaxError("expected 'key: ...'", line_no);
    std::string_view key = trim(line.substr(0, colon));
    auto items = tokens(line.substr(colon + 1));

    int slot;
    if (key == "in") slot = 0;
    else if (key == "out") slot = 1;
    else if (key == "undec") slot = 2;
    else if (key == "mm") slot = 3;
    else throw SyntaxError("unknown key '" + std::string(key) + "'", line_no);
    if (seen_key[slot]) throw SyntaxError("repeated '" + std::string(key) + "' line", line_no);
    seen_key[slot] = true;

    auto lookup = [&](std::string_view name) {
      auto x = af.find(name);
      if (!x) throw UndeclaredArgument(std::string(name), line_no);
      return *x;
    };

    if (slot < 3) {
      const Label label = static_cast<Label>(slot);
      for (std::string_view name : items) {
        ArgId x = lookup(name);
        if (seen[x.index()])
          throw SyntaxError("argument '" + std::string(name) + "' labelled twice", line_no);
        seen[x.index()] = 1;
        cert.lab.set(x, label);
      }
      continue;
    }

    MinMaxNumbering mm(n);
    for (std::string_view item : items) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw SyntaxError("expected name=value in mm line", line_no);
      ArgId x = lookup(item.substr(0, eq));
      if (mm.contains(x))
        throw SyntaxError("argument '" + af.name(x) + "' numbered twice", line_no);
      std::string_view value = item.substr(eq + 1);
      if (value == "inf") {
        mm.set(x, MinMaxValue::infinity());
        continue;
      }
      std::uint32_t v = 0;
      auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || end != value.data() + value.size() || v == 0 ||
          !MinMaxValue(v).is_finite())
        throw SyntaxError("bad min-max value '" + std::string(value) + "'", line_no);
      mm.set(x, v);
    }
    cert.mm = std::move(mm);
  }
  return cert;
}

}  // namespace sadm
