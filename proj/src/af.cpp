#include "sadm/af.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sadm/error.hpp"

namespace sadm {

ArgumentationFramework::ArgumentationFramework(std::vector<std::string> names,
                                               std::vector<Attack> attacks)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  by_name_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty argument name");
    if (!by_name_.emplace(names_[i], arg(i)).second)
      throw std::invalid_argument("duplicate argument name '" + names_[i] + "'");
  }
  for (const Attack& a : attacks) {
    if (a.attacker.index() >= n || a.target.index() >= n)
      throw std::invalid_argument("attack endpoint out of range");
  }
  std::sort(attacks.begin(), attacks.end());
  attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());
  attacks_ = std::move(attacks);

  attackers_.resize(n);
  attackees_.resize(n);
  // attacks_ is sorted by attacker, so attackees_ lists come out sorted;
  // attackers_ lists are filled in attacker order as well.
  for (const Attack& a : attacks_) {
    attackees_[a.attacker.index()].push_back(a.target);
    attackers_[a.target.index()].push_back(a.attacker);
  }
}

bool ArgumentationFramework::attacks(ArgId from, ArgId to) const {
  const auto& out = attackees_[from.index()];
  return std::binary_search(out.begin(), out.end(), to);
}

std::optional<ArgId> ArgumentationFramework::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string_view strip_bom(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  return text;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Collects names and checks uniqueness while a parser walks its input.
class Builder {
 public:
  void declare(std::string_view name, std::size_t line) {
    std::string key(name);
    if (index_.count(key)) throw SyntaxError("duplicate argument '" + key + "'", line);
    index_.emplace(key, arg(names_.size()));
    names_.push_back(std::move(key));
  }

  ArgId lookup(std::string_view name, std::size_t line) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UndeclaredArgument(std::string(name), line);
    return it->second;
  }

  void attack(ArgId from, ArgId to) { attacks_.push_back({from, to}); }

  ArgumentationFramework build() && {
    return ArgumentationFramework(std::move(names_), std::move(attacks_));
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgId> index_;
  std::vector<Attack> attacks_;
};

}  // namespace

ArgumentationFramework parse_tgf(std::string_view text) {
  text = strip_bom(text);
  Builder builder;
  bool in_edges = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line == "#") {
      if (in_edges) throw SyntaxError("second '#' separator", line_no);
      in_edges = true;
      continue;
    }
    auto tokens = split_ws(line);
    if (!in_edges) {
      if (tokens.size() != 1) throw SyntaxError("argument name contains whitespace", line_no);
      builder.declare(tokens[0], line_no);
    } else {
      if (tokens.size() != 2) throw SyntaxError("expected 'attacker target'", line_no);
      ArgId from = builder.lookup(tokens[0], line_no);
      ArgId to = builder.lookup(tokens[1], line_no);
      builder.attack(from, to);
    }
  }
  if (!in_edges) throw SyntaxError("missing '#' separator", line_no);
  return std::move(builder).build();
}

namespace {

struct ApxFact {
  std::string_view predicate;
  std::vector<std::string_view> args;
  std::size_t line;
};

// Splits ASPARTIX input into facts of the form pred(a,...). with '%' comments.
class ApxLexer {
 public:
  explicit ApxLexer(std::string_view text) : text_(text) {}

  std::optional<ApxFact> next() {
    skip_blank();
    if (pos_ >= text_.size()) return std::nullopt;
    ApxFact fact;
    fact.line = line_;
    fact.predicate = identifier();
    if (fact.predicate.empty()) fail("expected predicate");
    skip_blank();
    expect('(');
    for (;;) {
      skip_blank();
      std::string_view id = identifier();
      if (id.empty()) fail("expected argument name");
      fact.args.push_back(id);
      skip_blank();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    skip_blank();
    expect('.');
    return fact;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (is_space(c) || c == '(' || c == ')' || c == ',' || c == '.' || c == '%') break;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) {
  ApxLexer lexer(strip_bom(text));
  std::vector<ApxFact> atts;
  Builder builder;
  while (auto fact = lexer.next()) {
    if (fact->predicate == "arg") {
      if (fact->args.size() != 1) throw SyntaxError("arg/1 expects one name", fact->line);
      builder.declare(fact->args[0], fact->line);
    } else if (fact->predicate == "att") {
      if (fact->args.size() != 2) throw SyntaxError("att/2 expects two names", fact->line);
      atts.push_back(*fact);
    } else {
      throw SyntaxError("unknown predicate '" + std::string(fact->predicate) + "'", fact->line);
    }
  }
  // att facts may precede the arg facts they mention.
  for (const ApxFact& f : atts)
    builder.attack(builder.lookup(f.args[0], f.line), builder.lookup(f.args[1], f.line));
  return std::move(builder).build();
}

std::string to_tgf(const ArgumentationFramework& af) {
  std::ostringstream out;
  for (const auto& name : af.names()) out << name << '\n';
  out << "#\n";
  for (const Attack& a : af.attacks())
    out << af.name(a.attacker) << ' ' << af.name(a.target) << '\n';
  return out.str();
}

std::string to_apx(const ArgumentationFramework& af) {
  std::ostringstream out;
  for (const auto& name : af.names()) out << "arg(" << name << ").\n";
  for (const Attack& a : af.attacks())
    out << "att(" << af.name(a.attacker) << ',' << af.name(a.target) << ").\n";
  return out.str();
}

std::optional<FileFormat> format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string ext(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == "tgf") return FileFormat::tgf;
  if (ext == "apx") return FileFormat::apx;
  return std::nullopt;
}

ArgumentationFramework parse(std::string_view text, FileFormat format) {
  return format == FileFormat::tgf ? parse_tgf(text) : parse_apx(text);
}

ArgumentationFramework load_file(const std::string& path, std::optional<FileFormat> format) {
  if (!format) format = format_from_path(path);
  if (!format) throw Error("cannot infer format of '" + path + "' (use .tgf or .apx)");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), *format);
}

}  // namespace sadm
