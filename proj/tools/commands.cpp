#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sadm/construct.hpp"
#include "sadm/error.hpp"
#include "sadm/labelling_io.hpp"
#include "sadm/oracle.hpp"
#include "sadm/pipeline.hpp"

namespace sadm::cli {

namespace {

OracleLimits limits_for(const CliConfig& config) {
  OracleLimits limits;
  if (config.oracle_limit) {
    limits.max_subset_args = *config.oracle_limit;
    limits.max_labelling_args = std::min<std::size_t>(*config.oracle_limit, 8);
  }
  return limits;
}

std::optional<ArgumentationFramework> load(const CliConfig& config, std::ostream& err) {
  try {
    return load_file(config.input, config.format);
  } catch (const Error& e) {
    err << "error: " << config.input << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

std::optional<ArgId> resolve_query(const ArgumentationFramework& af, const std::string& name,
                                   std::ostream& err) {
  auto x = af.find(name);
  if (!x) err << "error: unknown argument '" << name << "'\n";
  return x;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int cmd_solve(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto af = load(config, err);
  if (!af) return kInputError;

  std::optional<ArgId> query;
  if (config.query) {
    query = resolve_query(*af, *config.query, err);
    if (!query) return kInputError;
  } else if (config.algorithm != Algorithm::grounded) {
    err << "error: --query is required for this algorithm\n";
    return kInputError;
  }

  try {
    ConstructResult result;
    switch (config.algorithm) {
      case Algorithm::grounded:
        result = grounded_with_minmax(*af);
        if (query && !result.lab.is_in(*query)) throw NotInGrounded(af->name(*query));
        break;
      case Algorithm::alg1:
        result = construct_for(*af, *query);
        break;
      case Algorithm::alg3:
        result = small_strongly_admissible(*af, *query);
        break;
      case Algorithm::minimal: {
        auto m = minimal_strongly_admissible_for(*af, *query, limits_for(config));
        result.lab = std::move(m.lab);
        result.mm = std::move(m.mm);
        break;
      }
    }
    out << format_certificate(*af, result.lab, result.mm);
    return kOk;
  } catch (const NotInGrounded& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const OracleTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto af = load(config, err);
  if (!af) return kInputError;

  Certificate cert;
  try {
    cert = parse_certificate(*af, read_file(config.certificate));
  } catch (const Error& e) {
    err << "error: " << config.certificate << ": " << e.what() << '\n';
    return kInputError;
  }
  std::optional<ArgId> query;
  if (config.query) {
    query = resolve_query(*af, *config.query, err);
    if (!query) return kInputError;
  }

  auto fail = [&](const std::string& what) {
    out << "FAIL: " << what << '\n';
    return kFailed;
  };

  if (auto v = check_admissible(*af, cert.lab)) return fail("not admissible: " + v->message);

  MinMaxNumbering mm;
  if (cert.mm) {
    if (auto v = check_minmax(*af, cert.lab, *cert.mm))
      return fail("min-max numbering clause fails at " + af->name(v->arg) + ": " + v->message);
    mm = *cert.mm;
  } else {
    mm = compute_minmax(*af, cert.lab);
  }
  for (ArgId x : mm.domain())
    if (!mm[x]->is_finite())
      return fail("not strongly admissible: " + af->name(x) + " has min-max number inf");

  if (query && !cert.lab.is_in(*query))
    return fail("query " + af->name(*query) + " is not labelled in");

  out << "OK: strongly admissible, size " << lab_size(cert.lab) << '\n';
  return kOk;
}

int cmd_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto af = load(config, err);
  if (!af) return kInputError;
  try {
    for (const ArgSet& s : enumerate_strongly_admissible_sets(*af, limits_for(config))) {
      out << '{';
      bool first = true;
      for (ArgId x : s.members()) {
        if (!first) out << ',';
        out << af->name(x);
        first = false;
      }
      out << "}\n";
    }
    return kOk;
  } catch (const OracleTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string fixed1(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << v;
  return s.str();
}

template <class T>
std::string opt_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) return fixed1(*v);
  else if constexpr (std::is_same_v<T, std::chrono::nanoseconds>) return std::to_string(v->count());
  else return std::to_string(*v);
}

std::string join(const std::vector<std::string>& cols) {
  std::string line;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) line += ',';
    line += cols[i];
  }
  return line;
}

struct ManifestEntry {
  std::string framework;  // as written
  std::string path;       // resolved
  std::string query;
};

std::vector<ManifestEntry> read_manifest(const std::string& manifest) {
  std::string text = read_file(manifest);
  const auto base = std::filesystem::path(manifest).parent_path();
  std::vector<ManifestEntry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw SyntaxError("expected 'path<TAB>query'", line_no);
    ManifestEntry e;
    e.framework = line.substr(0, tab);
    e.query = line.substr(tab + 1);
    if (e.framework.empty() || e.query.empty())
      throw SyntaxError("expected 'path<TAB>query'", line_no);
    std::filesystem::path p(e.framework);
    e.path = (p.is_absolute() ? p : base / p).string();
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string bench_row(const CliConfig& config, const ManifestEntry& entry) {
  std::vector<std::string> cols{csv_field(entry.framework), csv_field(entry.query)};
  auto pad_error = [&](const std::string& error) {
    cols.resize(13);
    cols.push_back(csv_field(error));
  };

  ArgumentationFramework af;
  try {
    af = load_file(entry.path, config.format);
  } catch (const Error& e) {
    pad_error(std::string("InputError: ") + e.what());
    return join(cols);
  }
  auto q = af.find(entry.query);
  if (!q) {
    pad_error("UnknownArgument: " + entry.query);
    return join(cols);
  }

  CompareOptions options;
  options.with_oracle = config.with_oracle;
  options.oracle_limits = limits_for(config);
  options.repeats = config.repeats;
  if (config.timeout) options.oracle_limits.deadline = std::chrono::steady_clock::now() + *config.timeout;

  ComparisonRow row;
  try {
    row = compare(af, *q, options);
  } catch (const NotInGrounded& e) {
    pad_error(std::string("NotInGrounded: ") + e.what());
    return join(cols);
  }
  cols.push_back(std::to_string(row.grounded_size));
  cols.push_back(std::to_string(row.alg1_size));
  cols.push_back(std::to_string(row.alg3_size));
  cols.push_back(opt_field(row.oracle_min_size));
  cols.push_back(opt_field(row.alg1_pct_of_grounded));
  cols.push_back(opt_field(row.alg3_pct_of_grounded));
  cols.push_back(opt_field(row.alg3_pct_of_min));
  cols.push_back(std::to_string(row.t_grounded.count()));
  cols.push_back(std::to_string(row.t_alg1.count()));
  cols.push_back(std::to_string(row.t_alg3.count()));
  cols.push_back(opt_field(row.t_min));
  cols.push_back(csv_field(row.oracle_error.value_or("")));
  return join(cols);
}

}  // namespace

int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.repeats < 1) {
    err << "error: repeat count must be at least 1\n";
    return kInputError;
  }
  std::vector<ManifestEntry> entries;
  try {
    entries = read_manifest(config.manifest);
  } catch (const Error& e) {
    err << "error: " << config.manifest << ": " << e.what() << '\n';
    return kInputError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output) {
    file.open(*config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << *config.output << "'\n";
      return kInputError;
    }
    sink = &file;
  }

  *sink << kBenchHeader << '\n';
  for (const ManifestEntry& entry : entries) *sink << bench_row(config, entry) << '\n';
  return kOk;
}

}  // namespace sadm::cli
