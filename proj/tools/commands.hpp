#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "sadm/af.hpp"

namespace sadm::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // not in grounded / verification failed / oracle refused
inline constexpr int kInputError = 2;  // unreadable or malformed input

enum class Algorithm { grounded, alg1, alg3, minimal };

struct CliConfig {
  std::string input;                   // framework file
  std::optional<FileFormat> format;    // nullopt = by extension
  std::optional<std::string> query;
  Algorithm algorithm = Algorithm::alg3;
  std::optional<std::size_t> oracle_limit;
  unsigned repeats = 5;
  std::optional<std::string> output;   // bench: CSV path, stdout if unset
  std::string certificate;             // verify
  std::string manifest;                // bench
  bool with_oracle = true;             // bench
  std::optional<std::chrono::milliseconds> timeout;  // bench, per oracle call
};

int cmd_solve(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_enumerate(const CliConfig& config, std::ostream& out, std::ostream& err);

inline constexpr const char* kBenchHeader =
    "framework,query,grounded_size,alg1_size,alg3_size,min_size,alg1_pct,alg3_pct,"
    "alg3_vs_min_pct,t_grounded_ns,t_alg1_ns,t_alg3_ns,t_min_ns,error";

}  // namespace sadm::cli
