#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace sadm::cli;

namespace {

void add_input(CLI::App* cmd, CliConfig& config, std::string& format) {
  cmd->add_option("framework", config.input, "Framework file (.tgf or .apx)")->required();
  cmd->add_option("--format", format, "Input format: tgf, apx or auto")
      ->check(CLI::IsMember({"tgf", "apx", "auto"}))
      ->default_val("auto");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small strongly admissible labellings for grounded membership"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "auto";
  std::string algorithm = "alg3";
  std::string query;
  std::size_t oracle_limit = 0;
  long long timeout_ms = 0;
  bool no_oracle = false;

  auto* solve = app.add_subcommand("solve", "Compute a labelling and its min-max numbering");
  add_input(solve, config, format);
  solve->add_option("--alg", algorithm, "grounded, alg1, alg3 or minimal")
      ->check(CLI::IsMember({"grounded", "alg1", "alg3", "minimal"}))
      ->default_val("alg3");
  solve->add_option("--query,-a", query, "Argument that must be labelled in");
  solve->add_option("--oracle-limit", oracle_limit, "Max arguments for --alg minimal");

  auto* verify = app.add_subcommand("verify", "Check a labelling/numbering certificate");
  add_input(verify, config, format);
  verify->add_option("--cert,-c", config.certificate, "Certificate file")->required();
  verify->add_option("--query,-a", query, "Argument that must be labelled in");

  auto* enumerate = app.add_subcommand("enumerate", "List all strongly admissible sets");
  add_input(enumerate, config, format);
  enumerate->add_option("--oracle-limit", oracle_limit, "Max arguments to enumerate");

  auto* bench = app.add_subcommand("bench", "Size/runtime comparison over a manifest, as CSV");
  bench->add_option("manifest", config.manifest, "Lines of 'path<TAB>query'")->required();
  bench->add_option("--format", format, "Input format: tgf, apx or auto")
      ->check(CLI::IsMember({"tgf", "apx", "auto"}))
      ->default_val("auto");
  bench->add_option("--output,-o", config.output, "CSV output path (default stdout)");
  bench->add_option("--repeat,-r", config.repeats, "Runs per method; the median is reported")
      ->check(CLI::PositiveNumber)
      ->default_val(5);
  bench->add_option("--oracle-limit", oracle_limit, "Max arguments for the exact minimum");
  bench->add_flag("--no-oracle", no_oracle, "Skip the exact minimum");
  bench->add_option("--timeout-ms", timeout_ms, "Time budget per exact-minimum search");

  CLI11_PARSE(app, argc, argv);

  if (format == "tgf") config.format = sadm::FileFormat::tgf;
  else if (format == "apx") config.format = sadm::FileFormat::apx;
  if (!query.empty()) config.query = query;
  if (oracle_limit > 0) config.oracle_limit = oracle_limit;
  if (timeout_ms > 0) config.timeout = std::chrono::milliseconds(timeout_ms);
  config.with_oracle = !no_oracle;
  static const std::map<std::string, Algorithm> algorithms{{"grounded", Algorithm::grounded},
                                                           {"alg1", Algorithm::alg1},
                                                           {"alg3", Algorithm::alg3},
                                                           {"minimal", Algorithm::minimal}};
  config.algorithm = algorithms.at(algorithm);

  if (solve->parsed()) return cmd_solve(config, std::cout, std::cerr);
  if (verify->parsed()) return cmd_verify(config, std::cout, std::cerr);
  if (enumerate->parsed()) return cmd_enumerate(config, std::cout, std::cerr);
  return cmd_bench(config, std::cout, std::cerr);
}
