#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "sadm/labelling_io.hpp"
#include "support.hpp"

using namespace sadm;
using namespace sadm::cli;

namespace {

const std::string kData = SADM_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <class Cmd>
Run run(Cmd cmd, const CliConfig& config) {
  std::ostringstream out, err;
  int code = cmd(config, out, err);
  return {code, out.str(), err.str()};
}

CliConfig solve_config(const std::string& file, Algorithm alg, std::optional<std::string> query) {
  CliConfig c;
  c.input = kData + "/" + file;
  c.algorithm = alg;
  c.query = std::move(query);
  return c;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "sadm_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("solve alg3 prints the pruned certificate") {
  auto r = run(cmd_solve, solve_config("fig1.tgf", Algorithm::alg3, "C"));
  CHECK(r.code == kOk);
  CHECK(r.out == "in: A C\nout: B\nundec: D E F G H\nmm: A=1 B=2 C=3\n");
}

TEST_CASE("solve reports arguments outside the grounded extension") {
  auto r = run(cmd_solve, solve_config("fig1.tgf", Algorithm::alg1, "G"));
  CHECK(r.code == kFailed);
  CHECK(r.out.empty());
  CHECK(r.err.find("'G'") != std::string::npos);
}

TEST_CASE("solve grounded prints the grounded labelling and numbering") {
  auto r = run(cmd_solve, solve_config("fig1.tgf", Algorithm::grounded, std::nullopt));
  CHECK(r.code == kOk);
  CHECK(r.out == "in: A C D F\nout: B E\nundec: G H\nmm: A=1 B=2 C=3 D=1 E=2 F=3\n");
}

TEST_CASE("solve on APX input and the minimal method") {
  auto r = run(cmd_solve, solve_config("fig1.apx", Algorithm::minimal, "F"));
  CHECK(r.code == kOk);
  CHECK(r.out == "in: D F\nout: E\nundec: A B C G H\nmm: D=1 E=2 F=3\n");
}

TEST_CASE("solve input errors exit 2") {
  CHECK(run(cmd_solve, solve_config("missing.tgf", Algorithm::alg3, "C")).code == kInputError);
  CHECK(run(cmd_solve, solve_config("fig1.tgf", Algorithm::alg3, "Z")).code == kInputError);
  CHECK(run(cmd_solve, solve_config("fig1.tgf", Algorithm::alg3, std::nullopt)).code == kInputError);

  // Format override that does not match the content.
  auto c = solve_config("fig1.tgf", Algorithm::alg3, "C");
  c.format = FileFormat::apx;
  auto r = run(cmd_solve, c);
  CHECK(r.code == kInputError);
  CHECK(r.err.find("line") != std::string::npos);
}

TEST_CASE("verify certificates") {
  CliConfig c;
  c.input = kData + "/fig1.tgf";

  c.certificate = kData + "/fig1_lab2.cert";
  CHECK(run(cmd_verify, c).code == kOk);

  c.certificate = kData + "/fig1_lab1.cert";
  auto lab1 = run(cmd_verify, c);
  CHECK(lab1.code == kFailed);
  CHECK(lab1.out.find("G has min-max number inf") != std::string::npos);

  c.certificate = kData + "/fig1_lab2_bad_f.cert";
  auto bad = run(cmd_verify, c);
  CHECK(bad.code == kFailed);
  CHECK(bad.out.find("fails at F") != std::string::npos);

  c.certificate = kData + "/fig1_lab2.cert";
  c.query = "G";
  auto q = run(cmd_verify, c);
  CHECK(q.code == kFailed);
  CHECK(q.out.find("query G") != std::string::npos);

  c.query.reset();
  c.certificate = write_scratch("garbage.cert", "in: A Q\n");
  CHECK(run(cmd_verify, c).code == kInputError);
  c.certificate = write_scratch("twice.cert", "in: A\nout: A\n");
  CHECK(run(cmd_verify, c).code == kInputError);
  c.certificate = write_scratch("nomm.cert", "in: A C\nout: B\n");
  CHECK(run(cmd_verify, c).code == kOk);
  c.certificate = write_scratch("notadm.cert", "in: C\n");
  CHECK(run(cmd_verify, c).code == kFailed);
}

TEST_CASE("enumerate") {
  CliConfig c;
  c.input = kData + "/fig1.tgf";
  auto r = run(cmd_enumerate, c);
  CHECK(r.code == kOk);
  CHECK(r.out ==
        "{}\n{A}\n{D}\n{A,C}\n{A,D}\n{D,F}\n{A,C,D}\n{A,C,F}\n{A,D,F}\n{A,C,D,F}\n");

  c.input = kData + "/self_attacker.tgf";
  CHECK(run(cmd_enumerate, c).out == "{}\n");

  c.input = kData + "/sq5.tgf";
  CHECK(lines_of(run(cmd_enumerate, c).out).size() == 4);

  c.input = kData + "/fig1.tgf";
  c.oracle_limit = 4;
  CHECK(run(cmd_enumerate, c).code == kFailed);
}

TEST_CASE("bench writes one row per manifest line") {
  CliConfig c;
  c.manifest = kData + "/demo.manifest";
  c.repeats = 1;
  auto r = run(cmd_bench, c);
  REQUIRE(r.code == kOk);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == kBenchHeader);

  auto c_row = split(lines[1], ',');
  REQUIRE(c_row.size() == 14);
  CHECK(c_row[0] == "fig1.tgf");
  CHECK(c_row[1] == "C");
  CHECK(c_row[2] == "6");
  CHECK(c_row[3] == "4");
  CHECK(c_row[4] == "3");
  CHECK(c_row[5] == "3");
  CHECK(c_row[6] == "66.7");
  CHECK(c_row[7] == "50.0");
  CHECK(c_row[8] == "100.0");
  CHECK(c_row[13].empty());

  auto f_row = split(lines[2], ',');
  CHECK(f_row[3] == "6");
  CHECK(f_row[4] == "3");

  auto g_row = split(lines[4], ',');
  REQUIRE(g_row.size() == 14);
  CHECK(g_row[1] == "G");
  CHECK(g_row[2].empty());
  CHECK(g_row[13].find("NotInGrounded") == 0);
}

TEST_CASE("bench on an empty manifest prints only the header") {
  CliConfig c;
  c.manifest = write_scratch("empty.manifest", "# nothing here\n");
  auto r = run(cmd_bench, c);
  CHECK(r.code == kOk);
  CHECK(r.out == std::string(kBenchHeader) + "\n");

  c.manifest = write_scratch("broken.manifest", "fig1.tgf C\n");
  CHECK(run(cmd_bench, c).code == kInputError);
}

TEST_CASE("bench without the oracle leaves its columns empty") {
  CliConfig c;
  c.manifest = kData + "/demo.manifest";
  c.repeats = 1;
  c.with_oracle = false;
  auto lines = lines_of(run(cmd_bench, c).out);
  auto row = split(lines[1], ',');
  CHECK(row[5].empty());
  CHECK(row[8].empty());
  CHECK(row[12].empty());
  CHECK(row[13].empty());
}

TEST_CASE("property: solve output re-verifies") {
  std::vector<std::string> files{"fig1.tgf", "sq5.tgf", "fig1.apx", "self_attacker.tgf"};
  for (const auto& entry : test::random_corpus(40, 1, 10, 61)) {
    std::string name = "rand" + std::to_string(entry.seed) + ".tgf";
    write_scratch(name, to_tgf(entry.af));
    files.push_back((scratch_dir() / name).string());
  }
  for (const auto& file : files) {
    const std::string path = file.front() == '/' ? file : kData + "/" + file;
    auto af = load_file(path);
    for (const auto& name : af.names()) {
      for (Algorithm alg : {Algorithm::alg1, Algorithm::alg3, Algorithm::minimal}) {
        CliConfig c;
        c.input = path;
        c.algorithm = alg;
        c.query = name;
        auto solved = run(cmd_solve, c);
        if (solved.code == kFailed) continue;
        REQUIRE(solved.code == kOk);
        c.certificate = write_scratch("roundtrip.cert", solved.out);
        REQUIRE(run(cmd_verify, c).code == kOk);
      }
    }
  }
}
