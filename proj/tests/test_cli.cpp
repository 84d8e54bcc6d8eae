#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SGT_CLI_PATH
#error "SGT_CLI_PATH must point at the built binary"
#endif

namespace {

using Json = nlohmann::json;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SGT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> chunk{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(chunk.data(), chunk.size(), pipe) != nullptr) output += chunk.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("schur subcommand prints the value") {
  auto r = run_cli("schur --k 2 --lambda 1 --q 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2\n");
  auto exact = run_cli("schur --k 2 --lambda 1 --q 3/2 --mode exact");
  CHECK(exact.exit_code == 0);
  CHECK(exact.output == "13/6\n");
}

TEST_CASE("parameter violations exit with the domain code") {
  auto r = run_cli("simulate-discrete --k 2 --alpha 0.9 --q 1.2 --horizon 1 --out /tmp/x.csv");
  CHECK(r.exit_code == 3);
}

TEST_CASE("unknown flags exit with the usage code") {
  auto r = run_cli("schur --nope 3");
  CHECK(r.exit_code == 2);
  auto missing = run_cli("schur --k 2");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("simulate-discrete writes reproducible csv artifacts") {
  const std::string out = "/tmp/sgt_cli_test_traj.csv";
  const std::string args =
      "simulate-discrete --k 2 --q 1 --alpha 0.4 --horizon 2 --trajectories 4 --seed 7 "
      "--record full --out " +
      out;
  auto r1 = run_cli(args);
  REQUIRE(r1.exit_code == 0);
  const std::string first = slurp(out);
  auto r2 = run_cli(args);
  REQUIRE(r2.exit_code == 0);
  CHECK(slurp(out) == first);

  std::istringstream is(first);
  std::string line;
  std::getline(is, line);
  CHECK(line == "# seed=7");
  std::getline(is, line);
  CHECK(line == "trajectory,time2,row,j,value");
  long long rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 4 * 5 * 2);
  std::remove(out.c_str());
}

TEST_CASE("kernel subcommand emits a JSON row") {
  const std::string out = "/tmp/sgt_cli_test_kernel.json";
  auto r = run_cli("kernel --kernel P --k 2 --lambda 0 --alpha 1/2 --q 1 --mode exact "
                   "--eps 1e-8 --out " +
                   out);
  REQUIRE(r.exit_code == 0);
  const Json row = Json::parse(slurp(out));
  CHECK(row.at("kernel") == "P");
  CHECK(row.at("entries").size() > 10);
  std::remove(out.c_str());
}

TEST_CASE("verify accepts kernel-style parameter flags") {
  auto r = run_cli("verify --claim PROP-8.2 --k 3 --alpha 1/2 --q 1,1 --mode exact");
  CHECK(r.exit_code == 0);
}

TEST_CASE("verify subcommand gates its exit code on the report") {
  const std::string out = "/tmp/sgt_cli_test_report.json";
  auto r = run_cli("verify --claim PIERI --out " + out);
  CHECK(r.exit_code == 0);
  const Json report = Json::parse(slurp(out));
  CHECK(report.at("pass").get<bool>());
  CHECK(report.at("claim") == "PIERI-1");
  std::remove(out.c_str());

  auto bad = run_cli("verify --claim NOPE");
  CHECK(bad.exit_code == 3);
}

TEST_CASE("simulate-continuous writes events and final state") {
  const std::string ev = "/tmp/sgt_cli_test_events.jsonl";
  const std::string fin = "/tmp/sgt_cli_test_final.csv";
  auto r = run_cli("simulate-continuous --k 2 --q 1 --horizon 0.5 --trajectories 2 --seed 3 "
                   "--out " +
                   ev + " --final-out " + fin);
  REQUIRE(r.exit_code == 0);
  std::istringstream is(slurp(ev));
  std::string line;
  std::getline(is, line);
  CHECK(Json::parse(line).contains("meta"));
  while (std::getline(is, line)) {
    const Json event = Json::parse(line);
    CHECK(event.contains("applied"));
  }
  std::istringstream fs(slurp(fin));
  std::getline(fs, line);
  CHECK(line == "# seed=3");
  std::getline(fs, line);
  CHECK(line == "trajectory,row,j,value");
  std::remove(ev.c_str());
  std::remove(fin.c_str());
}
