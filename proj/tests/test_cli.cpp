#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "helpers.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RAMIQ_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& text) {
  static int counter = 0;
  std::string path = "/tmp/ramiq_test_" + std::to_string(getpid()) + "_" +
                     std::to_string(counter++) + ".json";
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("example command prints the corpus") {
  for (const std::string& name : ramiq::corpus_names()) {
    RunResult r = run_cli("example " + name);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "\"" + name + "\""));
    // round-trip: the printed scenario must compute cleanly
    RunResult c = run_cli("compute " + write_temp(r.output));
    CHECK(c.exit_code == 0);
  }
}

TEST_CASE("example command rejects unknown names") {
  RunResult r = run_cli("example nonexistent");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "UnknownExample"));
  CHECK(contains(r.output, "p1_antipode"));
  CHECK(contains(r.output, "z4_curve"));
}

TEST_CASE("compute prints multiplicities") {
  RunResult r = run_cli("compute " + write_temp(ramiq::corpus_json("p1_antipode")));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "trivial: 1"));
  CHECK(contains(r.output, "sign: 0"));
}

TEST_CASE("compute with trace table") {
  RunResult r = run_cli("compute --trace-check " +
                        write_temp(ramiq::corpus_json("genus2_hyperelliptic")));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "trace check:"));
  CHECK(contains(r.output, "lhs=-3 rhs=-3 ok"));
  CHECK_FALSE(contains(r.output, "MISMATCH"));
}

TEST_CASE("json output round-trips multiplicities") {
  RunResult r = run_cli("compute --format json --trace-check " +
                        write_temp(ramiq::corpus_json("genus2_hyperelliptic")));
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["multiplicities"]["trivial"] == "-1");
  CHECK(doc["multiplicities"]["sign"] == "2");
  CHECK(doc["integral"] == true);
  CHECK(doc["traces_consistent"] == true);
  CHECK(doc["trace"].size() == 2);
}

TEST_CASE("closed-form comparison") {
  RunResult r = run_cli("compute --closed-form-compare " +
                        write_temp(ramiq::corpus_json("klein4_surface")));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "delta zero"));
  CHECK(contains(r.output, "z2n_surface"));
  CHECK_FALSE(contains(r.output, "DELTA NONZERO"));
}

TEST_CASE("check validates without computing") {
  RunResult ok = run_cli("check " + write_temp(ramiq::corpus_json("z4_curve")));
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "ok"));

  // stabilizer set not closed under the group law
  std::string bad = R"({
    "group": {"kind": "cyclic", "n": 4},
    "ambient": {"dim": 1, "genus": 0},
    "sheaf": {"kind": "general", "rank": 1, "degree": 0},
    "strata": [{
      "id": "P", "dim": 0, "stabilizer": [0, 1],
      "normal": [{"character": {"0": [1, 0], "1": [4, 1]}, "multiplicity": 1}],
      "sheaf": [{"character": {"0": [1, 0], "1": [1, 0]}, "rank": 1}]
    }]
  })";
  RunResult r = run_cli("check " + write_temp(bad));
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "NotASubgroup"));
}

TEST_CASE("unknown keys are rejected") {
  std::string text = R"({
    "group": {"kind": "cyclic", "n": 2},
    "ambient": {"dim": 1, "genus": 0},
    "sheaf": {"kind": "general", "rank": 1, "degree": 0},
    "strata": [],
    "surprise": 1
  })";
  RunResult r = run_cli("check " + write_temp(text));
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "ParseError"));
  CHECK(contains(r.output, "surprise"));
}

TEST_CASE("flagged inconsistencies exit with status 2") {
  // genus-2 scenario with a Weierstrass point removed: non-integral module
  nlohmann::json doc = nlohmann::json::parse(ramiq::corpus_json("genus2_hyperelliptic"));
  doc["strata"].erase(doc["strata"].size() - 1);
  RunResult r = run_cli("compute " + write_temp(doc.dump()));
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "integrality: FAILED"));
}
