// Drives the installed CLI binary end to end. The path comes from the
// DQCALC_CLI environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "dqcalc/json_io.hpp"
#include "helpers.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* path = std::getenv("DQCALC_CLI");
  REQUIRE_MESSAGE(path != nullptr, "DQCALC_CLI must point at the binary");
  return path;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

const char* kZeroDq =
    R"('{"real":{"w":0,"x":0,"y":0,"z":0},"dual":{"w":0,"x":0,"y":0,"z":0}}')";

}  // namespace

TEST_CASE("eval exp at zero returns the identity") {
  const RunResult res = run(std::string("eval --fn exp --dq ") + kZeroDq);
  REQUIRE(res.exit_code == 0);
  const dqcalc::DualQuaternion dq = dqcalc::dual_quaternion_from_json(res.out);
  CHECK(dq == dqcalc::dq_one());
}

TEST_CASE("eval inv matches the closed form") {
  const RunResult res = run(
      R"(eval --fn inv --dq '{"real":{"w":2,"x":0,"y":0,"z":0},"dual":{"w":0,"x":0,"y":1,"z":0}}')");
  REQUIRE(res.exit_code == 0);
  const dqcalc::DualQuaternion dq = dqcalc::dual_quaternion_from_json(res.out);
  CHECK(dqtest::rel(dq, dqcalc::DualQuaternion{{0.5, 0.0, 0.0, 0.0},
                                               {0.0, 0.0, -0.25, 0.0}}) < 1e-15);
}

TEST_CASE("eval pow on the excluded half-line exits 3") {
  const RunResult res = run(
      R"(eval --fn pow:0.5 --dq '{"real":{"w":-1,"x":0,"y":0,"z":0},"dual":{"w":0,"x":0,"y":0,"z":0}}')");
  CHECK(res.exit_code == 3);
}

TEST_CASE("eval log reports the branch") {
  const RunResult res = run(
      R"(eval --fn log --dq '{"real":{"w":-1,"x":0,"y":0,"z":0},"dual":{"w":0,"x":0,"y":0,"z":0}}')");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("\"branch\"") != std::string::npos);
  CHECK(res.out.find("\"n\":1") != std::string::npos);
}

TEST_CASE("eval abs emits a dual number") {
  const RunResult res = run(
      R"(eval --fn abs --dq '{"real":{"w":3,"x":0,"y":0,"z":0},"dual":{"w":4,"x":0,"y":0,"z":0}}')");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "{\"a\":3,\"b\":4}\n");
}

TEST_CASE("eval polynomial from a file") {
  const std::string path = "/tmp/dqcalc_poly_" + std::to_string(getpid()) + ".json";
  {
    std::ofstream out(path);
    out << R"({"terms":[{"m":0,"n":2,"r":1}]})";  // (iy)^2
  }
  const RunResult res = run(
      "eval --fn poly:@" + path +
      R"( --dq '{"real":{"w":0,"x":1,"y":0,"z":0},"dual":{"w":0,"x":0,"y":1,"z":0}}')");
  std::remove(path.c_str());
  REQUIRE(res.exit_code == 0);
  const dqcalc::DualQuaternion dq = dqcalc::dual_quaternion_from_json(res.out);
  CHECK(dqtest::rel(dq, dqcalc::DualQuaternion{{-1.0, 0.0, 0.0, 0.0}, {}}) < 1e-14);
}

TEST_CASE("eval rejects malformed input with exit 2") {
  CHECK(run("eval --fn exp --dq '{\"real\":{}}'").exit_code == 2);
  CHECK(run("eval --fn exp --dq 'not-json'").exit_code == 2);
  CHECK(run(std::string("eval --fn warp --dq ") + kZeroDq).exit_code == 2);
  CHECK(run(std::string("eval --fn pow:xyz --dq ") + kZeroDq).exit_code == 2);
}

TEST_CASE("pascal prints rows exactly") {
  const RunResult res = run("pascal --n 4");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out == "1\n1 1\n1 0 1\n1 1 1 1\n1 0 2 0 1\n");
  CHECK(run("pascal --n 0").out == "1\n");
  CHECK(run("pascal --n -1").exit_code == 2);
  CHECK(run("pascal --n 40").exit_code == 2);
}

TEST_CASE("verify smoke run is deterministic and passes") {
  const std::string args = "verify --suite all --trials 2 --seed 7";
  const RunResult a = run(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out.find("overall PASS") != std::string::npos);
  const RunResult b = run(args);
  CHECK(a.out == b.out);
  // serial path renders the same bytes
  const RunResult c = run(args + " --serial");
  CHECK(a.out == c.out);
}

TEST_CASE("verify exits 1 when a suite fails") {
  const RunResult res = run("verify --suite oracle --trials 2 --seed 7 --tol 1e-300");
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("overall FAIL") != std::string::npos);
}

TEST_CASE("unknown flags exit 2") {
  CHECK(run("verify --bogus").exit_code == 2);
  CHECK(run("").exit_code == 2);
}
