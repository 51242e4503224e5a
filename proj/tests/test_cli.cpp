// Golden tests for the command-line surface: byte-exact JSON, the
// documented exit-code contract, and determinism across runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#ifndef GPAVOID_CLI_PATH
#error "GPAVOID_CLI_PATH must point at the gpavoid binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GPAVOID_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("count is byte-exact and deterministic") {
  const std::string expected =
      R"({"pattern":"1-32","constraint":{"placement":"end","direction":"increasing","k":2},)"
      R"("n":4,"method":"brute","count":"10"})"
      "\n";
  const RunResult first = run_cli("count --avoid 1-32 --end-inc 2 --n 4 --method brute");
  CHECK(first.exit_code == 0);
  CHECK(first.out == expected);
  const RunResult second = run_cli("count --avoid 1-32 --end-inc 2 --n 4 --method brute");
  CHECK(second.out == first.out);
}

TEST_CASE("count methods and formats") {
  CHECK(run_cli("count --avoid 123 --begin-inc 3 --n 6").out.find("\"count\":\"0\"") !=
        std::string::npos);
  CHECK(run_cli("count --avoid 132 --begin-inc 1 --n 3 --method series")
            .out.find("\"count\":\"5\"") != std::string::npos);
  CHECK(run_cli("count --avoid 1-32 --end-inc 2 --n 4 --format csv").out == "n,count\n4,10\n");
  // The three methods agree through the CLI as well.
  for (const char* method : {"brute", "recurrence", "series"}) {
    const RunResult r = run_cli(std::string("count --avoid 213 --end-dec 2 --n 7 --method ") + method);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"count\":\"903\"") != std::string::npos);
  }
}

TEST_CASE("enumerate streams witnesses one per line") {
  CHECK(run_cli("enumerate --avoid 123 --begin-dec 2 --n 3").out == "2 1 3\n3 1 2\n3 2 1\n");
  const RunResult js = run_cli("enumerate --avoid 132 --begin-inc 2 --n 3 --format json");
  CHECK(js.out ==
        R"({"pattern":"132","constraint":{"placement":"begin","direction":"increasing","k":2},)"
        R"("n":3,"count":"2","witnesses":["1 2 3","2 3 1"]})"
        "\n");
}

TEST_CASE("occurrences reports 1-based position tuples") {
  const RunResult r = run_cli("occurrences --perm 516423 --pattern 2-3-1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        R"({"perm":"5 1 6 4 2 3","pattern":"2-3-1","count":3,)"
        R"("occurrences":[[1,3,4],[1,3,5],[1,3,6]]})"
        "\n");
}

TEST_CASE("bijections emit the mapped object") {
  const RunResult p2p = run_cli(
      R"(bijection --map partition-to-perm --k 2 --check --input '{"blocks":[[4],[2,3],[1]],"marked":1}')");
  CHECK(p2p.exit_code == 0);
  CHECK(p2p.out == "5 4 1 2 3\n");

  const RunResult tree = run_cli("bijection --map perm-to-tree --input '1 2' --check");
  CHECK(tree.out ==
        R"({"label":0,"children":[{"label":1,"children":[]},{"label":2,"children":[]}]})"
        "\n");

  const RunResult back = run_cli("bijection --map perm-to-partition --input '5 3 4 6 1 2'");
  CHECK(back.out == R"({"blocks":[[5],[3,4],[1,2]],"marked":1})"
                    "\n");
}

TEST_CASE("the exit-code contract") {
  // Success.
  CHECK(run_cli("identity --n-max 12").exit_code == 0);
  CHECK(run_cli("verify table --n-max 5 --k-max 2").exit_code == 0);
  CHECK(run_cli("verify bijections --n-max 5").exit_code == 0);
  // Verification-style failure: a permutation outside the map's domain.
  const RunResult outside = run_cli("bijection --map perm-to-partition --input '1 3 2'");
  CHECK(outside.exit_code == 1);
  CHECK(run_cli("bijection --map perm-to-tree --input '2 1 3'").exit_code == 1);
  // Usage and domain errors.
  CHECK(run_cli("count --avoid 132 --n 3").exit_code == 2);                  // no constraint flag
  CHECK(run_cli("count --avoid 132 --begin-inc 1 --end-inc 1 --n 3").exit_code == 2);
  CHECK(run_cli("count --avoid 10x --begin-inc 1 --n 3").exit_code == 2);    // bad pattern
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("bijection --map partition-to-perm --input 'not json'").exit_code == 2);
  CHECK(run_cli("count --avoid 132 --begin-inc 1 --n 12 --method brute").exit_code == 2);
}

TEST_CASE("the brute cap honors the environment override") {
  CHECK(run_cli("count --avoid 132 --begin-inc 1 --n 8 --method brute",
                "GPAVOID_BRUTE_CAP=6")
            .exit_code == 2);
  const RunResult ok = run_cli("count --avoid 132 --begin-inc 1 --n 8 --method brute",
                               "GPAVOID_BRUTE_CAP=8");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"count\":\"10176\"") != std::string::npos);
}

TEST_CASE("series output formats") {
  CHECK(run_cli("series --row 4 --k 2 --order 4").out == "0/1\n0/1\n1/1\n3/1\n9/1\n");
  CHECK(run_cli("series --row 1 --k 3 --order 3 --format csv").out ==
        "n,count\n0,0\n1,0\n2,0\n3,0\n");
  CHECK(run_cli("series --row 3 --k 1 --order 3 --format json").out ==
        R"([{"n":0,"a":"1"},{"n":1,"a":"1"},{"n":2,"a":"2"},{"n":3,"a":"5"}])"
        "\n");
}
