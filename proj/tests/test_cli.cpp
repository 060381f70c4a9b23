#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include <lambdanr/json_io.hpp>

using namespace lambdanr;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(LAMBDANR_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> chunk{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    out.append(chunk.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const char* kS3Group = R"cli('{"kind":"symmetric","n":3}')cli";
const char* kS3Perm = R"cli('{"ring":"Z","values":["3","1","0"]}')cli";
const char* kZ6Zeta =
    R"cli('{"ring":{"cyclotomic":6},"values":["1",{"m":6,"coords":["0","1"]},{"m":6,"coords":["-1","1"]},"-1",{"m":6,"coords":["0","-1"]},{"m":6,"coords":["1","-1"]}]}')cli";

}  // namespace

TEST_CASE("exterior table matches the S3 rows") {
  const auto res = run_cli(std::string("exterior --group ") + kS3Group +
                           " --char " + kS3Perm + " --max 3");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("lambda^0: 1 1 1") != std::string::npos);
  CHECK(res.output.find("lambda^1: 3 1 0") != std::string::npos);
  CHECK(res.output.find("lambda^2: 3 -1 0") != std::string::npos);
  CHECK(res.output.find("lambda^3: 1 -1 1") != std::string::npos);
}

TEST_CASE("exterior with max 0 prints the all-ones row only") {
  const auto res = run_cli(std::string("exterior --group ") + kS3Group +
                           " --char " + kS3Perm + " --max 0");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("lambda^0: 1 1 1") != std::string::npos);
  CHECK(res.output.find("lambda^1") == std::string::npos);
}

TEST_CASE("malformed JSON exits 2") {
  CHECK(run_cli("exterior --group '{broken' --char '{}'").exit_code == 2);
  CHECK(run_cli(std::string("exterior --group ") + kS3Group +
                " --char '{\"ring\":\"Z\",\"values\":[\"1\"]}'")
            .exit_code == 2);
}

TEST_CASE("factor prints canonical product forms") {
  const auto res = run_cli(std::string("factor --group ") + kS3Group +
                           " --char " + kS3Perm + " --class 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("(1+t^3)^1") != std::string::npos);

  const auto sign = run_cli(
      R"cli(factor --group '{"kind":"symmetric","n":2}' --char '{"ring":"Z","values":["1","-1"]}' --class 1)cli");
  CHECK(sign.exit_code == 0);
  CHECK(sign.output.find("(1+t)^-1 (1-t^2)^1") != std::string::npos);
}

TEST_CASE("strict factor on a zeta-valued character exits 4") {
  const auto res = run_cli(std::string("factor --group ") +
                           R"cli('{"kind":"cyclic","n":6}')cli" + " --char " +
                           kZ6Zeta + " --strict");
  CHECK(res.exit_code == 4);
  const auto loose = run_cli(std::string("factor --group ") +
                             R"cli('{"kind":"cyclic","n":6}')cli" + " --char " +
                             kZ6Zeta);
  CHECK(loose.exit_code == 0);
  CHECK(loose.output.find("NotIntegerValued") != std::string::npos);
}

TEST_CASE("symrep reports the worked example") {
  const auto res = run_cli(
      R"cli(symrep --matrix '{"k":2,"entries":[["1","3"],["1/3","-1"]]}' --sigma "(1 2 3 4)")cli");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("chi=0") != std::string::npos);
  CHECK(res.output.find("necklace={4:4}") != std::string::npos);
  CHECK(res.output.find("lambda=(1-t^4)^4") != std::string::npos);

  const auto id = run_cli(
      R"cli(symrep --matrix '{"k":2,"entries":[["1","3"],["1/3","-1"]]}' --sigma "()" --n 2)cli");
  CHECK(id.exit_code == 0);
  CHECK(id.output.find("(1+t)^4") != std::string::npos);

  const auto oracle = run_cli(
      R"cli(symrep --matrix '{"k":2,"entries":[["1","3"],["1/3","-1"]]}' --sigma "(1 2)(3 4 5)" --oracle)cli");
  CHECK(oracle.exit_code == 0);
  CHECK(oracle.output.find("oracle=MATCH") != std::string::npos);
}

TEST_CASE("invalid MAS matrix exits 5") {
  CHECK(run_cli(
            R"cli(symrep --matrix '{"k":2,"entries":[["1","2"],["2","1"]]}' --sigma "(1 2)")cli")
            .exit_code == 5);
}

TEST_CASE("oracle above the size cap exits 6") {
  CHECK(run_cli(
            R"cli(symrep --matrix '{"k":2,"entries":[["1","3"],["1/3","-1"]]}' --sigma "(1 2 3 4 5 6 7 8 9 10 11 12 13)" --oracle)cli")
            .exit_code == 6);
}

TEST_CASE("verify subcommand") {
  const auto ok = run_cli("verify --suite ring --cases 25 --seed 7");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("suite=ring") != std::string::npos);
  CHECK(ok.output.find("PASS") != std::string::npos);
  CHECK(run_cli("verify --suite nosuch").exit_code == 2);

  // Determinism: identical config and seed give byte-identical output.
  const auto again = run_cli("verify --suite ring --cases 25 --seed 7");
  CHECK(ok.output == again.output);
  const auto vft = run_cli("verify --suite vft --cases 30 --seed 3");
  CHECK(vft.exit_code == 0);
  CHECK(vft.output == run_cli("verify --suite vft --cases 30 --seed 3").output);
}

TEST_CASE("bench subcommand") {
  const auto both = run_cli("bench --impl both --size 300 --seed 5");
  CHECK(both.exit_code == 0);
  CHECK(both.output.find("direct_ms=") != std::string::npos);
  CHECK(both.output.find("ghost_ms=") != std::string::npos);
  CHECK(both.output.find("AGREE") != std::string::npos);

  const auto direct = run_cli("bench --impl direct --size 100 --seed 5");
  CHECK(direct.exit_code == 0);
  CHECK(direct.output.find("ghost_ms=") == std::string::npos);

  CHECK(run_cli("bench --size 200000").exit_code == 6);
}

TEST_CASE("JSON output round-trips through the module parsers") {
  const auto res = run_cli(std::string("exterior --group ") + kS3Group +
                           " --char " + kS3Perm + " --max 2 --json");
  REQUIRE(res.exit_code == 0);
  const json j = json::parse(res.output);
  GroupPtr g = group_from_json(j.at("group"));
  CHECK(g->class_count() == 3);
  for (const auto& row : j.at("rows"))
    (void)character_from_json(row.at("character"), g);

  const auto fac = run_cli(std::string("factor --group ") + kS3Group +
                           " --char " + kS3Perm + " --json");
  REQUIRE(fac.exit_code == 0);
  for (const auto& entry : json::parse(fac.output).at("classes"))
    (void)neck_from_json(entry.at("necklace"));

  const auto sym = run_cli(
      R"cli(symrep --matrix '{"k":2,"entries":[["1","3"],["1/3","-1"]]}' --sigma "(1 2 3)" --json)cli");
  REQUIRE(sym.exit_code == 0);
  const json sj = json::parse(sym.output);
  (void)neck_from_json(sj.at("necklace"));
  CHECK(scalar_from_json(sj.at("chi")) == Scalar(2));
}

TEST_CASE("--out writes to a file") {
  const std::string path = "/tmp/lambdanr_cli_out_test.txt";
  std::remove(path.c_str());
  const auto res = run_cli(std::string("exterior --group ") + kS3Group +
                           " --char " + kS3Perm + " --max 1 --out " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents.find("lambda^1: 3 1 0") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("unknown flags are rejected") {
  CHECK(run_cli("exterior --nonsense 1").exit_code == 2);
}
