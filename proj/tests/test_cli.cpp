#include <catch2/catch.hpp>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli_runner.hpp"

TEST_CASE("macmahon subcommand emits the plane-partition numbers") {
  const auto result = cli::run("macmahon --order 5 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "n,macmahon\n0,1\n1,1\n2,3\n3,6\n4,13\n5,24\n");
}

TEST_CASE("local-model subcommand prints the signed local series") {
  const auto result = cli::run("local-model --order 4");
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "n  local_model\n"
        "0            0\n"
        "1            1\n"
        "2           -2\n"
        "3            5\n"
        "4          -11\n");
}

TEST_CASE("boxes count in both models") {
  CHECK(cli::run("boxes count --n 2").out == "n  count\n2      5\n");
  CHECK(cli::run("boxes count --n 3 --plain --format csv").out ==
        "n,count\n3,6\n");
  CHECK(cli::run("boxes count --n 4 --leg --format csv").out ==
        "n,count\n4,24\n");
}

TEST_CASE("boxes enumerate streams blank-line-separated records") {
  const auto result = cli::run("boxes enumerate --n 1");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "n=1 leg=1\n1 0 1\n\nn=1 leg=1\n0 1 1\n");
  CHECK(cli::run("boxes enumerate --n 0").out == "n=0 leg=1\n");
  CHECK(cli::run("boxes enumerate --n 1 --plain").out == "n=1 leg=0\n0 0 1\n");
}

TEST_CASE("quot defaults to the closed-form route") {
  const auto result = cli::run("quot --chi-y 1 --genus 0 --order 2 --format json");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(result.out);
  CHECK(doc["labels"] == nlohmann::ordered_json::array({"chi_quot"}));
  CHECK(doc["coefficients"][0] ==
        nlohmann::ordered_json::array({"1", "3", "8"}));
  CHECK(doc["verdict"].is_null());
}

TEST_CASE("quot compares the two routes when both are requested") {
  const auto result =
      cli::run("quot --chi-y 4 --genus 1 --order 6 --stratified --series --format json");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(result.out);
  CHECK(doc["labels"] ==
        nlohmann::ordered_json::array({"chi_quot_stratified", "chi_quot"}));
  CHECK(doc["coefficients"][0] == doc["coefficients"][1]);
  CHECK(doc["verdict"] == true);
}

TEST_CASE("wallcross reports an all-true verdict") {
  const auto result =
      cli::run("wallcross --chi-y 4 --genus 0 --bps 1 --order 8 --format json");
  CHECK(result.exit_code == 0);
  const auto doc = nlohmann::ordered_json::parse(result.out);
  CHECK(doc["verdict"] == true);
  CHECK(doc["labels"] == nlohmann::ordered_json::array({"dt", "bps_weighted"}));
  CHECK(doc["coefficients"][0].size() == 9);
  CHECK(doc["coefficients"][0] == doc["coefficients"][1]);
}

TEST_CASE("pt and dt subcommands") {
  CHECK(cli::run("pt --genus 0 --order 3 --format csv").out ==
        "n,pt\n0,1\n1,-2\n2,3\n3,-4\n");
  CHECK(cli::run("dt --chi-y 0 --genus 1 --order 2 --format csv").out ==
        "n,dt\n0,1\n1,0\n2,0\n");
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> invocations{
      "macmahon --order 8 --format json",
      "boxes count --n 5 --format json",
      "boxes enumerate --n 3",
      "local-model --order 7 --format csv",
      "quot --chi-y -3 --genus 2 --order 6 --stratified --series --format json",
      "pt --genus 3 --bps 2 --order 5 --format table",
      "dt --chi-y 2 --genus 1 --bps 7 --order 6 --format json",
      "wallcross --chi-y -5 --genus 2 --bps 2 --order 7 --format csv",
  };
  for (const std::string& invocation : invocations) {
    INFO(invocation);
    const auto first = cli::run(invocation);
    const auto second = cli::run(invocation);
    REQUIRE(first.exit_code == 0);
    REQUIRE(first.exit_code == second.exit_code);
    REQUIRE(first.out == second.out);
  }
}

TEST_CASE("json output round-trips through a parser") {
  const std::vector<std::string> invocations{
      "macmahon --order 6 --format json",
      "boxes count --n 4 --plain --format json",
      "quot --chi-y 5 --genus 1 --order 5 --weighted --format json",
      "wallcross --chi-y 3 --genus 2 --bps 7 --order 6 --format json",
  };
  for (const std::string& invocation : invocations) {
    INFO(invocation);
    const auto result = cli::run(invocation);
    REQUIRE(result.exit_code == 0);
    const auto parsed = nlohmann::ordered_json::parse(result.out);
    REQUIRE(parsed.dump(2) + "\n" == result.out);
  }
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(cli::run("frobnicate").exit_code == 2);
  CHECK(cli::run("").exit_code == 2);
  CHECK(cli::run("macmahon").exit_code == 2);
  CHECK(cli::run("macmahon --order -1").exit_code == 2);
  CHECK(cli::run("macmahon --order 2 --format yaml").exit_code == 2);
  CHECK(cli::run("macmahon --order 2 --bogus").exit_code == 2);
  CHECK(cli::run("boxes --n 2").exit_code == 2);
  CHECK(cli::run("boxes count --n -1").exit_code == 2);
  CHECK(cli::run("boxes count --n 2 --leg --plain").exit_code == 2);
  CHECK(cli::run("boxes enumerate --n 2 --format json").exit_code == 2);
  CHECK(cli::run("local-model --order 0").exit_code == 2);
  CHECK(cli::run("quot --chi-y 1 --genus -1 --order 3").exit_code == 2);
  CHECK(cli::run("quot --genus 0 --order 3").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  const auto top = cli::run("--help");
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("commands:") != std::string::npos);
  CHECK(cli::run("quot --help").exit_code == 0);
  CHECK(cli::run("boxes --help").exit_code == 0);
}
