// End-to-end tests of the command-line tool. The binary path comes from the
// TROPENUM_CLI environment variable (set by the build's test harness).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string cli_binary() {
  const char* path = std::getenv("TROPENUM_CLI");
  REQUIRE_MESSAGE(path != nullptr, "TROPENUM_CLI must point at the binary");
  return path;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_binary() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe))
    output.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

}  // namespace

TEST_CASE("census command prints the top coefficients") {
  const auto r = run("census --delta 2 --top-terms 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "8, -168/5\n");
  const auto exact = run("census --delta 1 --exact");
  CHECK(exact.exit_code == 0);
  CHECK(exact.output == "4*d^3 - 12*d^2 + 12*d - 6\n");
}

TEST_CASE("count-curves json output carries the full breakdown") {
  const auto r = run("count-curves --degree 4 --nodes 2 --breakdown --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("total") == "225");
  CHECK(doc.at("breakdown").size() == 9);
  // json round-trips: parse(emit(report)) = report
  CHECK(nlohmann::json::parse(doc.dump()) == doc);
}

TEST_CASE("count-curves oracle cross-check and csv header") {
  const auto r = run("count-curves --degree 5 --nodes 2 --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("882") != std::string::npos);
  const auto csv = run("count-curves --degree 4 --nodes 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("index_tuple,count\n", 0) == 0);
}

TEST_CASE("paths command reports the feasibility census") {
  const auto r = run("paths --family 20 --params a=4 --all");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("5 feasible") != std::string::npos);
  CHECK(r.output.find("A|B-C-D-F: feasible") != std::string::npos);
  CHECK(r.output.find("A-C-D-F: infeasible") != std::string::npos);
  // default (without --all) hides the infeasible verdicts
  const auto feasible_only = run("paths --family 20 --params a=4");
  CHECK(feasible_only.output.find("infeasible") == std::string::npos);
}

TEST_CASE("catalog listing and instantiation") {
  const auto listing = run("catalog --list");
  CHECK(listing.exit_code == 0);
  CHECK(listing.output.find("21") != std::string::npos);
  const auto inst = run("catalog --family 10 --params a=3,b=1 --format json");
  REQUIRE(inst.exit_code == 0);
  const auto doc = nlohmann::json::parse(inst.output);
  CHECK(doc.at("instance").at("width") == 1);
  CHECK(doc.at("instance").at("lattice_points").size() == 6);
  CHECK(doc.at("instance").at("degree") == "6");
  CHECK(doc.at("instance").at("status") == "binodal");
}

TEST_CASE("fan and iua-check commands") {
  const auto fan = run("fan --family 20 --params a=4 --format json");
  REQUIRE(fan.exit_code == 0);
  CHECK(nlohmann::json::parse(fan.output).at("vertex_cones").size() == 6);
  const auto same = run("iua-check --family 13 --params a=5,b=2 "
                        "--other-family 13 --other-params a=5,b=2");
  CHECK(same.exit_code == 0);
  CHECK(same.output == "equivalent\n");
  const auto diff = run("iua-check --family 13 --params a=5,b=2 "
                        "--other-family 13 --other-params a=5,b=3");
  CHECK(diff.exit_code == 0);
  CHECK(diff.output == "not equivalent\n");
}

TEST_CASE("contribution report flags the one known total discrepancy") {
  const auto r = run("contribution --degree 8 --family total --report --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("value") == "124");
  const auto& flags = doc.at("report").at("consistency_flags");
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].at("location") == "odd-degree total, coefficient of d^0");
  CHECK(flags[0].at("reference_value") == "-31/4");
  CHECK(flags[0].at("computed_value") == "31/4");
}

TEST_CASE("verify-all runs the acceptance checklist") {
  const auto r = run("verify-all --format json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc.at("criteria").size() == 12);
  CHECK(doc.at("unexpected_failures") == 0);
  int documented = 0;
  for (const auto& c : doc.at("criteria"))
    if (c.at("documented_discrepancy").get<bool>()) ++documented;
  CHECK(documented == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("bogus-command").exit_code == 2);
  CHECK(run("paths").exit_code == 2);  // missing required --family
  CHECK(run("census --delta 9").exit_code == 2);
  CHECK(run("catalog --family 10 --params nonsense").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("domain errors exit with code 1") {
  CHECK(run("count-curves --degree 4 --nodes 9").exit_code == 1);
  CHECK(run("catalog --family 10 --params a=2,b=4").exit_code == 1);
}

TEST_CASE("threads flag is accepted") {
  const auto r = run("census --delta 2 --threads 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "8, -168/5\n");
}
