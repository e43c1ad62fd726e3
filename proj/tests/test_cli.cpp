#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "floorgw/cli.hpp"
#include "floorgw/serialize.hpp"

using floorgw::json::Json;
namespace cli = floorgw::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("refined count as json") {
  const auto r = run({"count", "--surface", "p2", "--degree", "3", "--genus", "0", "--refined", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(Json::parse(r.out) ==
        Json::parse(R"({"classical":12,"refined":{"valuation":-2,"coefficients":["1","0","10","0","1"]}})"));
}

TEST_CASE("count text and csv") {
  auto r = run({"count", "--surface", "p2", "--degree", "4", "--points", "11"});
  CHECK(r.code == 0);
  CHECK(r.out == "classical: 620\n");
  r = run({"count", "--surface", "p2", "--degree", "3", "--genus", "0", "--refined", "--format", "csv"});
  CHECK(r.out == "classical,refined\n12,\"s^-2 + 10 + s^2\"\n");
}

TEST_CASE("gw table for the line") {
  const auto r = run({"gw", "--surface", "p2", "--degree", "1", "--points", "2", "--order", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("g,value\n0,1\n1,1/24\n2,7/5760\n", 0) == 0);
  const auto j = run({"gw", "--surface", "p2", "--degree", "1", "--points", "2", "--order", "6", "--format", "json"});
  const Json parsed = Json::parse(j.out);
  CHECK(parsed.at("kind") == "relative");
  CHECK(parsed.at("invariants").at(1).at("value") == "1/24");
  const auto back = floorgw::json::gw_series_from_json(parsed);
  CHECK(floorgw::json::to_json(back) == parsed);
}

TEST_CASE("log-gw and vertex") {
  auto r = run({"log-gw", "--surface", "p2", "--degree", "3", "--points", "8", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("series").at("valuation") == 7);
  r = run({"vertex", "--mu", "2", "--nu", "", "--order", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "g,value\n0,1\n1,-1/6\n2,1/120\n");
}

TEST_CASE("enumerate on hirzebruch") {
  const auto r = run({"enumerate", "--surface", "fk", "--k", "2", "--h", "1", "--d", "0", "--points", "3", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("count") == 1);
  CHECK(j.at("diagrams").at(0).at("vertices") == Json::array({3}));
}

TEST_CASE("verify subcommands") {
  auto r = run({"verify", "ab", "--a", "1", "--b", "0", "--points", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs polynomial: 1\n") != std::string::npos);
  CHECK(r.out.find("rhs polynomial: 1\n") != std::string::npos);
  r = run({"verify", "degeneration", "--surface", "p2", "--degree", "1", "--points", "2"});
  CHECK(r.code == 0);
  r = run({"verify", "oracle", "--surface", "fk", "--k", "1", "--h", "2", "--d", "1", "--genus", "1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out).at("equal") == true);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"count", "--surface", "p2", "--degree", "3"}).code == cli::kExitUsage);
  CHECK(run({"count", "--surface", "p2", "--degree", "3", "--points", "8", "--genus", "0"}).code == cli::kExitUsage);
  CHECK(run({"count", "--surface", "p3", "--degree", "3", "--points", "8"}).code == cli::kExitUsage);
  CHECK(run({"count", "--surface", "p2", "--points", "8"}).code == cli::kExitUsage);
  CHECK(run({"count", "--surface", "fk", "--k", "1", "--points", "8"}).code == cli::kExitUsage);
  CHECK(run({"gw", "--surface", "p2", "--degree", "3", "--points", "8", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"count", "--surface", "p2", "--degree", "x", "--points", "8"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);
}

TEST_CASE("domain errors exit 1 with one diagnostic line") {
  auto r = run({"count", "--surface", "p2", "--degree", "3", "--points", "5"});
  CHECK(r.code == cli::kExitDomain);
  CHECK(r.out.empty());
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  r = run({"count", "--surface", "p2", "--degree", "0", "--points", "5"});
  CHECK(r.code == cli::kExitDomain);
  r = run({"verify", "ab", "--a", "1", "--b", "1", "--points", "2"});
  CHECK(r.code == cli::kExitDomain);
  r = run({"vertex", "--mu", "2,0", "--nu", ""});
  CHECK(r.code == cli::kExitDomain);
  r = run({"vertex", "--mu", "1", "--nu", "1", "--order", "2"});
  CHECK(r.code == cli::kExitDomain);
  // A truncation order below the first genus is not an error: the table is just empty.
  r = run({"gw", "--surface", "p2", "--degree", "3", "--points", "8", "--order", "1", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "g,value\n");
}

TEST_CASE("help is not an error") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerate") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> cmd = {"enumerate", "--surface", "p2", "--degree", "3", "--points", "8", "--format", "json"};
  CHECK(run(cmd).out == run(cmd).out);
}

TEST_CASE("worker count from the environment") {
  const std::vector<std::string> cmd = {"count", "--surface", "p2", "--degree", "4", "--points", "11", "--refined", "--format", "json"};
  const auto sequential = run(cmd);
  setenv(cli::kWorkersEnv, "3", 1);
  const auto parallel = run(cmd);
  setenv(cli::kWorkersEnv, "lots", 1);
  const auto bad = run(cmd);
  unsetenv(cli::kWorkersEnv);
  CHECK(parallel.code == 0);
  CHECK(parallel.out == sequential.out);
  CHECK(bad.code == cli::kExitUsage);
}

}  // TEST_SUITE
