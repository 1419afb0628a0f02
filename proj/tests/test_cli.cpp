#include "doctest.h"

#include <sstream>

#include "cli_app.hpp"
#include "json.hpp"

namespace {
struct Run {
  int code;
  std::string out, err;
};
Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = curvesys::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("construct") {
  const Run r = run({"construct", "--surface", "N:8,1", "--theorem", "1", "--t", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["size"] == 33);
  CHECK(j["result"]["members"].size() == 33);
  CHECK(j["config"]["surface"] == "N:8,1");
  CHECK(j["schema_version"] == 1);
}

TEST_CASE("bounds table") {
  const Run r = run({"bounds", "--range", "c=1..6,n=0..6", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations\t0") != std::string::npos);
  const Run j = run({"bounds", "--range", "c=1..6,n=0..6"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["result"]["violations"].empty());
}

TEST_CASE("lasso") {
  const Run r = run({"lasso", "--case", "op", "--samples", "10000"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["violations"].empty());
  CHECK(j["result"]["samples"] == 10000);
  const Run csv = run({"lasso", "--case", "or", "--samples", "100", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("field,value", 0) == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"construct", "--surface", "N:3,1", "--theorem", "1", "--t", "7"}).code == 2);
  CHECK(run({"construct", "--surface", "Q:1"}).code == 2);
  CHECK(run({"lasso", "--case", "sideways"}).code == 2);
}

TEST_CASE("seeded reports repeat exactly") {
  const std::vector<std::string> a = {"lasso", "--case", "or", "--samples", "500", "--seed", "9"};
  CHECK(run(a).out == run(a).out);
}
