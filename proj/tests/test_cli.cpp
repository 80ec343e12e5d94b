#include "doctest.h"

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = sphroots::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute with both methods") {
  auto r = run({"compute", "--type", "B", "--rank", "3", "--complement", "3", "--psi", "1;2", "--method", "both",
                "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["spherical_roots"] == nlohmann::json::parse("[[0,0,1],[0,1,1],[1,1,0]]"));
  CHECK(j["rank"] == 3);
}

TEST_CASE("check a non-spherical datum") {
  auto r = run({"check", "--type", "C", "--rank", "4", "--complement", "2", "--psi", "1;2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["spherical"] == false);
  CHECK(j["rank"].is_null());
}

TEST_CASE("invalid data exit with code 2") {
  auto dim = run({"compute", "--type", "A", "--rank", "3", "--complement", "2", "--psi", "1,1"});
  CHECK(dim.code == 2);
  CHECK(dim.err.find("DimensionMismatch") != std::string::npos);

  auto closure = run({"compute", "--type", "A", "--rank", "3", "--complement", "1,3", "--psi", "1,1"});
  CHECK(closure.code == 2);
  CHECK(closure.err.find("ClosureViolation") != std::string::npos);

  auto ns = run({"compute", "--type", "C", "--rank", "4", "--complement", "2", "--psi", "1;2"});
  CHECK(ns.code == 2);
  CHECK(ns.err.find("NotSpherical") != std::string::npos);

  CHECK(run({"roots", "--type", "D", "--rank", "2"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "--type", "B", "--rank", "3", "--complement", "x", "--psi", "1"}).code == 2);
}

TEST_CASE("roots output") {
  auto r = run({"roots", "--type", "G", "--rank", "2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["positive_roots"].size() == 6);
  auto t = run({"roots", "--type", "A", "--rank", "2", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(!t.out.empty());
}

TEST_CASE("identical invocations give identical output") {
  std::vector<std::string> args{"enumerate", "--type", "F", "--rank", "4", "--complement-size", "2", "--psi-size", "2"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("enumerate output round-trips through compute") {
  auto e = run({"enumerate", "--type", "F", "--rank", "4", "--complement-size", "2", "--psi-size", "2"});
  REQUIRE(e.code == 0);
  auto cases = nlohmann::json::parse(e.out);
  REQUIRE(cases.is_array());
  int spherical = 0;
  for (const auto& c : cases) {
    if (c["spherical"] != true) continue;
    ++spherical;
    auto r = run({"compute", "--datum", c["datum"].dump()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["spherical_roots"] == c["sigma"]);
  }
  CHECK(spherical >= 7);
}

TEST_CASE("degenerate and verify-tables") {
  auto d = run({"degenerate", "--type", "B", "--rank", "3", "--complement", "3", "--psi", "1;2", "--lambda", "1"});
  CHECK(d.code == 0);
  auto j = nlohmann::json::parse(d.out);
  CHECK(j["target"]["levi_complement"] == nlohmann::json::parse("[1,3]"));

  auto v = run({"verify-tables", "--type", "F"});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["missing"].empty());
}

TEST_CASE("tables dump") {
  auto r = run({"tables", "dump", "--table", "2", "--n", "3", "--params", "3"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["rank"] == 3);
}
