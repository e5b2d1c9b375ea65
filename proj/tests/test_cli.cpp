#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include <json.hpp>

#include "morphic/cli.hpp"
#include "morphic/ring_expr.hpp"

using namespace morphic;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::ordered_json> records(const std::string& text) {
  std::vector<nlohmann::ordered_json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::ordered_json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("classify prints the profile") {
  const Result r = call({"classify", "tri(z2,2)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("left_generalized_morphic   true") != std::string::npos);
  CHECK(r.out.find("left_pseudo_morphic        false   [[0,0],[1,0]]") != std::string::npos);
}

TEST_CASE("json records have a fixed key order") {
  const Result r = call({"--json", "classify", "tri(z2,2)"});
  REQUIRE(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 29);
  for (const auto& j : recs) {
    auto it = j.begin();
    CHECK(it.key() == "expression");
    CHECK((++it).key() == "predicate");
    CHECK((++it).key() == "status");
    CHECK((++it).key() == "witness");
    CHECK(parse_ring_expr(j["expression"].get<std::string>()) == parse_ring_expr("tri(z2,2)"));
  }
  CHECK(recs[2]["predicate"] == "left_pseudo_morphic");
  CHECK(recs[2]["witness"] == nlohmann::ordered_json::array({"[[0,0],[1,0]]"}));
  // the flag may also follow the subcommand
  CHECK(call({"classify", "tri(z2,2)", "--json"}).out == r.out);
}

TEST_CASE("json output does not depend on the thread count") {
  const Result a = call({"--json", "classify", "mat(z2,2)", "--threads", "1"});
  const Result b = call({"--json", "classify", "mat(z2,2)", "--threads", "4"});
  CHECK(a.out == b.out);
  const Result c = call({"--json", "verify", "z12", "--threads", "1"});
  const Result d = call({"--json", "verify", "z12", "--threads", "3"});
  CHECK(c.out == d.out);
  CHECK(c.out == call({"--json", "verify", "z12"}).out);
}

TEST_CASE("verify runs all or one suite") {
  const Result all = call({"--json", "verify", "z12"});
  CHECK(all.code == 0);
  CHECK(records(all.out).size() == 9);
  const Result one = call({"--json", "verify", "z12", "--theorem", "witness-identities"});
  CHECK(one.code == 0);
  const auto recs = records(one.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["predicate"] == "witness-identities");
  CHECK(recs[0]["status"] == "verified");
  CHECK(call({"verify", "z12", "--theorem", "bogus"}).code == 2);
}

TEST_CASE("qz subcommand") {
  const Result r = call({"qz", "--bound", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified") != std::string::npos);
  CHECK(call({"qz", "--bound", "1"}).code == 2);
  CHECK(call({"qz"}).code == 2);
}

TEST_CASE("corpus diff flags the hidden counterexample") {
  const Result r = call({"--json", "corpus"});
  CHECK(r.code == 1);
  std::size_t mismatches = 0;
  for (const auto& j : records(r.out)) {
    if (j.contains("match") && !j["match"].get<bool>()) {
      ++mismatches;
      CHECK(j["expression"] == "trivext(z4,ideal(2))");
    }
  }
  CHECK(mismatches == 2);
}

TEST_CASE("search subcommand") {
  const Result r = call({"--json", "search", "--max-order", "32"});
  CHECK(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["predicate"] == "search");
  CHECK(recs[0]["status"] == "verified");
  CHECK(recs[0]["hits"] == 0);
}

TEST_CASE("input errors exit with status 2") {
  const Result bad = call({"classify", "foo(3)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown constructor") != std::string::npos);
  CHECK(call({"classify", "mat(z4,3)"}).code == 2);
  CHECK(call({"classify"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
