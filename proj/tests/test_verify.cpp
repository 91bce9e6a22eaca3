#include <doctest.h>

#include <set>

#include <json.hpp>

#include "braidforge/verify.hpp"

using namespace braidforge;

TEST_CASE("parse_scope") {
  CHECK(parse_scope("all") == Scope::all);
  CHECK(parse_scope("counting") == Scope::counting);
  CHECK(parse_scope("garside") == Scope::garside);
  CHECK(parse_scope("graph") == Scope::graph);
  CHECK_THROWS_AS(parse_scope("everything"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scope(""), std::invalid_argument);
  for (auto s : {Scope::all, Scope::counting, Scope::garside, Scope::graph}) CHECK(parse_scope(to_string(s)) == s);
}

TEST_CASE("registry partitions the ids") {
  const auto all = claim_registry(Scope::all);
  CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
  std::vector<std::string> joined;
  for (auto s : {Scope::counting, Scope::garside, Scope::graph}) {
    const auto part = claim_registry(s);
    CHECK_FALSE(part.empty());
    joined.insert(joined.end(), part.begin(), part.end());
  }
  CHECK(joined == all);
}

TEST_CASE("counting scope") {
  VerifyOptions opts;
  opts.scope = Scope::counting;
  const auto report = run_verification(opts);
  CHECK(report.ok());
  CHECK(report.count(ClaimStatus::fail) == 0);
  CHECK(report.count(ClaimStatus::erratum_confirmed) == 2);
  std::vector<std::string> ids;
  for (const auto& e : report.entries) {
    ids.push_back(e.id);
    CHECK_FALSE(e.location.empty());
    CHECK_FALSE(e.claimed.empty());
    CHECK_FALSE(e.computed.empty());
  }
  CHECK(ids == claim_registry(Scope::counting));
}

TEST_CASE("full report is deterministic and well formed") {
  VerifyOptions opts;
  opts.n_max = 7;
  opts.k_max = 7;
  const auto a = to_json(run_verification(opts));
  const auto b = to_json(run_verification(opts));
  CHECK(a == b);
  const auto doc = nlohmann::json::parse(a);
  CHECK(doc["scope"] == "all");
  CHECK(doc["entries"].size() == claim_registry(Scope::all).size());
  for (const auto& e : doc["entries"]) {
    CHECK(e.contains("id"));
    CHECK(e.contains("status"));
    CHECK(e["status"] != "fail");
  }
}

TEST_CASE("option ranges") {
  VerifyOptions opts;
  opts.n_max = 0;
  CHECK_THROWS(run_verification(opts));
  opts.n_max = 13;
  CHECK_THROWS(run_verification(opts));
  opts.n_max = 8;
  opts.k_max = 15;
  CHECK_THROWS(run_verification(opts));
}
