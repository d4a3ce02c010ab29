#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rposet/verify.hpp"

using namespace rposet;

TEST_CASE("claim suite passes at the default depth") {
  ClaimSuiteOptions opts;
  opts.max_n = 5;
  const auto rows = run_claim_suite(opts);
  CHECK(rows.size() > 30);
  for (const auto& row : rows) {
    CAPTURE(row.claim);
    CAPTURE(row.n);
    CHECK(row.pass);
    CHECK(row.conclusive);
  }
  CHECK(claim_suite_exit_code(rows) == 0);

  std::set<std::string> tags;
  std::set<std::string> claims;
  for (const auto& row : rows) {
    tags.insert(row.tag);
    claims.insert(row.claim);
  }
  CHECK(tags.count("PAPER") == 1);
  CHECK(tags.count("DERIVED") == 1);
  CHECK(tags.count("PLUMBING") == 1);
  CHECK(claims.count("glued-labeling") == 1);
  CHECK(claims.count("glued-cd-negative") == 1);
}

TEST_CASE("claim suite rejects a too small depth") {
  ClaimSuiteOptions opts;
  opts.max_n = 2;
  CHECK_THROWS_AS((void)run_claim_suite(opts), std::invalid_argument);
}

TEST_CASE("row json shape") {
  ClaimSuiteOptions opts;
  opts.max_n = 3;
  const auto rows = run_claim_suite(opts);
  REQUIRE(!rows.empty());
  const Json j = rows.front().to_json(false);
  CHECK(j.contains("claim"));
  CHECK(j.contains("n"));
  CHECK(j.contains("tag"));
  CHECK(j.contains("expected"));
  CHECK(j.contains("computed"));
  CHECK(j.contains("pass"));
  CHECK(j.contains("conclusive"));
  CHECK(!j.contains("ms"));
  CHECK(rows.front().to_json(true).contains("ms"));
}

TEST_CASE("exit code reflects failures and inconclusive rows") {
  VerificationRow ok;
  ok.pass = true;
  VerificationRow fail;
  fail.pass = false;
  VerificationRow soft;
  soft.pass = false;
  soft.conclusive = false;
  CHECK(claim_suite_exit_code({ok}) == 0);
  CHECK(claim_suite_exit_code({ok, fail}) == 1);
  CHECK(claim_suite_exit_code({ok, soft}) == 2);
  CHECK(claim_suite_exit_code({ok, soft, fail}) == 1);
}

TEST_CASE("table rendering is stable and marks status") {
  ClaimSuiteOptions opts;
  opts.max_n = 3;
  const auto rows = run_claim_suite(opts);
  const std::string table = claim_suite_table(rows);
  CHECK(table.find("[ ok ]") != std::string::npos);
  CHECK(table.find("[FAIL]") == std::string::npos);
  CHECK(table.find("passed") != std::string::npos);
  CHECK(claim_suite_table(rows) == table);
}
