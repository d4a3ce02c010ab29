#pragma once

#include <string>
#include <vector>

#include "rposet/io.hpp"
#include "rposet/search.hpp"

namespace rposet {

/// One checked claim instance. `tag` classifies where the expected value
/// comes from: "PAPER" for a published closed form or stated result,
/// "TRIVIAL" for an elementary fact, "DERIVED" for a value computed by an
/// independent route, "PLUMBING" for a cross-module self-check.
struct VerificationRow {
  std::string claim;
  int n = 0;
  std::string tag;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool conclusive = true;  // false when a search budget ran out
  double ms = 0.0;
  Json counterexample;  // null unless the row failed

  Json to_json(bool with_ms) const;
};

struct ClaimSuiteOptions {
  int max_n = 5;
  std::uint64_t max_nodes = 100'000'000;
  double timeout_s = 300.0;
  int jobs = 1;
};

/// Runs every claim row up to max_n. Rows come out grouped by claim, each
/// conclusive unless its search budget was exhausted.
std::vector<VerificationRow> run_claim_suite(const ClaimSuiteOptions& opts);

/// 0: all rows pass; 1: some conclusive row failed; 2: no failure but at
/// least one row was inconclusive.
int claim_suite_exit_code(const std::vector<VerificationRow>& rows);

std::string claim_suite_table(const std::vector<VerificationRow>& rows);

}  // namespace rposet
