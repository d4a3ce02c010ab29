#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rposet/labeling.hpp"
#include "rposet/poset.hpp"

namespace rposet {

enum class SearchMode { First, CountAll, EnumerateAll };
enum class SearchStatus { Found, ProvenNone, Inconclusive };

const char* to_string(SearchMode m);
const char* to_string(SearchStatus s);

struct SearchStats {
  std::uint64_t nodes = 0;         // decision attempts, seeding included
  std::uint64_t propagations = 0;  // forced letters
  std::uint64_t free_variables = 0;  // unset triplets after root propagation
  double elapsed_s = 0.0;
};

struct SearchOptions {
  SearchMode mode = SearchMode::First;
  std::uint64_t max_nodes = 100'000'000;
  double timeout_s = 300.0;
  int jobs = 1;
  std::uint64_t witness_limit = 64;  // EnumerateAll storage cap; count stays exact
};

/// ProvenNone is only ever reported after the whole tree was exhausted; a
/// node or time budget hit yields Inconclusive instead. Found always carries
/// a witness that passes check_triple_assignment. `count` is the number of
/// solutions seen; it equals the total exactly when `exhausted` is true.
struct SearchOutcome {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<TripleAssignment> witness;
  std::vector<TripleAssignment> witnesses;  // EnumerateAll only
  std::uint64_t count = 0;
  bool exhausted = false;
  SearchStats stats;
};

/// Complete backtracking search for a triple assignment of p.
///
/// Variables are the triplets in canonical order; the letter a is tried
/// before b. Unit propagation runs off a FIFO queue of touched intervals:
/// an interval whose candidate rising chains all died is a dead end, one
/// with a second fully-rising chain likewise, an interval whose last alive
/// candidate is unique forces that chain's open letters to a, and one that
/// already owns a rising chain forces the last open letter of any other
/// still-alive chain to b. On diamonds this is exactly the sibling
/// complement rule.
///
/// The tree is statically split into prefix subtrees over the first free
/// variables whenever enough of them exist; the split and the per-subtree
/// node budgets depend only on the input, and subtree results are combined
/// in prefix order, so status, witness, count, and node statistics are
/// identical for every worker count.
SearchOutcome search_triple_assignment(const GradedPoset& p, const SearchOptions& opts = {});

}  // namespace rposet
