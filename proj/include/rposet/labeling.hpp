#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rposet/flag.hpp"
#include "rposet/polynomial.hpp"
#include "rposet/poset.hpp"

namespace rposet {

enum class Letter : std::uint8_t { A, B };

constexpr Letter complement(Letter l) { return l == Letter::A ? Letter::B : Letter::A; }
constexpr char letter_char(Letter l) { return l == Letter::A ? 'a' : 'b'; }

/// Total letter assignment on the triplets of a poset. `values` is indexed
/// by the canonical triplet order of `poset`; the struct carries both so it
/// stays self-describing.
struct TripleAssignment {
  GradedPoset poset;
  std::vector<Triplet> trips;
  std::vector<Letter> values;

  Letter at(const Triplet& t) const;
  Letter at(int x, int y, int z) const { return at(Triplet{x, y, z}); }

  bool operator==(const TripleAssignment&) const = default;
};

TripleAssignment make_assignment(const GradedPoset& p, std::vector<Letter> values);
TripleAssignment make_assignment(const GradedPoset& p, const std::map<Triplet, Letter>& values);

/// No triplet along the chain carries b; chains with at most two elements
/// are vacuously rising.
bool is_rising(const TripleAssignment& t, const MaximalChain& chain);

struct RisingStatus {
  enum Kind { Zero, Unique, Many } kind = Zero;
  std::optional<MaximalChain> chain;  // set for Unique
};

/// Counts rising maximal chains of [x, y]. Requires x <= y (NotComparable
/// otherwise); a rank-0 or rank-1 interval is always Unique.
RisingStatus rising_chain_status(const TripleAssignment& t, int x, int y);

struct AssignmentCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> violation;  // first violating (x, y)
  RisingStatus::Kind status = RisingStatus::Unique;
};

/// Every interval of rank >= 2 must have a unique rising chain. On failure
/// reports the first violating interval in the element order.
AssignmentCheck check_triple_assignment(const TripleAssignment& t);
bool is_triple_assignment(const TripleAssignment& t);

/// Interior elements y whose letter does not depend on the outer pair:
/// all triplets with middle y carry the same value. Sorted indices.
std::vector<int> breakpoints(const TripleAssignment& t);

/// Unique rising chain in every interval of rank 2..max_rank.
bool locally_valid(const TripleAssignment& t, int max_rank = 3);

/// Edge labeling together with the binary relation on labels that decides
/// which consecutive pairs count as rising. `labels` is indexed like
/// poset.covers().
struct Labeling {
  GradedPoset poset;
  std::vector<std::string> labels;
  std::set<std::pair<std::string, std::string>> relation;

  bool operator==(const Labeling&) const = default;
};

Labeling make_labeling(const GradedPoset& p,
                       const std::map<std::pair<std::string, std::string>, std::string>& labels,
                       const std::set<std::pair<std::string, std::string>>& relation);

/// tau(x, y, z) = a iff (label(x, y), label(y, z)) is in the relation.
TripleAssignment labeling_to_assignment(const Labeling& l);

/// Reverse direction: every cover labeled by its own name, with the relation
/// containing exactly the consecutive pairs whose triplet carries a.
Labeling assignment_to_labeling(const TripleAssignment& t);

/// Direct check of the labeling definition: every interval of rank >= 2 has
/// exactly one maximal chain whose consecutive label pairs all lie in the
/// relation.
bool is_r_labeling(const Labeling& l);

/// Number of maximal chains per descent set; D(c) collects the positions i
/// whose i-th triplet letter is b. Shaped like a flag vector of p.
FlagVector descent_distribution(const TripleAssignment& t);

/// Visits every assignment giving each rank-2 interval a unique rising chain
/// (the diamond constraint, generalized to any number of middle elements);
/// such intervals partition the triplets, so choices are independent. Stops
/// early when the callback returns false. Assignments arrive in lexicographic
/// order of the choice vector.
void for_each_rank2_consistent(const GradedPoset& p,
                               const std::function<bool(const TripleAssignment&)>& fn);

/// Product over rank-2 intervals of their middle-element counts, i.e. the
/// number of assignments for_each_rank2_consistent visits.
std::uint64_t rank2_candidate_count(const GradedPoset& p);

}  // namespace rposet
