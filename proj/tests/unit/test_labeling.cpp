#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "rposet/flag.hpp"
#include "rposet/labeling.hpp"
#include "rposet/poset.hpp"
#include "rposet/search.hpp"

using namespace rposet;

namespace {

GradedPoset glued(int n) { return glue(butterfly(n), butterfly(n)); }

// Letter per triplet decided by its middle element: 'a' iff the middle is an
// unbarred x-element. A valid assignment on any butterfly.
TripleAssignment unbarred_middles(const GradedPoset& t) {
  std::vector<Letter> letters;
  for (const Triplet& tr : triplets(t)) {
    const std::string& mid = t.id(tr.y);
    letters.push_back(mid.back() == 'b' ? Letter::B : Letter::A);
  }
  return make_assignment(t, letters);
}

TripleAssignment constant_assignment(const GradedPoset& p, Letter l) {
  return make_assignment(p, std::vector<Letter>(triplets(p).size(), l));
}

// The standard labeling of the boolean lattice: each cover adds one digit,
// the label is that digit, and the relation is strict digit order.
Labeling boolean_min_labeling(const GradedPoset& b) {
  std::map<std::pair<std::string, std::string>, std::string> labels;
  std::set<std::pair<std::string, std::string>> relation;
  std::set<std::string> seen;
  for (const auto& [x, y] : b.covers()) {
    const std::string lo = b.id(x);
    const std::string hi = b.id(y);
    std::string added;
    for (char c : hi)
      if (lo.find(c) == std::string::npos) added.push_back(c);
    labels[{lo, hi}] = added;
    seen.insert(added);
  }
  for (const auto& l : seen)
    for (const auto& m : seen)
      if (l < m) relation.insert({l, m});
  return make_labeling(b, labels, relation);
}

}  // namespace

TEST_CASE("make_assignment validates its input") {
  const auto t = butterfly(3);
  CHECK_THROWS_AS((void)make_assignment(t, std::vector<Letter>(3, Letter::A)),
                  std::invalid_argument);
  const auto trips = triplets(t);
  std::map<Triplet, Letter> by_trip;
  for (const auto& tr : trips) by_trip[tr] = Letter::B;
  const auto tau = make_assignment(t, by_trip);
  CHECK(tau.at(trips.front()) == Letter::B);
  by_trip.erase(trips.front());
  CHECK_THROWS_AS((void)make_assignment(t, by_trip), std::invalid_argument);
}

TEST_CASE("rising chains and statuses") {
  const auto t = butterfly(3);
  const auto tau = unbarred_middles(t);
  const auto chains = maximal_chains(t);
  int rising = 0;
  for (const auto& c : chains) rising += is_rising(tau, c);
  CHECK(rising == 1);

  const auto status = rising_chain_status(tau, t.bottom(), t.top());
  CHECK(status.kind == RisingStatus::Unique);
  REQUIRE(status.chain.has_value());
  CHECK(chain_ids(t, *status.chain) ==
        std::vector<std::string>{"bot", "x1", "x2", "top"});

  CHECK(rising_chain_status(constant_assignment(t, Letter::A), t.bottom(), t.top()).kind ==
        RisingStatus::Many);
  CHECK(rising_chain_status(constant_assignment(t, Letter::B), t.bottom(), t.top()).kind ==
        RisingStatus::Zero);
  CHECK_THROWS_AS((void)rising_chain_status(tau, 1, 2), PosetError);
}

TEST_CASE("assignment validity on butterflies") {
  for (int n = 2; n <= 5; ++n) {
    const auto t = butterfly(n);
    CHECK(is_triple_assignment(unbarred_middles(t)));
    CHECK(!is_triple_assignment(constant_assignment(t, Letter::A)));
    CHECK(!is_triple_assignment(constant_assignment(t, Letter::B)));
  }
  const auto t = butterfly(3);
  const auto all_a = check_triple_assignment(constant_assignment(t, Letter::A));
  CHECK(!all_a.ok);
  CHECK(all_a.status == RisingStatus::Many);
  REQUIRE(all_a.violation.has_value());

  const auto all_b = check_triple_assignment(constant_assignment(t, Letter::B));
  CHECK(!all_b.ok);
  CHECK(all_b.status == RisingStatus::Zero);

  const auto good = check_triple_assignment(unbarred_middles(t));
  CHECK(good.ok);
  CHECK(!good.violation.has_value());
}

TEST_CASE("an invalid mixed assignment is caught") {
  // Flip one letter of a valid assignment; some diamond loses its unique
  // rising chain.
  const auto t = butterfly(3);
  auto tau = unbarred_middles(t);
  tau.values[0] = complement(tau.values[0]);
  CHECK(!is_triple_assignment(tau));
}

TEST_CASE("breakpoints of the butterfly assignment") {
  // Every interior element of unbarred_middles has all incident triplet
  // letters equal, so every interior element is a breakpoint.
  const auto t = butterfly(4);
  const auto bps = breakpoints(unbarred_middles(t));
  CHECK((int)bps.size() == t.size() - 2);
  for (int v : bps) {
    CHECK(t.rank_of(v) > 0);
    CHECK(t.rank_of(v) < t.rank());
  }
}

TEST_CASE("breakpoints are absent when letters mix at every interior element") {
  const auto p3 = glued(3);
  const auto out = search_triple_assignment(p3);
  REQUIRE(out.witness.has_value());
  // The glued poset witness still has breakpoints; a chain poset assignment
  // vacuously makes every interior element a breakpoint.
  const auto c = chain_poset(3);
  const auto tau = constant_assignment(c, Letter::A);
  CHECK((int)breakpoints(tau).size() == c.size() - 2);
}

TEST_CASE("locally_valid checks small intervals only") {
  const auto t = butterfly(4);
  const auto tau = unbarred_middles(t);
  CHECK(locally_valid(tau, 2));
  CHECK(locally_valid(tau, 3));
  CHECK(locally_valid(tau, 4));
  CHECK(!locally_valid(constant_assignment(t, Letter::A), 2));
}

TEST_CASE("rank2 consistent enumeration sizes") {
  CHECK(rank2_candidate_count(butterfly(3)) == 16);
  CHECK(rank2_candidate_count(butterfly(4)) == 256);
  CHECK(rank2_candidate_count(glued(3)) == 256);
  std::uint64_t seen = 0;
  std::uint64_t locally3 = 0;
  std::uint64_t valid = 0;
  for_each_rank2_consistent(butterfly(3), [&](const TripleAssignment& tau) {
    ++seen;
    CHECK(locally_valid(tau, 2));
    if (locally_valid(tau, 3)) ++locally3;
    if (is_triple_assignment(tau)) ++valid;
    return true;
  });
  CHECK(seen == 16);
  // rank 3 means the whole poset, so local validity and validity coincide
  CHECK(locally3 == 12);
  CHECK(valid == 12);
}

TEST_CASE("rank2 enumeration stops when the callback asks") {
  int calls = 0;
  for_each_rank2_consistent(butterfly(3), [&](const TripleAssignment&) {
    return ++calls < 5;
  });
  CHECK(calls == 5);
}

TEST_CASE("labeling round-trip through assignments") {
  for (const auto& p : {butterfly(3), butterfly(4), glued(3)}) {
    const auto out = search_triple_assignment(p);
    REQUIRE(out.witness.has_value());
    const auto tau = *out.witness;
    const Labeling lab = assignment_to_labeling(tau);
    CHECK(is_r_labeling(lab));
    CHECK(labeling_to_assignment(lab) == tau);
  }
}

TEST_CASE("boolean lattice standard labeling") {
  const auto b3 = boolean_lattice(3);
  const Labeling lab = boolean_min_labeling(b3);
  CHECK(is_r_labeling(lab));
  const auto tau = labeling_to_assignment(lab);
  CHECK(is_triple_assignment(tau));
  const FlagVector d = descent_distribution(tau);
  CHECK(d == flag_h_vector(flag_f_vector(b3)));
}

TEST_CASE("descent distribution matches flag h on valid assignments") {
  for (int n = 2; n <= 5; ++n) {
    const auto t = butterfly(n);
    const auto tau = unbarred_middles(t);
    CHECK(descent_distribution(tau) == flag_h_vector(flag_f_vector(t)));
  }
  const auto p3 = glued(3);
  const auto out = search_triple_assignment(p3);
  REQUIRE(out.witness.has_value());
  CHECK(descent_distribution(*out.witness) == flag_h_vector(flag_f_vector(p3)));
}

TEST_CASE("make_labeling rejects a missing cover label") {
  const auto c = chain_poset(2);
  CHECK_THROWS_AS((void)make_labeling(c, {}, {}), std::invalid_argument);
}
