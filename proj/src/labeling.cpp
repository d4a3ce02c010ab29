#include "rposet/labeling.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace rposet {

Letter TripleAssignment::at(const Triplet& t) const {
  const auto it = std::lower_bound(trips.begin(), trips.end(), t);
  if (it == trips.end() || !(*it == t))
    throw std::out_of_range("no triplet (" + poset.id(t.x) + ", " + poset.id(t.y) + ", " +
                            poset.id(t.z) + ")");
  return values[static_cast<std::size_t>(it - trips.begin())];
}

TripleAssignment make_assignment(const GradedPoset& p, std::vector<Letter> values) {
  TripleAssignment t{p, triplets(p), std::move(values)};
  if (t.values.size() != t.trips.size())
    throw std::invalid_argument("expected " + std::to_string(t.trips.size()) +
                                " letters, got " + std::to_string(t.values.size()));
  return t;
}

TripleAssignment make_assignment(const GradedPoset& p, const std::map<Triplet, Letter>& values) {
  TripleAssignment t{p, triplets(p), {}};
  if (values.size() != t.trips.size())
    throw std::invalid_argument("expected " + std::to_string(t.trips.size()) +
                                " letters, got " + std::to_string(values.size()));
  t.values.reserve(t.trips.size());
  for (const Triplet& trip : t.trips) {
    const auto it = values.find(trip);
    if (it == values.end())
      throw std::invalid_argument("missing letter for triplet (" + p.id(trip.x) + ", " +
                                  p.id(trip.y) + ", " + p.id(trip.z) + ")");
    t.values.push_back(it->second);
  }
  return t;
}

bool is_rising(const TripleAssignment& t, const MaximalChain& chain) {
  for (std::size_t j = 0; j + 2 < chain.size(); ++j)
    if (t.at(chain[j], chain[j + 1], chain[j + 2]) == Letter::B) return false;
  return true;
}

RisingStatus rising_chain_status(const TripleAssignment& t, int x, int y) {
  if (!t.poset.leq(x, y))
    throw PosetError(ErrorKind::NotComparable,
                     "\"" + t.poset.id(x) + "\" is not below \"" + t.poset.id(y) + "\"");
  RisingStatus status;
  int rising = 0;
  for (const auto& chain : maximal_chains_between(t.poset, x, y)) {
    if (!is_rising(t, chain)) continue;
    if (++rising == 1) {
      status.kind = RisingStatus::Unique;
      status.chain = chain;
    } else {
      status.kind = RisingStatus::Many;
      status.chain.reset();
      break;
    }
  }
  if (rising == 0) status.kind = RisingStatus::Zero;
  return status;
}

AssignmentCheck check_triple_assignment(const TripleAssignment& t) {
  AssignmentCheck result;
  const GradedPoset& p = t.poset;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (p.rank_of(y) - p.rank_of(x) < 2 || !p.leq(x, y)) continue;
      const RisingStatus status = rising_chain_status(t, x, y);
      if (status.kind != RisingStatus::Unique) {
        result.ok = false;
        result.violation = {x, y};
        result.status = status.kind;
        return result;
      }
    }
  return result;
}

bool is_triple_assignment(const TripleAssignment& t) { return check_triple_assignment(t).ok; }

std::vector<int> breakpoints(const TripleAssignment& t) {
  std::vector<int> out;
  const GradedPoset& p = t.poset;
  std::vector<int> first(p.size(), -1);
  std::vector<char> mixed(p.size(), 0);
  for (std::size_t i = 0; i < t.trips.size(); ++i) {
    const int y = t.trips[i].y;
    const int letter = t.values[i] == Letter::A ? 0 : 1;
    if (first[y] < 0)
      first[y] = letter;
    else if (first[y] != letter)
      mixed[y] = 1;
  }
  for (int y = 0; y < p.size(); ++y)
    if (first[y] >= 0 && !mixed[y]) out.push_back(y);
  return out;
}

bool locally_valid(const TripleAssignment& t, int max_rank) {
  const GradedPoset& p = t.poset;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      const int gap = p.rank_of(y) - p.rank_of(x);
      if (gap < 2 || gap > max_rank || !p.leq(x, y)) continue;
      if (rising_chain_status(t, x, y).kind != RisingStatus::Unique) return false;
    }
  return true;
}

Labeling make_labeling(const GradedPoset& p,
                       const std::map<std::pair<std::string, std::string>, std::string>& labels,
                       const std::set<std::pair<std::string, std::string>>& relation) {
  Labeling l{p, {}, relation};
  l.labels.reserve(p.covers().size());
  for (const auto& [x, y] : p.covers()) {
    const auto it = labels.find({p.id(x), p.id(y)});
    if (it == labels.end())
      throw std::invalid_argument("missing label for cover (" + p.id(x) + ", " + p.id(y) + ")");
    l.labels.push_back(it->second);
  }
  return l;
}

TripleAssignment labeling_to_assignment(const Labeling& l) {
  const GradedPoset& p = l.poset;
  TripleAssignment t{p, triplets(p), {}};
  t.values.reserve(t.trips.size());
  for (const Triplet& trip : t.trips) {
    const std::string& lower = l.labels[p.cover_index(trip.x, trip.y)];
    const std::string& upper = l.labels[p.cover_index(trip.y, trip.z)];
    t.values.push_back(l.relation.count({lower, upper}) ? Letter::A : Letter::B);
  }
  return t;
}

Labeling assignment_to_labeling(const TripleAssignment& t) {
  const GradedPoset& p = t.poset;
  Labeling l{p, {}, {}};
  // each cover is labeled by itself; a JSON pair keeps distinct ids distinct
  auto cover_label = [&](int x, int y) {
    return nlohmann::json::array({p.id(x), p.id(y)}).dump();
  };
  l.labels.reserve(p.covers().size());
  for (const auto& [x, y] : p.covers()) l.labels.push_back(cover_label(x, y));
  for (std::size_t i = 0; i < t.trips.size(); ++i) {
    if (t.values[i] != Letter::A) continue;
    const Triplet& trip = t.trips[i];
    l.relation.insert({cover_label(trip.x, trip.y), cover_label(trip.y, trip.z)});
  }
  return l;
}

bool is_r_labeling(const Labeling& l) {
  const GradedPoset& p = l.poset;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (p.rank_of(y) - p.rank_of(x) < 2 || !p.leq(x, y)) continue;
      int rising = 0;
      for (const auto& chain : maximal_chains_between(p, x, y)) {
        bool all_related = true;
        for (std::size_t j = 0; j + 2 < chain.size(); ++j) {
          const std::string& lower = l.labels[p.cover_index(chain[j], chain[j + 1])];
          const std::string& upper = l.labels[p.cover_index(chain[j + 1], chain[j + 2])];
          if (!l.relation.count({lower, upper})) {
            all_related = false;
            break;
          }
        }
        if (all_related && ++rising > 1) break;
      }
      if (rising != 1) return false;
    }
  return true;
}

FlagVector descent_distribution(const TripleAssignment& t) {
  const GradedPoset& p = t.poset;
  FlagVector dist(p.rank());
  if (p.rank() < 1) return dist;
  for (const auto& chain : maximal_chains(p)) {
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j + 2 < chain.size(); ++j)
      if (t.at(chain[j], chain[j + 1], chain[j + 2]) == Letter::B) mask |= 1u << j;
    dist.at(mask) += 1;
  }
  return dist;
}

namespace {

struct Rank2Interval {
  std::vector<std::size_t> trip_indices;  // one per middle element, ascending
};

std::vector<Rank2Interval> rank2_intervals(const GradedPoset& p,
                                           const std::vector<Triplet>& trips) {
  // triplets sharing (x, z) are consecutive in no particular way, so group
  // them through a map keyed by the endpoints
  std::map<std::pair<int, int>, Rank2Interval> grouped;
  for (std::size_t i = 0; i < trips.size(); ++i)
    grouped[{trips[i].x, trips[i].z}].trip_indices.push_back(i);
  std::vector<Rank2Interval> out;
  out.reserve(grouped.size());
  for (auto& [key, iv] : grouped) out.push_back(std::move(iv));
  return out;
}

}  // namespace

void for_each_rank2_consistent(const GradedPoset& p,
                               const std::function<bool(const TripleAssignment&)>& fn) {
  const std::vector<Triplet> trips = triplets(p);
  const std::vector<Rank2Interval> intervals = rank2_intervals(p, trips);
  std::vector<std::size_t> choice(intervals.size(), 0);
  TripleAssignment t{p, trips, std::vector<Letter>(trips.size(), Letter::B)};
  for (;;) {
    for (std::size_t i = 0; i < intervals.size(); ++i)
      for (std::size_t j = 0; j < intervals[i].trip_indices.size(); ++j)
        t.values[intervals[i].trip_indices[j]] = j == choice[i] ? Letter::A : Letter::B;
    if (!fn(t)) return;
    // odometer: the last interval turns fastest, so assignments come out in
    // lexicographic order of the choice vector
    std::size_t i = intervals.size();
    while (i > 0) {
      --i;
      if (++choice[i] < intervals[i].trip_indices.size()) break;
      choice[i] = 0;
      if (i == 0) return;
    }
    if (intervals.empty()) return;
  }
}

std::uint64_t rank2_candidate_count(const GradedPoset& p) {
  const std::vector<Triplet> trips = triplets(p);
  std::uint64_t count = 1;
  for (const auto& iv : rank2_intervals(p, trips)) {
    const std::uint64_t middles = iv.trip_indices.size();
    if (middles != 0 && count > UINT64_MAX / middles)
      throw std::overflow_error("candidate count exceeds 64 bits");
    count *= middles;
  }
  return count;
}

}  // namespace rposet
