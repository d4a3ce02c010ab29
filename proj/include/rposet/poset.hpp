#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rposet {

enum class ErrorKind {
  NotGraded,
  NotBounded,
  DuplicateElement,
  DanglingCover,
  InvalidRank,
  RankMismatch,
  RankTooSmall,
  NotComparable,
  UnknownElement,
  ParseError,
};

const char* to_string(ErrorKind kind);

class PosetError : public std::runtime_error {
 public:
  PosetError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Finite bounded graded poset stored as its Hasse diagram.
///
/// Elements are sorted by (rank, id) at construction and addressed by their
/// index into that order everywhere in the library; the order itself is the
/// canonical element order used for chains, triplets, and serialization.
/// Instances are immutable once built and safe to share across threads.
class GradedPoset {
 public:
  /// Validates (id, rank) pairs plus cover pairs and builds the poset.
  /// Throws PosetError with kind DuplicateElement, DanglingCover, NotGraded,
  /// NotBounded, or InvalidRank when the input is not a bounded graded poset.
  static GradedPoset from_cover_relations(
      const std::vector<std::pair<std::string, int>>& ranked_elements,
      const std::vector<std::pair<std::string, std::string>>& cover_pairs);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(ids_.size()); }

  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  int rank_of(int v) const { return ranks_[v]; }
  int index_of(const std::string& id) const;  // UnknownElement on a miss
  bool contains(const std::string& id) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<int>& up_covers(int v) const { return up_[v]; }
  const std::vector<int>& down_covers(int v) const { return down_[v]; }

  /// Cover pairs (x, y) sorted lexicographically by (id(x), id(y)).
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int cover_index(int x, int y) const;  // -1 when (x, y) is not a cover

  /// x <= y in the order, decided by breadth-first search over up-covers.
  bool leq(int x, int y) const;
  /// Sorted indices of { z : x <= z <= y }.
  std::vector<int> closed_interval_elements(int x, int y) const;
  /// Element counts per rank 0..n.
  std::vector<int> rank_profile() const;

  bool operator==(const GradedPoset& other) const;

 private:
  GradedPoset() = default;

  int rank_ = 0;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::string> ids_;
  std::vector<int> ranks_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::pair<int, int>> covers_;
  std::map<std::string, int> index_;
};

/// Cover chain x < y < z written as element indices.
struct Triplet {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const Triplet&) const = default;
};

/// Maximal chain, bottom to top, as element indices.
using MaximalChain = std::vector<int>;

/// An interval [x, y] re-ranked so x sits at rank 0, together with the map
/// from its element ids back to the parent poset (the identity on ids here,
/// kept explicit so callers never have to assume that).
struct Interval {
  GradedPoset poset;
  std::map<std::string, std::string> to_parent;
};

// Generators. All emit canonical element names and validate their input
// rank: butterfly needs n >= 1, boolean_lattice 0 <= n <= 9, chain n >= 0.
GradedPoset butterfly(int n);
GradedPoset boolean_lattice(int n);
GradedPoset chain_poset(int n);

/// Identifies the bottoms and tops of two posets of equal rank n >= 2.
/// Interior ids are prefixed "L:" / "R:"; the new bounds are "bot" / "top".
/// Throws RankMismatch or RankTooSmall.
GradedPoset glue(const GradedPoset& left, const GradedPoset& right);

Interval interval(const GradedPoset& p, int x, int y);
Interval interval(const GradedPoset& p, const std::string& x, const std::string& y);

/// All maximal chains of p, in lexicographic order w.r.t. the element order.
std::vector<MaximalChain> maximal_chains(const GradedPoset& p);
/// Maximal chains of the interval [x, y], same order, as chains in p.
std::vector<MaximalChain> maximal_chains_between(const GradedPoset& p, int x, int y);

/// All triplets of p sorted by (x, y, z) in the element order, i.e. by the
/// rank of x first and identifiers after that.
std::vector<Triplet> triplets(const GradedPoset& p);

/// Every interval of rank >= 1 has equally many odd- and even-rank elements,
/// endpoints included.
bool is_eulerian(const GradedPoset& p);

/// Isomorphism by exhaustive rank-preserving bijection; intended for the
/// small posets this library works with, the per-rank counts are tiny.
bool are_isomorphic(const GradedPoset& p, const GradedPoset& q);

std::vector<std::string> chain_ids(const GradedPoset& p, const MaximalChain& c);

}  // namespace rposet
