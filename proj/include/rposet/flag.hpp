#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "rposet/poset.hpp"

namespace rposet {

using Int = boost::multiprecision::cpp_int;

/// Exact integer map from rank subsets S of {1..n-1} to counts, one entry
/// per subset. Bit i-1 of the mask stands for rank i. Serves both the
/// f role (chain counts) and the h role (its inclusion-exclusion transform).
/// A rank-0 poset carries empty flag data: no masks at all.
class FlagVector {
 public:
  explicit FlagVector(int n);

  int n() const { return n_; }
  std::uint32_t mask_count() const { return static_cast<std::uint32_t>(entries_.size()); }

  Int& at(std::uint32_t mask) { return entries_.at(mask); }
  const Int& at(std::uint32_t mask) const { return entries_.at(mask); }

  bool operator==(const FlagVector&) const = default;

 private:
  int n_;
  std::vector<Int> entries_;
};

/// f_S = number of chains in p hitting exactly the ranks in S.
FlagVector flag_f_vector(const GradedPoset& p);

/// h_S = sum over T subset of S of (-1)^{|S - T|} f_T.
FlagVector flag_h_vector(const FlagVector& f);

/// Inverse transform: f_S = sum over T subset of S of h_T.
FlagVector flag_f_from_h(const FlagVector& h);

Int sum_entries(const FlagVector& v);

}  // namespace rposet
