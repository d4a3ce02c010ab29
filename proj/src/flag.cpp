#include "rposet/flag.hpp"

#include <bit>
#include <stdexcept>

namespace rposet {

FlagVector::FlagVector(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("flag vector needs rank >= 0");
  if (n > 31) throw std::invalid_argument("rank too large for flag vector");
  if (n >= 1) entries_.assign(std::size_t{1} << (n - 1), Int(0));
}

FlagVector flag_f_vector(const GradedPoset& p) {
  FlagVector f(p.rank());
  const int n = p.rank();
  if (n < 1) return f;
  const int m = p.size();
  const int words = (m + 63) / 64;

  // above[v] = bitset of elements >= v. Covers always point to a strictly
  // larger index (elements are rank-sorted), so a reverse sweep completes
  // every row before it is consumed.
  std::vector<std::uint64_t> above(std::size_t(m) * words, 0);
  for (int v = m - 1; v >= 0; --v) {
    std::uint64_t* row = &above[std::size_t(v) * words];
    row[v / 64] |= std::uint64_t{1} << (v % 64);
    for (int w : p.up_covers(v)) {
      const std::uint64_t* src = &above[std::size_t(w) * words];
      for (int k = 0; k < words; ++k) row[k] |= src[k];
    }
  }

  std::vector<std::vector<int>> by_rank(n + 1);
  for (int v = 0; v < m; ++v) by_rank[p.rank_of(v)].push_back(v);

  for (std::uint32_t mask = 0; mask < f.mask_count(); ++mask) {
    std::vector<int> stops{0};
    for (int r = 1; r < n; ++r)
      if (mask & (1u << (r - 1))) stops.push_back(r);
    stops.push_back(n);
    // count[v] = chains through one element of each stop rank so far, ending
    // at v; each comparable pair across consecutive stops contributes once.
    std::vector<Int> count(m, Int(0));
    count[p.bottom()] = 1;
    for (std::size_t si = 0; si + 1 < stops.size(); ++si) {
      std::vector<Int> next(m, Int(0));
      for (int v : by_rank[stops[si]]) {
        if (count[v] == 0) continue;
        const std::uint64_t* row = &above[std::size_t(v) * words];
        for (int w : by_rank[stops[si + 1]])
          if (row[w / 64] >> (w % 64) & 1) next[w] += count[v];
      }
      count = std::move(next);
    }
    f.at(mask) = count[p.top()];
  }
  return f;
}

FlagVector flag_h_vector(const FlagVector& f) {
  FlagVector h(f.n());
  for (std::uint32_t s = 0; s < h.mask_count(); ++s) {
    Int total = 0;
    // subsets T of S with sign (-1)^{|S - T|}
    for (std::uint32_t t = s;; t = (t - 1) & s) {
      if (std::popcount(s & ~t) % 2 == 0)
        total += f.at(t);
      else
        total -= f.at(t);
      if (t == 0) break;
    }
    h.at(s) = total;
  }
  return h;
}

FlagVector flag_f_from_h(const FlagVector& h) {
  FlagVector f(h.n());
  for (std::uint32_t s = 0; s < f.mask_count(); ++s) {
    Int total = 0;
    for (std::uint32_t t = s;; t = (t - 1) & s) {
      total += h.at(t);
      if (t == 0) break;
    }
    f.at(s) = total;
  }
  return f;
}

Int sum_entries(const FlagVector& v) {
  Int total = 0;
  for (std::uint32_t mask = 0; mask < v.mask_count(); ++mask) total += v.at(mask);
  return total;
}

}  // namespace rposet
