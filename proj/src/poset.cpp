#include "rposet/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace rposet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::DanglingCover: return "DanglingCover";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "PosetError";
}

PosetError::PosetError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

namespace {
[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw PosetError(kind, message);
}
}  // namespace

GradedPoset GradedPoset::from_cover_relations(
    const std::vector<std::pair<std::string, int>>& ranked_elements,
    const std::vector<std::pair<std::string, std::string>>& cover_pairs) {
  if (ranked_elements.empty()) fail(ErrorKind::NotBounded, "poset has no elements");

  GradedPoset p;

  std::vector<std::pair<std::string, int>> sorted = ranked_elements;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  for (const auto& [id, r] : sorted) {
    if (r < 0) fail(ErrorKind::InvalidRank, "element \"" + id + "\" has negative rank");
    const int v = static_cast<int>(p.ids_.size());
    if (!p.index_.emplace(id, v).second)
      fail(ErrorKind::DuplicateElement, "element \"" + id + "\" declared twice");
    p.ids_.push_back(id);
    p.ranks_.push_back(r);
  }

  const int size = p.size();
  p.up_.assign(size, {});
  p.down_.assign(size, {});

  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<std::string, std::string>> cover_sorted = cover_pairs;
  std::sort(cover_sorted.begin(), cover_sorted.end());
  for (const auto& [xid, yid] : cover_sorted) {
    auto xit = p.index_.find(xid);
    auto yit = p.index_.find(yid);
    if (xit == p.index_.end())
      fail(ErrorKind::DanglingCover, "cover references unknown element \"" + xid + "\"");
    if (yit == p.index_.end())
      fail(ErrorKind::DanglingCover, "cover references unknown element \"" + yid + "\"");
    const int x = xit->second;
    const int y = yit->second;
    if (p.ranks_[y] != p.ranks_[x] + 1)
      fail(ErrorKind::NotGraded, "cover (\"" + xid + "\", \"" + yid + "\") does not raise rank by one");
    if (!seen.emplace(x, y).second) continue;
    p.covers_.emplace_back(x, y);
    p.up_[x].push_back(y);
    p.down_[y].push_back(x);
  }
  for (auto& nb : p.up_) std::sort(nb.begin(), nb.end());
  for (auto& nb : p.down_) std::sort(nb.begin(), nb.end());

  std::vector<int> minimal;
  std::vector<int> maximal;
  for (int v = 0; v < size; ++v) {
    if (p.down_[v].empty()) minimal.push_back(v);
    if (p.up_[v].empty()) maximal.push_back(v);
  }
  if (minimal.size() != 1)
    fail(ErrorKind::NotBounded, "expected exactly one minimal element, found " +
                                    std::to_string(minimal.size()));
  if (maximal.size() != 1)
    fail(ErrorKind::NotBounded, "expected exactly one maximal element, found " +
                                    std::to_string(maximal.size()));
  p.bottom_ = minimal.front();
  p.top_ = maximal.front();
  if (p.ranks_[p.bottom_] != 0)
    fail(ErrorKind::NotGraded, "minimum \"" + p.ids_[p.bottom_] + "\" has rank " +
                                   std::to_string(p.ranks_[p.bottom_]) + ", not 0");
  p.rank_ = p.ranks_[p.top_];
  return p;
}

int GradedPoset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail(ErrorKind::UnknownElement, "no element \"" + id + "\"");
  return it->second;
}

bool GradedPoset::contains(const std::string& id) const { return index_.count(id) > 0; }

int GradedPoset::cover_index(int x, int y) const {
  for (std::size_t i = 0; i < covers_.size(); ++i)
    if (covers_[i].first == x && covers_[i].second == y) return static_cast<int>(i);
  return -1;
}

bool GradedPoset::leq(int x, int y) const {
  if (x == y) return true;
  if (ranks_[x] >= ranks_[y]) return false;
  std::deque<int> queue{x};
  std::vector<char> visited(ids_.size(), 0);
  visited[x] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : up_[v]) {
      if (w == y) return true;
      if (!visited[w] && ranks_[w] < ranks_[y]) {
        visited[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

std::vector<int> GradedPoset::closed_interval_elements(int x, int y) const {
  std::vector<char> above(ids_.size(), 0);
  std::vector<char> below(ids_.size(), 0);
  std::deque<int> queue{x};
  above[x] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : up_[v])
      if (!above[w]) {
        above[w] = 1;
        queue.push_back(w);
      }
  }
  queue.push_back(y);
  below[y] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : down_[v])
      if (!below[w]) {
        below[w] = 1;
        queue.push_back(w);
      }
  }
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (above[v] && below[v]) out.push_back(v);
  return out;
}

std::vector<int> GradedPoset::rank_profile() const {
  std::vector<int> profile(rank_ + 1, 0);
  for (int r : ranks_) profile[r]++;
  return profile;
}

bool GradedPoset::operator==(const GradedPoset& other) const {
  return ids_ == other.ids_ && ranks_ == other.ranks_ && covers_ == other.covers_;
}

GradedPoset butterfly(int n) {
  if (n < 1) fail(ErrorKind::InvalidRank, "butterfly poset needs rank >= 1");
  std::vector<std::pair<std::string, int>> elements{{"bot", 0}, {"top", n}};
  std::vector<std::pair<std::string, std::string>> covers;
  if (n == 1) {
    covers.emplace_back("bot", "top");
    return GradedPoset::from_cover_relations(elements, covers);
  }
  auto name = [](int i, bool barred) { return "x" + std::to_string(i) + (barred ? "b" : ""); };
  for (int i = 1; i < n; ++i) {
    elements.emplace_back(name(i, false), i);
    elements.emplace_back(name(i, true), i);
  }
  covers.emplace_back("bot", name(1, false));
  covers.emplace_back("bot", name(1, true));
  for (int i = 1; i + 1 < n; ++i)
    for (bool lower : {false, true})
      for (bool upper : {false, true}) covers.emplace_back(name(i, lower), name(i + 1, upper));
  covers.emplace_back(name(n - 1, false), "top");
  covers.emplace_back(name(n - 1, true), "top");
  return GradedPoset::from_cover_relations(elements, covers);
}

GradedPoset boolean_lattice(int n) {
  if (n < 0 || n > 9)
    fail(ErrorKind::InvalidRank, "boolean lattice supported for 0 <= n <= 9");
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  auto subset_id = [](unsigned mask) {
    std::string id;
    for (int i = 0; i < 9; ++i)
      if (mask & (1u << i)) id += static_cast<char>('1' + i);
    return id;
  };
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    elements.emplace_back(subset_id(mask), std::popcount(mask));
    for (int i = 0; i < n; ++i)
      if (!(mask & (1u << i))) covers.emplace_back(subset_id(mask), subset_id(mask | (1u << i)));
  }
  return GradedPoset::from_cover_relations(elements, covers);
}

GradedPoset chain_poset(int n) {
  if (n < 0) fail(ErrorKind::InvalidRank, "chain needs rank >= 0");
  std::vector<std::pair<std::string, int>> elements{{"bot", 0}};
  std::vector<std::pair<std::string, std::string>> covers;
  std::string prev = "bot";
  for (int i = 1; i <= n; ++i) {
    const std::string id = i == n ? "top" : "c" + std::to_string(i);
    elements.emplace_back(id, i);
    covers.emplace_back(prev, id);
    prev = id;
  }
  return GradedPoset::from_cover_relations(elements, covers);
}

GradedPoset glue(const GradedPoset& left, const GradedPoset& right) {
  if (left.rank() != right.rank())
    fail(ErrorKind::RankMismatch, "cannot glue posets of ranks " + std::to_string(left.rank()) +
                                      " and " + std::to_string(right.rank()));
  const int n = left.rank();
  if (n < 2) fail(ErrorKind::RankTooSmall, "gluing needs rank >= 2");

  std::vector<std::pair<std::string, int>> elements{{"bot", 0}, {"top", n}};
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto* side : {&left, &right}) {
    const std::string prefix = side == &left ? "L:" : "R:";
    auto rename = [&](int v) -> std::string {
      if (v == side->bottom()) return "bot";
      if (v == side->top()) return "top";
      return prefix + side->id(v);
    };
    for (int v = 0; v < side->size(); ++v)
      if (v != side->bottom() && v != side->top())
        elements.emplace_back(rename(v), side->rank_of(v));
    for (const auto& [x, y] : side->covers()) covers.emplace_back(rename(x), rename(y));
  }
  return GradedPoset::from_cover_relations(elements, covers);
}

Interval interval(const GradedPoset& p, int x, int y) {
  if (!p.leq(x, y))
    fail(ErrorKind::NotComparable,
         "\"" + p.id(x) + "\" is not below \"" + p.id(y) + "\"");
  const std::vector<int> members = p.closed_interval_elements(x, y);
  std::vector<char> inside(p.size(), 0);
  for (int v : members) inside[v] = 1;

  const int base = p.rank_of(x);
  std::vector<std::pair<std::string, int>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::string> to_parent;
  for (int v : members) {
    elements.emplace_back(p.id(v), p.rank_of(v) - base);
    to_parent.emplace(p.id(v), p.id(v));
    for (int w : p.up_covers(v))
      if (inside[w]) covers.emplace_back(p.id(v), p.id(w));
  }
  return Interval{GradedPoset::from_cover_relations(elements, covers),
                  std::move(to_parent)};
}

Interval interval(const GradedPoset& p, const std::string& x, const std::string& y) {
  return interval(p, p.index_of(x), p.index_of(y));
}

std::vector<MaximalChain> maximal_chains_between(const GradedPoset& p, int x, int y) {
  std::vector<MaximalChain> out;
  if (!p.leq(x, y)) return out;
  std::vector<char> below(p.size(), 0);
  {
    std::deque<int> queue{y};
    below[y] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : p.down_covers(v))
        if (!below[w]) {
          below[w] = 1;
          queue.push_back(w);
        }
    }
  }
  MaximalChain path{x};
  // up-cover lists are sorted, so chains come out lexicographically
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == y) {
      out.push_back(path);
      return;
    }
    for (int w : p.up_covers(v)) {
      if (!below[w]) continue;
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  dfs(dfs, x);
  return out;
}

std::vector<MaximalChain> maximal_chains(const GradedPoset& p) {
  return maximal_chains_between(p, p.bottom(), p.top());
}

std::vector<Triplet> triplets(const GradedPoset& p) {
  std::vector<Triplet> out;
  for (int y = 0; y < p.size(); ++y)
    for (int x : p.down_covers(y))
      for (int z : p.up_covers(y)) out.push_back(Triplet{x, y, z});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_eulerian(const GradedPoset& p) {
  const int size = p.size();
  std::vector<std::vector<char>> reach(size, std::vector<char>(size, 0));
  for (int x = 0; x < size; ++x) {
    std::deque<int> queue{x};
    reach[x][x] = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : p.up_covers(v))
        if (!reach[x][w]) {
          reach[x][w] = 1;
          queue.push_back(w);
        }
    }
  }
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (!reach[x][y] || p.rank_of(y) <= p.rank_of(x)) continue;
      int odd = 0;
      int even = 0;
      for (int z = 0; z < size; ++z)
        if (reach[x][z] && reach[z][y]) (p.rank_of(z) % 2 ? odd : even)++;
      if (odd != even) return false;
    }
  return true;
}

bool are_isomorphic(const GradedPoset& p, const GradedPoset& q) {
  if (p.rank() != q.rank() || p.size() != q.size()) return false;
  if (p.rank_profile() != q.rank_profile()) return false;
  if (p.covers().size() != q.covers().size()) return false;

  const int n = p.rank();
  std::vector<std::vector<int>> p_levels(n + 1);
  std::vector<std::vector<int>> q_levels(n + 1);
  for (int v = 0; v < p.size(); ++v) p_levels[p.rank_of(v)].push_back(v);
  for (int v = 0; v < q.size(); ++v) q_levels[q.rank_of(v)].push_back(v);

  std::vector<int> image(p.size(), -1);
  // map rank levels bottom-up, trying every permutation of the q level and
  // pruning on down-cover consistency
  auto level_ok = [&](int r) {
    for (int v : p_levels[r]) {
      std::vector<int> mapped;
      for (int u : p.down_covers(v)) mapped.push_back(image[u]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped != q.down_covers(image[v])) return false;
    }
    return true;
  };
  auto assign = [&](auto&& self, int r) -> bool {
    if (r > n) return true;
    std::vector<int> perm = q_levels[r];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) image[p_levels[r][i]] = perm[i];
      if (level_ok(r) && self(self, r + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int v : p_levels[r]) image[v] = -1;
    return false;
  };
  return assign(assign, 0);
}

std::vector<std::string> chain_ids(const GradedPoset& p, const MaximalChain& c) {
  std::vector<std::string> out;
  out.reserve(c.size());
  for (int v : c) out.push_back(p.id(v));
  return out;
}

}  // namespace rposet
