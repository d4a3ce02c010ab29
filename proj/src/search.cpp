#include "rposet/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <mutex>
#include <thread>

namespace rposet {

const char* to_string(SearchMode m) {
  switch (m) {
    case SearchMode::First: return "first";
    case SearchMode::CountAll: return "count";
    case SearchMode::EnumerateAll: return "all";
  }
  return "?";
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ProvenNone: return "ProvenNone";
    case SearchStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int8_t kUnset = -1;

struct Chain {
  std::vector<int> vars;  // triplet indices along the chain
  int open = 0;           // unassigned vars
  int b_count = 0;        // vars assigned b; the chain is alive iff 0
};

struct IntervalState {
  std::vector<Chain> chains;
  int alive = 0;
  int rising = 0;  // alive chains with no open vars
};

struct Occurrence {
  int interval;
  int chain;
};

// Everything the solver needs that depends only on the poset.
struct Problem {
  int var_count = 0;
  std::vector<IntervalState> interval_init;
  std::vector<std::vector<Occurrence>> occurrences;  // per variable
};

Problem build_problem(const GradedPoset& p) {
  Problem prob;
  const std::vector<Triplet> trips = triplets(p);
  prob.var_count = static_cast<int>(trips.size());
  prob.occurrences.resize(trips.size());
  auto var_of = [&](int x, int y, int z) {
    const Triplet t{x, y, z};
    return static_cast<int>(std::lower_bound(trips.begin(), trips.end(), t) - trips.begin());
  };
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (p.rank_of(y) - p.rank_of(x) < 2 || !p.leq(x, y)) continue;
      IntervalState iv;
      for (const auto& mc : maximal_chains_between(p, x, y)) {
        Chain c;
        for (std::size_t j = 0; j + 2 < mc.size(); ++j)
          c.vars.push_back(var_of(mc[j], mc[j + 1], mc[j + 2]));
        c.open = static_cast<int>(c.vars.size());
        iv.chains.push_back(std::move(c));
      }
      iv.alive = static_cast<int>(iv.chains.size());
      const int index = static_cast<int>(prob.interval_init.size());
      for (int ci = 0; ci < static_cast<int>(iv.chains.size()); ++ci)
        for (int v : iv.chains[ci].vars) prob.occurrences[v].push_back({index, ci});
      prob.interval_init.push_back(std::move(iv));
    }
  return prob;
}

struct Solver {
  const Problem& prob;
  std::vector<IntervalState> intervals;
  std::vector<std::int8_t> values;  // kUnset / 0 = a / 1 = b
  std::vector<int> trail;
  std::deque<int> queue;
  std::vector<char> in_queue;
  std::uint64_t propagations = 0;

  explicit Solver(const Problem& problem)
      : prob(problem),
        intervals(problem.interval_init),
        values(problem.var_count, kUnset),
        in_queue(problem.interval_init.size(), 0) {}

  void touch(int iv) {
    if (!in_queue[iv]) {
      in_queue[iv] = 1;
      queue.push_back(iv);
    }
  }

  // counter updates only; conflicts surface when propagate() visits the
  // touched intervals
  void apply(int var, std::int8_t letter) {
    values[var] = letter;
    trail.push_back(var);
    for (const Occurrence& occ : prob.occurrences[var]) {
      IntervalState& iv = intervals[occ.interval];
      Chain& c = iv.chains[occ.chain];
      c.open--;
      if (letter == 1) {
        if (c.b_count == 0) iv.alive--;
        c.b_count++;
      } else if (c.b_count == 0 && c.open == 0) {
        iv.rising++;
      }
      touch(occ.interval);
    }
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const int var = trail.back();
      trail.pop_back();
      const std::int8_t letter = values[var];
      values[var] = kUnset;
      for (const Occurrence& occ : prob.occurrences[var]) {
        IntervalState& iv = intervals[occ.interval];
        Chain& c = iv.chains[occ.chain];
        if (letter == 1) {
          c.b_count--;
          if (c.b_count == 0) iv.alive++;
        } else if (c.b_count == 0 && c.open == 0) {
          iv.rising--;
        }
        c.open++;
      }
    }
    queue.clear();
    std::fill(in_queue.begin(), in_queue.end(), 0);
  }

  // assigns `letter` unless the variable is already set; false on contradiction
  bool force(int var, std::int8_t letter) {
    if (values[var] != kUnset) return values[var] == letter;
    propagations++;
    apply(var, letter);
    return true;
  }

  // FIFO scan; false on conflict. The two forcing rules reduce to the
  // diamond complement rule on length-2 intervals.
  bool propagate() {
    while (!queue.empty()) {
      const int index = queue.front();
      queue.pop_front();
      in_queue[index] = 0;
      IntervalState& iv = intervals[index];
      for (;;) {
        if (iv.alive == 0 || iv.rising >= 2) return false;
        bool changed = false;
        if (iv.rising == 1) {
          // some chain already rose: any other alive chain one letter away
          // from rising must take b
          for (const Chain& c : iv.chains) {
            if (c.b_count != 0 || c.open != 1) continue;
            int open_var = -1;
            for (int v : c.vars)
              if (values[v] == kUnset) {
                open_var = v;
                break;
              }
            if (!force(open_var, 1)) return false;
            changed = true;
            break;
          }
        } else if (iv.alive == 1) {
          // the last candidate chain must rise
          for (const Chain& c : iv.chains) {
            if (c.b_count != 0) continue;
            for (int v : c.vars)
              if (values[v] == kUnset) {
                if (!force(v, 0)) return false;
                changed = true;
              }
            break;
          }
        }
        if (!changed) break;
      }
    }
    return true;
  }

  void queue_all() {
    for (int i = 0; i < static_cast<int>(intervals.size()); ++i) touch(i);
  }
};

struct TaskResult {
  bool ran = false;
  bool found = false;
  bool limit_hit = false;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
  std::vector<std::vector<Letter>> witnesses;
};

std::vector<Letter> snapshot(const std::vector<std::int8_t>& values) {
  std::vector<Letter> letters(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    letters[i] = values[i] == 1 ? Letter::B : Letter::A;
  return letters;
}

struct TaskRunner {
  const Problem& prob;
  const SearchOptions& opts;
  const std::vector<int>& free_vars;
  int split_bits;
  Clock::time_point deadline;
  std::atomic<std::uint64_t>& best_found;

  std::uint64_t budget() const {
    const std::uint64_t tasks = std::uint64_t{1} << split_bits;
    return std::max<std::uint64_t>(1, opts.max_nodes / tasks);
  }

  TaskResult run(const Solver& root, std::uint64_t task) const {
    TaskResult result;
    result.ran = true;
    Solver s = root;
    const std::uint64_t node_budget = budget();
    const std::uint64_t keep =
        opts.mode == SearchMode::EnumerateAll ? opts.witness_limit
        : opts.mode == SearchMode::First      ? 1
                                              : (opts.witness_limit ? 1 : 0);
    bool stop = false;

    auto out_of_budget = [&]() {
      if (result.nodes >= node_budget) return true;
      if ((result.nodes & 1023) == 0) {
        if (Clock::now() > deadline) return true;
        if (opts.mode == SearchMode::First &&
            best_found.load(std::memory_order_relaxed) < task)
          return true;  // a lex-earlier task already holds the witness
      }
      return false;
    };

    // seed the prefix for this task; bit (split_bits-1) drives the first var
    for (int j = 0; j < split_bits; ++j) {
      const int var = free_vars[j];
      const std::int8_t letter =
          static_cast<std::int8_t>((task >> (split_bits - 1 - j)) & 1);
      if (s.values[var] != kUnset) {
        if (s.values[var] != letter) return result;  // subtree empty
        continue;
      }
      if (out_of_budget()) {
        result.limit_hit = true;
        return result;
      }
      result.nodes++;
      s.apply(var, letter);
      if (!s.propagate()) return result;
    }

    auto on_solution = [&]() {
      result.count++;
      if (result.witnesses.size() < keep) result.witnesses.push_back(snapshot(s.values));
      if (opts.mode == SearchMode::First) {
        result.found = true;
        stop = true;
      }
    };

    auto dfs = [&](auto&& self, int from) -> void {
      int var = -1;
      for (int v = from; v < s.prob.var_count; ++v)
        if (s.values[v] == kUnset) {
          var = v;
          break;
        }
      if (var < 0) {
        on_solution();
        return;
      }
      for (std::int8_t letter = 0; letter <= 1 && !stop; ++letter) {
        if (out_of_budget()) {
          result.limit_hit = true;
          stop = true;
          return;
        }
        result.nodes++;
        const std::size_t mark = s.trail.size();
        s.apply(var, letter);
        if (s.propagate()) self(self, var + 1);
        s.undo_to(mark);
        if (stop) return;
      }
    };
    dfs(dfs, 0);
    result.propagations = s.propagations;
    return result;
  }
};

}  // namespace

SearchOutcome search_triple_assignment(const GradedPoset& p, const SearchOptions& opts) {
  const auto start = Clock::now();
  const Problem prob = build_problem(p);
  SearchOutcome outcome;

  Solver root(prob);
  root.queue_all();
  const bool root_ok = root.propagate();
  const std::uint64_t root_propagations = root.propagations;
  root.propagations = 0;

  std::vector<int> free_vars;
  for (int v = 0; v < prob.var_count; ++v)
    if (root.values[v] == kUnset) free_vars.push_back(v);
  outcome.stats.free_variables = free_vars.size();
  outcome.stats.propagations = root_propagations;

  if (!root_ok) {
    outcome.status = SearchStatus::ProvenNone;
    outcome.exhausted = true;
    outcome.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
    return outcome;
  }

  const int split_bits = free_vars.size() >= 12 ? 4 : 0;
  const std::uint64_t task_count = std::uint64_t{1} << split_bits;
  const double timeout = std::min(opts.timeout_s, 1.0e9);
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(timeout));
  std::atomic<std::uint64_t> best_found{UINT64_MAX};
  const TaskRunner runner{prob, opts, free_vars, split_bits, deadline, best_found};

  std::vector<TaskResult> results(task_count);
  const int workers =
      std::max(1, std::min<int>(opts.jobs, static_cast<int>(task_count)));
  if (workers == 1) {
    for (std::uint64_t t = 0; t < task_count; ++t) {
      if (opts.mode == SearchMode::First &&
          best_found.load(std::memory_order_relaxed) < t)
        break;
      results[t] = runner.run(root, t);
      if (results[t].found) {
        std::uint64_t expected = best_found.load(std::memory_order_relaxed);
        while (expected > t &&
               !best_found.compare_exchange_weak(expected, t, std::memory_order_relaxed)) {
        }
        break;  // sequential order: no earlier task remains
      }
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    auto work = [&]() {
      for (;;) {
        const std::uint64_t t = next.fetch_add(1, std::memory_order_relaxed);
        if (t >= task_count) return;
        if (opts.mode == SearchMode::First &&
            best_found.load(std::memory_order_relaxed) < t)
          continue;
        TaskResult r = runner.run(root, t);
        if (r.found) {
          std::uint64_t expected = best_found.load(std::memory_order_relaxed);
          while (expected > t &&
                 !best_found.compare_exchange_weak(expected, t, std::memory_order_relaxed)) {
          }
        }
        results[t] = std::move(r);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // combine in task order; for First only the prefix up to the winning task
  // counts, so the totals match a sequential run exactly
  const std::uint64_t found_task = best_found.load();
  const std::uint64_t counted =
      opts.mode == SearchMode::First && found_task != UINT64_MAX
          ? found_task + 1
          : task_count;
  bool limit_hit = false;
  std::vector<Letter> first_witness;
  for (std::uint64_t t = 0; t < counted; ++t) {
    const TaskResult& r = results[t];
    outcome.stats.nodes += r.nodes;
    outcome.stats.propagations += r.propagations;
    outcome.count += r.count;
    limit_hit = limit_hit || r.limit_hit;
    if (first_witness.empty() && !r.witnesses.empty()) first_witness = r.witnesses.front();
    if (opts.mode == SearchMode::EnumerateAll)
      for (const auto& w : r.witnesses) {
        if (outcome.witnesses.size() >= opts.witness_limit) break;
        outcome.witnesses.push_back(make_assignment(p, w));
      }
  }
  if (!first_witness.empty()) outcome.witness = make_assignment(p, first_witness);

  if (opts.mode == SearchMode::First) {
    if (found_task != UINT64_MAX) {
      outcome.status = SearchStatus::Found;
    } else if (limit_hit) {
      outcome.status = SearchStatus::Inconclusive;
    } else {
      outcome.status = SearchStatus::ProvenNone;
      outcome.exhausted = true;
    }
  } else {
    if (limit_hit) {
      outcome.status = SearchStatus::Inconclusive;
    } else {
      outcome.exhausted = true;
      outcome.status = outcome.count > 0 ? SearchStatus::Found : SearchStatus::ProvenNone;
    }
  }
  outcome.stats.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
  return outcome;
}

}  // namespace rposet
