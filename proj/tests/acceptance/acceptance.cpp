// Acceptance gate: one line per criterion, wall-clock limits pinned in code.
// Everything is integer arithmetic; there are no tolerances anywhere, a
// criterion either reproduces the expected object exactly or fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "rposet/flag.hpp"
#include "rposet/labeling.hpp"
#include "rposet/polynomial.hpp"
#include "rposet/poset.hpp"
#include "rposet/search.hpp"

namespace {

using namespace rposet;
using Clock = std::chrono::steady_clock;

struct Criterion {
  const char* name;
  const char* intent;
  double limit_s;  // 0 means no limit
  std::function<bool(std::string&)> run;
};

GradedPoset glued(int n) { return glue(butterfly(n), butterfly(n)); }

std::string letters_of(const TripleAssignment& t) {
  std::string s;
  for (Letter l : t.values) s.push_back(letter_char(l));
  return s;
}

oracle::NcPoly to_oracle_ab(const AbPolynomial& p) {
  oracle::NcPoly out;
  for (const auto& [w, c] : p.terms()) out[w.str()] = static_cast<long long>(c);
  return out;
}

oracle::NcPoly to_oracle_cd(const CdPolynomial& p) {
  oracle::NcPoly out;
  for (const auto& [w, c] : p.terms()) out[w.str()] = static_cast<long long>(c);
  return out;
}

bool fail(std::string& why, const std::string& message) {
  why = message;
  return false;
}

// 1. Butterfly closed forms: f_S = 2^|S|, h_S = 1, cd-index = c^{n-1}.
bool butterfly_closed_forms(std::string& why) {
  for (int n = 2; n <= 8; ++n) {
    const auto t = butterfly(n);
    const FlagVector f = flag_f_vector(t);
    const FlagVector h = flag_h_vector(f);
    for (std::uint32_t mask = 0; mask < f.mask_count(); ++mask) {
      if (f.at(mask) != Int(1) << std::popcount(mask))
        return fail(why, "flag f mismatch at n=" + std::to_string(n));
      if (h.at(mask) != 1)
        return fail(why, "flag h mismatch at n=" + std::to_string(n));
    }
    const auto cd = to_cd_index(ab_index_from_flag_h(h));
    if (!cd) return fail(why, "no cd-index at n=" + std::to_string(n));
    if (*cd != make_cd({{"c", 1}}).pow(n - 1))
      return fail(why, "cd-index is not c^" + std::to_string(n - 1));
  }
  return true;
}

// 2. Glued flag formulas: h_S = 2 - (-1)^|S|, ab-index = 2c^{n-1} - (a-b)^{n-1}.
bool glued_flag_formulas(std::string& why) {
  for (int n = 3; n <= 8; ++n) {
    const auto p = glued(n);
    const FlagVector h = flag_h_vector(flag_f_vector(p));
    for (std::uint32_t mask = 0; mask < h.mask_count(); ++mask) {
      const Int expected = std::popcount(mask) % 2 ? 3 : 1;
      if (h.at(mask) != expected)
        return fail(why, "flag h mismatch at n=" + std::to_string(n));
    }
    AbPolynomial expected = expand_cd(make_cd({{"c", 1}}).pow(n - 1));
    expected += expected;  // 2 c^{n-1}, expanded
    expected -= make_ab({{"a", 1}, {"b", -1}}).pow(n - 1);
    if (ab_index_from_flag_h(h) != expected)
      return fail(why, "ab-index mismatch at n=" + std::to_string(n));
  }
  return true;
}

// 3. Glued cd-index for odd rank 2k+1: equals 2c^{2k} - (c^2 - 2d)^k, checked
// against the reference noncommutative expansion; for k >= 2 every monomial
// present with an even number of d letters, other than c^{2k}, is negative.
bool glued_cd_index(std::string& why) {
  for (int k = 1; k <= 3; ++k) {
    const int n = 2 * k + 1;
    const auto cd = to_cd_index(
        ab_index_from_flag_h(flag_h_vector(flag_f_vector(glued(n)))));
    if (!cd) return fail(why, "no cd-index at k=" + std::to_string(k));

    oracle::NcPoly closed = oracle::nc(std::string(2 * k, 'c'), 2);
    closed = oracle::add(
        closed, oracle::scale(oracle::pow(oracle::add(oracle::nc("cc", 1),
                                                      oracle::nc("d", -2)),
                                          k),
                              -1));
    if (to_oracle_cd(*cd) != closed)
      return fail(why, "cd-index mismatch at k=" + std::to_string(k));
    if (oracle::expand_cd(to_oracle_cd(*cd)) !=
        oracle::expand_cd(closed))
      return fail(why, "ab expansion mismatch at k=" + std::to_string(k));

    if (k >= 2) {
      const std::string pure_c(2 * k, 'c');
      for (const auto& [word, coeff] : to_oracle_cd(*cd)) {
        const auto d_count = std::count(word.begin(), word.end(), 'd');
        if (word != pure_c && d_count % 2 == 0 && coeff >= 0)
          return fail(why, "non-negative even-d monomial " + word + " at k=" +
                               std::to_string(k));
      }
    }
  }
  return true;
}

// 4. Existence boundary: glued rank 4 and 5 exhaust with no valid assignment,
// glued rank 3 yields a witness that survives every conversion.
bool search_boundary(std::string& why) {
  const auto t4_start = Clock::now();
  const auto p4 = search_triple_assignment(glued(4));
  const double t4 = std::chrono::duration<double>(Clock::now() - t4_start).count();
  if (p4.status != SearchStatus::ProvenNone || !p4.exhausted)
    return fail(why, "glued rank 4 did not exhaust to none");
  if (t4 >= 1.0) return fail(why, "glued rank 4 took " + std::to_string(t4) + " s");

  const auto t5_start = Clock::now();
  const auto p5 = search_triple_assignment(glued(5));
  const double t5 = std::chrono::duration<double>(Clock::now() - t5_start).count();
  if (p5.status != SearchStatus::ProvenNone || !p5.exhausted)
    return fail(why, "glued rank 5 did not exhaust to none");
  if (t5 >= 60.0) return fail(why, "glued rank 5 took " + std::to_string(t5) + " s");

  const auto p3 = search_triple_assignment(glued(3));
  if (p3.status != SearchStatus::Found || !p3.witness)
    return fail(why, "glued rank 3 found no assignment");
  if (!is_triple_assignment(*p3.witness))
    return fail(why, "glued rank 3 witness fails validation");
  const Labeling lab = assignment_to_labeling(*p3.witness);
  if (!is_r_labeling(lab)) return fail(why, "glued rank 3 labeling is not an R-labeling");
  if (labeling_to_assignment(lab) != *p3.witness)
    return fail(why, "glued rank 3 labeling round-trip changed the witness");
  return true;
}

// 5. Local-to-global structure on butterflies: every rank-2-consistent
// candidate that is locally valid up to rank 3 has a breakpoint and is a
// triple assignment. Candidate spaces are 2^4 and 2^8.
bool butterfly_local_structure(std::string& why) {
  const std::uint64_t expected_space[] = {16, 256};
  for (int n = 3; n <= 4; ++n) {
    if (rank2_candidate_count(butterfly(n)) != expected_space[n - 3])
      return fail(why, "candidate space size mismatch at n=" + std::to_string(n));
    std::uint64_t seen = 0;
    std::uint64_t locally = 0;
    bool ok = true;
    std::string local_why;
    for_each_rank2_consistent(butterfly(n), [&](const TripleAssignment& tau) {
      ++seen;
      if (!locally_valid(tau, 3)) return true;
      ++locally;
      if (breakpoints(tau).empty()) {
        ok = false;
        local_why = "candidate without breakpoint at n=" + std::to_string(n);
        return false;
      }
      if (!is_triple_assignment(tau)) {
        ok = false;
        local_why = "locally valid candidate fails globally at n=" + std::to_string(n);
        return false;
      }
      return true;
    });
    if (!ok) return fail(why, local_why);
    if (seen != expected_space[n - 3])
      return fail(why, "enumeration size mismatch at n=" + std::to_string(n));
    if (locally == 0) return fail(why, "no locally valid candidates at n=" + std::to_string(n));
  }
  return true;
}

// 6. Descent distributions of found assignments equal the flag h-vector.
bool descent_consistency(std::string& why) {
  SearchOptions opts;
  opts.mode = SearchMode::EnumerateAll;
  opts.witness_limit = 128;
  for (int n = 2; n <= 6; ++n) {
    const auto t = butterfly(n);
    const FlagVector h = flag_h_vector(flag_f_vector(t));
    const auto out = search_triple_assignment(t, opts);
    if (out.status != SearchStatus::Found || out.witnesses.empty())
      return fail(why, "no assignments found on butterfly n=" + std::to_string(n));
    for (const auto& tau : out.witnesses)
      if (descent_distribution(tau) != h)
        return fail(why, "descent mismatch on butterfly n=" + std::to_string(n));
  }

  const auto p3 = glued(3);
  const FlagVector h3 = flag_h_vector(flag_f_vector(p3));
  const auto out3 = search_triple_assignment(p3, opts);
  if (out3.witnesses.empty()) return fail(why, "no assignments found on glued rank 3");
  for (const auto& tau : out3.witnesses)
    if (descent_distribution(tau) != h3)
      return fail(why, "descent mismatch on glued rank 3");

  // Boolean lattice with its standard labeling: each cover labeled by the
  // added digit, labels related by strict digit order.
  const auto b3 = boolean_lattice(3);
  std::map<std::pair<std::string, std::string>, std::string> labels;
  std::set<std::pair<std::string, std::string>> relation;
  std::set<std::string> digits;
  for (const auto& [x, y] : b3.covers()) {
    std::string added;
    for (char c : b3.id(y))
      if (b3.id(x).find(c) == std::string::npos) added.push_back(c);
    labels[{b3.id(x), b3.id(y)}] = added;
    digits.insert(added);
  }
  for (const auto& l : digits)
    for (const auto& m : digits)
      if (l < m) relation.insert({l, m});
  const Labeling lab = make_labeling(b3, labels, relation);
  if (!is_r_labeling(lab)) return fail(why, "boolean labeling is not an R-labeling");
  const auto tau = labeling_to_assignment(lab);
  if (descent_distribution(tau) != flag_h_vector(flag_f_vector(b3)))
    return fail(why, "descent mismatch on the boolean lattice");
  return true;
}

// 7. Eulerian parity across the families.
bool eulerian_parity(std::string& why) {
  for (int n = 1; n <= 8; ++n)
    if (!is_eulerian(butterfly(n)))
      return fail(why, "butterfly n=" + std::to_string(n) + " not eulerian");
  for (int k = 1; k <= 3; ++k)
    if (!is_eulerian(glued(2 * k + 1)))
      return fail(why, "glued rank " + std::to_string(2 * k + 1) + " not eulerian");
  for (int n : {4, 6})
    if (is_eulerian(glued(n)))
      return fail(why, "glued rank " + std::to_string(n) + " claims eulerian");
  return true;
}

// 8. Exact property suites; no wall-clock limit, zero tolerance.
bool property_suites(std::string& why) {
  // flag f <-> h inversion on random integer vectors
  std::mt19937 rng(882200);
  std::uniform_int_distribution<int> coeff(-100, 100);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 7;
    FlagVector f(n);
    for (std::uint32_t mask = 0; mask < f.mask_count(); ++mask) f.at(mask) = coeff(rng);
    if (flag_f_from_h(flag_h_vector(f)) != f)
      return fail(why, "flag f/h inversion failed");
  }

  // expand_cd / to_cd_index round-trip on random cd-polynomials of degree <= 7
  for (int trial = 0; trial < 40; ++trial) {
    CdPolynomial q;
    for (int deg = 0; deg <= 7; ++deg)
      for (const CdWord& w : cd_words_of_degree(deg))
        if (rng() % 2 == 0) q.add_term(w, coeff(rng));
    const auto back = to_cd_index(expand_cd(q));
    if (!back || *back != q) return fail(why, "cd round-trip failed");
  }

  // brute force vs. search on every fixture poset with <= 12 free variables
  const std::vector<GradedPoset> pool = {
      chain_poset(1), chain_poset(2), chain_poset(4), butterfly(2), butterfly(3),
      butterfly(4),   butterfly(5),   boolean_lattice(2), boolean_lattice(3),
      glued(3),       glued(4)};
  int compared = 0;
  for (const auto& p : pool) {
    SearchOptions probe;
    probe.max_nodes = 1;
    const auto probed = search_triple_assignment(p, probe);
    if (probed.stats.free_variables > 12) continue;
    SearchOptions opts;
    opts.mode = SearchMode::EnumerateAll;
    opts.witness_limit = std::uint64_t{1} << 20;
    const auto out = search_triple_assignment(p, opts);
    const auto brute =
        oracle::brute_force_assignments(p, std::uint64_t{1} << 32);
    if (out.count != brute.valid) return fail(why, "search/brute count mismatch");
    if (!out.exhausted) return fail(why, "search failed to exhaust a small poset");
    if (out.witnesses.size() != brute.kept.size())
      return fail(why, "search/brute witness list size mismatch");
    for (std::size_t i = 0; i < brute.kept.size(); ++i)
      if (letters_of(out.witnesses[i]) !=
          std::string(brute.kept[i].begin(), brute.kept[i].end()))
        return fail(why, "search/brute witness mismatch");
    ++compared;
  }
  // chains 1/2/4 (fully forced), butterflies 2 and 3, boolean 2 and 3
  if (compared != 7) return fail(why, "brute comparison pool shrank unexpectedly");

  // labeling <-> assignment round-trip on found witnesses
  for (const auto& p : {butterfly(2), butterfly(3), butterfly(4), butterfly(5),
                        glued(3), boolean_lattice(3)}) {
    const auto out = search_triple_assignment(p);
    if (!out.witness) return fail(why, "witness missing in round-trip pool");
    const Labeling lab = assignment_to_labeling(*out.witness);
    if (!is_r_labeling(lab)) return fail(why, "converted labeling is not an R-labeling");
    if (labeling_to_assignment(lab) != *out.witness)
      return fail(why, "labeling round-trip changed the assignment");
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"criterion-1", "butterfly closed forms f=2^|S|, h=1, cd=c^(n-1), n<=8", 5.0,
       butterfly_closed_forms},
      {"criterion-2", "glued flag h parity formula and ab-index, n<=8", 10.0,
       glued_flag_formulas},
      {"criterion-3", "glued cd-index vs reference expansion, negativity, k<=3", 5.0,
       glued_cd_index},
      {"criterion-4", "search: none on rank 4 and 5, witness on rank 3", 61.0,
       search_boundary},
      {"criterion-5", "locally valid butterfly candidates have breakpoints", 1.0,
       butterfly_local_structure},
      {"criterion-6", "descent distributions equal flag h-vectors", 5.0,
       descent_consistency},
      {"criterion-7", "eulerian parity across the families", 5.0, eulerian_parity},
      {"criterion-8", "exact property suites, no tolerance", 0.0, property_suites},
  };

  bool all_passed = true;
  for (const auto& c : criteria) {
    std::string why;
    const auto start = Clock::now();
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && c.limit_s > 0.0 && elapsed >= c.limit_s) {
      ok = false;
      why = "time limit " + std::to_string(c.limit_s) + " s exceeded";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << " - " << c.intent;
    if (!ok && !why.empty()) std::cout << " (" << why << ")";
    std::cout << " [" << static_cast<int>(elapsed * 1000) << " ms]\n";
    all_passed = all_passed && ok;
  }
  std::cout << (all_passed ? "acceptance: all criteria passed\n"
                           : "acceptance: FAILURES\n");
  return all_passed ? 0 : 1;
}
