#include <bit>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rposet/io.hpp"
#include "rposet/search.hpp"
#include "rposet/verify.hpp"

namespace {

using rposet::Json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    rposet::write_text_file(out_path, text);
}

std::string subset_string(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

rposet::GradedPoset generate(const std::string& family, int n) {
  if (family == "butterfly") return rposet::butterfly(n);
  if (family == "glued") return rposet::glue(rposet::butterfly(n), rposet::butterfly(n));
  if (family == "boolean") return rposet::boolean_lattice(n);
  if (family == "chain") return rposet::chain_poset(n);
  throw CLI::ValidationError("family must be butterfly, glued, boolean, or chain");
}

int run_gen(const std::string& family, int n, const std::string& out_path) {
  emit(rposet::to_canonical_string(rposet::poset_to_json(generate(family, n))), out_path);
  return 0;
}

int run_flag(const std::string& poset_path, const std::string& format,
             const std::string& out_path) {
  const rposet::GradedPoset p = rposet::load_poset_file(poset_path);
  const rposet::FlagVector f = rposet::flag_f_vector(p);
  const rposet::FlagVector h = rposet::flag_h_vector(f);
  if (format == "table") {
    std::ostringstream out;
    out << "rank " << p.rank() << "\n";
    for (std::uint32_t mask = 0; mask < f.mask_count(); ++mask)
      out << "S=" << subset_string(mask) << " f=" << f.at(mask) << " h=" << h.at(mask)
          << "\n";
    emit(out.str(), out_path);
    return 0;
  }
  Json j;
  j["rank"] = p.rank();
  j["f"] = rposet::flag_vector_to_json(f);
  j["h"] = rposet::flag_vector_to_json(h);
  emit(rposet::to_canonical_string(j), out_path);
  return 0;
}

int run_index(const std::string& poset_path, const std::string& basis,
              const std::string& format, const std::string& out_path) {
  const rposet::GradedPoset p = rposet::load_poset_file(poset_path);
  const rposet::AbPolynomial psi =
      rposet::ab_index_from_flag_h(rposet::flag_h_vector(rposet::flag_f_vector(p)));
  const bool want_cd = basis == "cd";
  std::optional<rposet::CdPolynomial> cd;
  if (want_cd) cd = rposet::to_cd_index(psi);

  if (format == "table") {
    std::ostringstream out;
    if (!want_cd) {
      for (const auto& [w, c] : psi.terms()) out << (w.length ? w.str() : "1") << " " << c << "\n";
    } else if (cd) {
      for (const auto& [w, c] : cd->terms()) out << (w.length ? w.str() : "1") << " " << c << "\n";
    } else {
      out << "NotExpressible\n";
    }
    emit(out.str(), out_path);
    return want_cd && !cd ? 1 : 0;
  }
  Json j;
  j["basis"] = basis;
  if (!want_cd) {
    j["status"] = "ok";
    j["index"] = rposet::ab_to_json(psi);
  } else if (cd) {
    j["status"] = "ok";
    j["index"] = rposet::cd_to_json(*cd);
  } else {
    j["status"] = "NotExpressible";
    j["ab_index"] = rposet::ab_to_json(psi);
  }
  emit(rposet::to_canonical_string(j), out_path);
  return want_cd && !cd ? 1 : 0;
}

int run_search(const std::string& poset_path, const std::string& mode_name,
               std::uint64_t max_nodes, double timeout_s, int jobs, std::uint64_t limit,
               const std::string& format, const std::string& out_path) {
  const rposet::GradedPoset p = rposet::load_poset_file(poset_path);
  rposet::SearchOptions opts;
  opts.mode = mode_name == "count" ? rposet::SearchMode::CountAll
              : mode_name == "all" ? rposet::SearchMode::EnumerateAll
                                   : rposet::SearchMode::First;
  opts.max_nodes = max_nodes;
  opts.timeout_s = timeout_s;
  opts.jobs = jobs;
  opts.witness_limit = limit;
  const rposet::SearchOutcome outcome = rposet::search_triple_assignment(p, opts);

  if (format == "table") {
    std::ostringstream out;
    out << "status " << rposet::to_string(outcome.status) << "\n"
        << "mode " << rposet::to_string(opts.mode) << "\n"
        << "count " << outcome.count << "\n"
        << "exhausted " << (outcome.exhausted ? "true" : "false") << "\n"
        << "nodes " << outcome.stats.nodes << "\n"
        << "propagations " << outcome.stats.propagations << "\n"
        << "free_variables " << outcome.stats.free_variables << "\n";
    emit(out.str(), out_path);
  } else {
    Json j;
    j["status"] = rposet::to_string(outcome.status);
    j["mode"] = rposet::to_string(opts.mode);
    j["count"] = outcome.count;
    j["exhausted"] = outcome.exhausted;
    j["stats"] = Json{{"nodes", outcome.stats.nodes},
                      {"propagations", outcome.stats.propagations},
                      {"free_variables", outcome.stats.free_variables}};
    if (outcome.witness) {
      j["witness"] = rposet::assignment_to_json(*outcome.witness);
      j["labeling"] =
          rposet::labeling_to_json(rposet::assignment_to_labeling(*outcome.witness));
    }
    if (opts.mode == rposet::SearchMode::EnumerateAll) {
      Json witnesses = Json::array();
      for (const auto& w : outcome.witnesses)
        witnesses.push_back(rposet::assignment_to_json(w));
      j["witnesses"] = std::move(witnesses);
    }
    emit(rposet::to_canonical_string(j), out_path);
  }
  switch (outcome.status) {
    case rposet::SearchStatus::Found: return 0;
    case rposet::SearchStatus::ProvenNone: return 1;
    case rposet::SearchStatus::Inconclusive: return 2;
  }
  return 2;
}

int run_chains(const std::string& poset_path, const std::string& assignment_path,
               std::uint64_t limit, const std::string& format, const std::string& out_path) {
  const rposet::GradedPoset p = rposet::load_poset_file(poset_path);
  std::optional<rposet::TripleAssignment> tau;
  if (!assignment_path.empty()) {
    tau = rposet::load_assignment_file(assignment_path);
    if (!(tau->poset == p))
      throw rposet::PosetError(rposet::ErrorKind::ParseError,
                               "assignment poset differs from " + poset_path);
  }
  const std::vector<rposet::MaximalChain> chains = rposet::maximal_chains(p);

  auto chain_word = [&](const rposet::MaximalChain& c) {
    std::string word;
    for (std::size_t j = 0; j + 2 < c.size(); ++j)
      word += rposet::letter_char(tau->at(c[j], c[j + 1], c[j + 2]));
    return word;
  };

  if (format == "table") {
    std::ostringstream out;
    out << chains.size() << " maximal chains\n";
    std::uint64_t listed = 0;
    for (const auto& c : chains) {
      if (listed++ >= limit) break;
      bool first = true;
      for (int v : c) {
        if (!first) out << " < ";
        out << p.id(v);
        first = false;
      }
      if (tau) out << "  word=" << (c.size() > 2 ? chain_word(c) : "1");
      out << "\n";
    }
    emit(out.str(), out_path);
    return 0;
  }
  Json j;
  j["count"] = chains.size();
  j["listed"] = std::min<std::uint64_t>(limit, chains.size());
  Json listed = Json::array();
  std::uint64_t emitted = 0;
  for (const auto& c : chains) {
    if (emitted++ >= limit) break;
    Json entry;
    Json elements = Json::array();
    for (int v : c) elements.push_back(p.id(v));
    entry["elements"] = std::move(elements);
    if (tau) {
      const std::string word = chain_word(c);
      entry["word"] = word;
      Json descents = Json::array();
      for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == 'b') descents.push_back(i + 1);
      entry["descents"] = std::move(descents);
    }
    listed.push_back(std::move(entry));
  }
  j["chains"] = std::move(listed);
  if (tau) j["descent_distribution"] =
      rposet::flag_vector_to_json(rposet::descent_distribution(*tau));
  emit(rposet::to_canonical_string(j), out_path);
  return 0;
}

int run_verify(int max_n, std::uint64_t max_nodes, double timeout_s, int jobs,
               const std::string& format, const std::string& out_path) {
  rposet::ClaimSuiteOptions opts;
  opts.max_n = max_n;
  opts.max_nodes = max_nodes;
  opts.timeout_s = timeout_s;
  opts.jobs = jobs;
  const std::vector<rposet::VerificationRow> rows = rposet::run_claim_suite(opts);

  std::string jsonl;
  for (const rposet::VerificationRow& row : rows) jsonl += row.to_json(false).dump() + "\n";
  if (!out_path.empty()) rposet::write_text_file(out_path, jsonl);
  if (format == "json")
    std::cout << jsonl;
  else
    std::cout << rposet::claim_suite_table(rows);
  return rposet::claim_suite_exit_code(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded poset toolkit: flag vectors, ab/cd-indexes, R-labeling search"};
  app.require_subcommand(1);

  std::string family;
  std::string poset_path;
  std::string assignment_path;
  std::string out_path;
  std::string basis = "cd";
  std::string mode = "first";
  std::string format = "json";
  int n = 3;
  int max_n = 5;
  int jobs = 1;
  std::uint64_t max_nodes = 100'000'000;
  std::uint64_t limit = 64;
  double timeout_s = 300.0;

  CLI::App* gen = app.add_subcommand("gen", "generate a poset from a family");
  gen->add_option("family", family, "butterfly, glued, boolean, or chain")->required();
  gen->add_option("n", n, "rank parameter")->required();
  gen->add_option("--out", out_path, "write to this file instead of stdout");

  CLI::App* flag = app.add_subcommand("flag", "flag f- and h-vectors of a poset");
  flag->add_option("poset", poset_path, "poset JSON file")->required();
  flag->add_option("--out", out_path, "write to this file instead of stdout");
  flag->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* index = app.add_subcommand("index", "ab- or cd-index of a poset");
  index->add_option("poset", poset_path, "poset JSON file")->required();
  index->add_option("--basis", basis, "ab or cd (default cd)")
      ->check(CLI::IsMember({"ab", "cd"}));
  index->add_option("--out", out_path, "write to this file instead of stdout");
  index->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* search = app.add_subcommand("search", "decide triple-assignment existence");
  search->add_option("poset", poset_path, "poset JSON file")->required();
  search->add_option("--mode", mode, "first, count, or all (default first)")
      ->check(CLI::IsMember({"first", "count", "all"}));
  search->add_option("--max-nodes", max_nodes, "node budget (default 1e8)");
  search->add_option("--timeout-s", timeout_s, "time budget in seconds (default 300)");
  search->add_option("--jobs", jobs, "worker threads (default 1)");
  search->add_option("--limit", limit, "witnesses kept in mode all (default 64)");
  search->add_option("--out", out_path, "write to this file instead of stdout");
  search->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* chains = app.add_subcommand("chains", "list maximal chains");
  chains->add_option("poset", poset_path, "poset JSON file")->required();
  chains->add_option("--assignment", assignment_path,
                     "assignment JSON file; adds words and descents");
  chains->add_option("--limit", limit, "chains listed (default 64)");
  chains->add_option("--out", out_path, "write to this file instead of stdout");
  chains->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* verify = app.add_subcommand("verify-paper", "run the claim verification suite");
  verify->add_option("--max-n", max_n, "largest rank checked (default 5, minimum 3)")
      ->check(CLI::Range(3, 16));
  verify->add_option("--max-nodes", max_nodes, "node budget per search (default 1e8)");
  verify->add_option("--timeout-s", timeout_s, "time budget per search (default 300)");
  verify->add_option("--jobs", jobs, "worker threads (default 1)");
  verify->add_option("--out", out_path, "also write JSON lines to this file");
  verify->add_option("--format", format, "table (default) or json lines")
      ->check(CLI::IsMember({"json", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(family, n, out_path);
    if (flag->parsed()) return run_flag(poset_path, format, out_path);
    if (index->parsed()) return run_index(poset_path, basis, format, out_path);
    if (search->parsed())
      return run_search(poset_path, mode, max_nodes, timeout_s, jobs, limit, format, out_path);
    if (chains->parsed())
      return run_chains(poset_path, assignment_path, limit, format, out_path);
    if (verify->parsed())
      return run_verify(max_n, max_nodes, timeout_s, jobs,
                        verify->count("--format") ? format : "table", out_path);
  } catch (const rposet::PosetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
