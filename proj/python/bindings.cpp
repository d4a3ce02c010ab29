#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rposet/flag.hpp"
#include "rposet/io.hpp"
#include "rposet/labeling.hpp"
#include "rposet/polynomial.hpp"
#include "rposet/poset.hpp"
#include "rposet/search.hpp"
#include "rposet/verify.hpp"

namespace py = pybind11;
using namespace rposet;

namespace {

// cpp_int round-trips through decimal strings so Python sees true ints.
py::int_ int_to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Int int_from_py(py::handle h) {
  return Int(py::str(h).cast<std::string>());
}

Letter letter_from_str(const std::string& s) {
  if (s == "a") return Letter::A;
  if (s == "b") return Letter::B;
  throw py::value_error("letter must be \"a\" or \"b\", got \"" + s + "\"");
}

std::string letter_to_str(Letter l) { return std::string(1, letter_char(l)); }

std::vector<Letter> letters_from_py(const std::vector<std::string>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const auto& s : in) out.push_back(letter_from_str(s));
  return out;
}

py::tuple triplet_to_py(const Triplet& t) { return py::make_tuple(t.x, t.y, t.z); }

template <class W>
py::dict poly_to_py(const Polynomial<W>& p) {
  py::dict d;
  for (const auto& [w, c] : p.terms()) d[py::str(w.str())] = int_to_py(c);
  return d;
}

AbPolynomial ab_from_py(const py::dict& d) {
  std::vector<std::pair<std::string, Int>> terms;
  for (auto item : d)
    terms.emplace_back(item.first.cast<std::string>(), int_from_py(item.second));
  return make_ab(terms);
}

CdPolynomial cd_from_py(const py::dict& d) {
  std::vector<std::pair<std::string, Int>> terms;
  for (auto item : d)
    terms.emplace_back(item.first.cast<std::string>(), int_from_py(item.second));
  return make_cd(terms);
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case nlohmann::detail::value_t::null:
      return py::none();
    case nlohmann::detail::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::detail::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::detail::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::detail::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::detail::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::detail::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    default: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
  }
}

SearchMode mode_from_str(const std::string& s) {
  if (s == "first") return SearchMode::First;
  if (s == "count") return SearchMode::CountAll;
  if (s == "all") return SearchMode::EnumerateAll;
  throw py::value_error("mode must be \"first\", \"count\", or \"all\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded posets, flag vectors, cd-indexes, and the triple-assignment search";

  py::register_exception<PosetError>(m, "PosetError");

  py::class_<GradedPoset>(m, "GradedPoset")
      .def_static("from_cover_relations", &GradedPoset::from_cover_relations,
                  py::arg("ranked_elements"), py::arg("cover_pairs"))
      .def_property_readonly("rank", &GradedPoset::rank)
      .def_property_readonly("size", &GradedPoset::size)
      .def("ids", [](const GradedPoset& p) { return p.ids(); })
      .def("id", [](const GradedPoset& p, int v) { return p.id(v); }, py::arg("v"))
      .def("rank_of", &GradedPoset::rank_of, py::arg("v"))
      .def("index_of", &GradedPoset::index_of, py::arg("id"))
      .def("contains", &GradedPoset::contains, py::arg("id"))
      .def_property_readonly("bottom", &GradedPoset::bottom)
      .def_property_readonly("top", &GradedPoset::top)
      .def("up_covers", [](const GradedPoset& p, int v) { return p.up_covers(v); },
           py::arg("v"))
      .def("down_covers", [](const GradedPoset& p, int v) { return p.down_covers(v); },
           py::arg("v"))
      .def("covers", [](const GradedPoset& p) { return p.covers(); })
      .def("leq", &GradedPoset::leq, py::arg("x"), py::arg("y"))
      .def("closed_interval_elements", &GradedPoset::closed_interval_elements,
           py::arg("x"), py::arg("y"))
      .def("rank_profile", &GradedPoset::rank_profile)
      .def(py::self == py::self)
      .def("__repr__", [](const GradedPoset& p) {
        return "<GradedPoset rank=" + std::to_string(p.rank()) +
               " size=" + std::to_string(p.size()) + ">";
      });

  m.def("butterfly", &butterfly, py::arg("n"));
  m.def("boolean_lattice", &boolean_lattice, py::arg("n"));
  m.def("chain_poset", &chain_poset, py::arg("n"));
  m.def("glue", &glue, py::arg("left"), py::arg("right"));
  m.def("glued", [](int n) { return glue(butterfly(n), butterfly(n)); }, py::arg("n"),
        "Two rank-n butterflies identified at their bounds.");

  py::class_<Interval>(m, "Interval")
      .def_readonly("poset", &Interval::poset)
      .def_readonly("to_parent", &Interval::to_parent);
  m.def("interval",
        [](const GradedPoset& p, int x, int y) { return interval(p, x, y); },
        py::arg("p"), py::arg("x"), py::arg("y"));

  m.def("maximal_chains", &maximal_chains, py::arg("p"));
  m.def("maximal_chains_between", &maximal_chains_between, py::arg("p"), py::arg("x"),
        py::arg("y"));
  m.def("triplets", [](const GradedPoset& p) {
    py::list out;
    for (const Triplet& t : triplets(p)) out.append(triplet_to_py(t));
    return out;
  }, py::arg("p"));
  m.def("is_eulerian", &is_eulerian, py::arg("p"));
  m.def("are_isomorphic", &are_isomorphic, py::arg("p"), py::arg("q"));
  m.def("chain_ids", &chain_ids, py::arg("p"), py::arg("chain"));

  py::class_<FlagVector>(m, "FlagVector")
      .def_property_readonly("n", &FlagVector::n)
      .def("__len__", &FlagVector::mask_count)
      .def("__getitem__",
           [](const FlagVector& v, std::uint32_t mask) {
             if (mask >= v.mask_count()) throw py::index_error();
             return int_to_py(v.at(mask));
           })
      .def("to_dict",
           [](const FlagVector& v) {
             py::dict d;
             for (std::uint32_t mask = 0; mask < v.mask_count(); ++mask)
               d[py::int_(mask)] = int_to_py(v.at(mask));
             return d;
           })
      .def(py::self == py::self)
      .def("__repr__", [](const FlagVector& v) {
        return "<FlagVector n=" + std::to_string(v.n()) + ">";
      });

  m.def("flag_f_vector", &flag_f_vector, py::arg("p"));
  m.def("flag_h_vector", &flag_h_vector, py::arg("f"));
  m.def("flag_f_from_h", &flag_f_from_h, py::arg("h"));
  m.def("sum_entries", [](const FlagVector& v) { return int_to_py(sum_entries(v)); },
        py::arg("v"));

  m.def("ab_index", [](const GradedPoset& p) {
    return poly_to_py(ab_index_from_flag_h(flag_h_vector(flag_f_vector(p))));
  }, py::arg("p"), "The ab-index as {word: coefficient}.");
  m.def("cd_index", [](const GradedPoset& p) -> py::object {
    auto cd = to_cd_index(ab_index_from_flag_h(flag_h_vector(flag_f_vector(p))));
    if (!cd) return py::none();
    return poly_to_py(*cd);
  }, py::arg("p"), "The cd-index as {word: coefficient}, or None when the "
                    "ab-index is not a cd-polynomial.");
  m.def("ab_index_from_flag_h",
        [](const FlagVector& h) { return poly_to_py(ab_index_from_flag_h(h)); },
        py::arg("h"));
  m.def("expand_cd", [](const py::dict& q) { return poly_to_py(expand_cd(cd_from_py(q))); },
        py::arg("q"));
  m.def("to_cd_index", [](const py::dict& p) -> py::object {
    auto cd = to_cd_index(ab_from_py(p));
    if (!cd) return py::none();
    return poly_to_py(*cd);
  }, py::arg("p"));
  m.def("cd_words_of_degree", [](int deg) {
    std::vector<std::string> out;
    for (const CdWord& w : cd_words_of_degree(deg)) out.push_back(w.str());
    return out;
  }, py::arg("deg"));

  py::class_<TripleAssignment>(m, "TripleAssignment")
      .def_readonly("poset", &TripleAssignment::poset)
      .def_property_readonly("triplets",
           [](const TripleAssignment& t) {
             py::list out;
             for (const Triplet& trip : t.trips) out.append(triplet_to_py(trip));
             return out;
           })
      .def_property_readonly("letters",
           [](const TripleAssignment& t) {
             std::vector<std::string> out;
             for (Letter l : t.values) out.push_back(letter_to_str(l));
             return out;
           })
      .def("at",
           [](const TripleAssignment& t, int x, int y, int z) {
             return letter_to_str(t.at(x, y, z));
           },
           py::arg("x"), py::arg("y"), py::arg("z"))
      .def(py::self == py::self)
      .def("__repr__", [](const TripleAssignment& t) {
        return "<TripleAssignment triplets=" + std::to_string(t.trips.size()) + ">";
      });

  m.def("make_assignment",
        [](const GradedPoset& p, const std::vector<std::string>& letters) {
          return make_assignment(p, letters_from_py(letters));
        },
        py::arg("p"), py::arg("letters"),
        "Letters follow the canonical triplet order of p.");
  m.def("is_rising", &is_rising, py::arg("t"), py::arg("chain"));
  m.def("rising_chain_status", [](const TripleAssignment& t, int x, int y) {
    const RisingStatus s = rising_chain_status(t, x, y);
    py::dict d;
    d["kind"] = s.kind == RisingStatus::Zero ? "zero"
                : s.kind == RisingStatus::Unique ? "unique" : "many";
    d["chain"] = s.chain ? py::cast(*s.chain) : py::object(py::none());
    return d;
  }, py::arg("t"), py::arg("x"), py::arg("y"));
  m.def("is_triple_assignment", &is_triple_assignment, py::arg("t"));
  m.def("check_triple_assignment", [](const TripleAssignment& t) {
    const AssignmentCheck c = check_triple_assignment(t);
    py::dict d;
    d["ok"] = c.ok;
    d["violation"] = c.violation ? py::make_tuple(c.violation->first, c.violation->second)
                                 : py::object(py::none());
    d["status"] = c.status == RisingStatus::Zero ? "zero"
                  : c.status == RisingStatus::Unique ? "unique" : "many";
    return d;
  }, py::arg("t"));
  m.def("breakpoints", &breakpoints, py::arg("t"));
  m.def("locally_valid", &locally_valid, py::arg("t"), py::arg("max_rank") = 3);
  m.def("descent_distribution", &descent_distribution, py::arg("t"));
  m.def("ab_index_from_assignment",
        [](const TripleAssignment& t) { return poly_to_py(ab_index_from_assignment(t)); },
        py::arg("t"));
  m.def("for_each_rank2_consistent",
        [](const GradedPoset& p, const std::function<bool(const TripleAssignment&)>& fn) {
          for_each_rank2_consistent(p, fn);
        },
        py::arg("p"), py::arg("fn"),
        "Calls fn on every rank-2-consistent assignment; return False to stop.");
  m.def("rank2_candidate_count", &rank2_candidate_count, py::arg("p"));

  py::class_<Labeling>(m, "Labeling")
      .def_readonly("poset", &Labeling::poset)
      .def_readonly("labels", &Labeling::labels)
      .def_readonly("relation", &Labeling::relation)
      .def(py::self == py::self);
  m.def("make_labeling", &make_labeling, py::arg("p"), py::arg("labels"),
        py::arg("relation"));
  m.def("labeling_to_assignment", &labeling_to_assignment, py::arg("l"));
  m.def("assignment_to_labeling", &assignment_to_labeling, py::arg("t"));
  m.def("is_r_labeling", &is_r_labeling, py::arg("l"));

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_property_readonly("status",
           [](const SearchOutcome& o) { return std::string(to_string(o.status)); })
      .def_property_readonly("witness",
           [](const SearchOutcome& o) -> py::object {
             return o.witness ? py::cast(*o.witness) : py::object(py::none());
           })
      .def_readonly("witnesses", &SearchOutcome::witnesses)
      .def_readonly("count", &SearchOutcome::count)
      .def_readonly("exhausted", &SearchOutcome::exhausted)
      .def_property_readonly("stats",
           [](const SearchOutcome& o) {
             py::dict d;
             d["nodes"] = o.stats.nodes;
             d["propagations"] = o.stats.propagations;
             d["free_variables"] = o.stats.free_variables;
             d["elapsed_s"] = o.stats.elapsed_s;
             return d;
           })
      .def("__repr__", [](const SearchOutcome& o) {
        return "<SearchOutcome " + std::string(to_string(o.status)) +
               " count=" + std::to_string(o.count) + ">";
      });

  m.def("search",
        [](const GradedPoset& p, const std::string& mode, std::uint64_t max_nodes,
           double timeout_s, int jobs, std::uint64_t witness_limit) {
          SearchOptions opts;
          opts.mode = mode_from_str(mode);
          opts.max_nodes = max_nodes;
          opts.timeout_s = timeout_s;
          opts.jobs = jobs;
          opts.witness_limit = witness_limit;
          py::gil_scoped_release release;
          return search_triple_assignment(p, opts);
        },
        py::arg("p"), py::arg("mode") = "first",
        py::arg("max_nodes") = std::uint64_t{100'000'000},
        py::arg("timeout_s") = 300.0, py::arg("jobs") = 1,
        py::arg("witness_limit") = std::uint64_t{64},
        "Backtracking search for a valid triple assignment.");

  m.def("verify_claims",
        [](int max_n, std::uint64_t max_nodes, double timeout_s, int jobs) {
          ClaimSuiteOptions opts;
          opts.max_n = max_n;
          opts.max_nodes = max_nodes;
          opts.timeout_s = timeout_s;
          opts.jobs = jobs;
          std::vector<VerificationRow> rows;
          {
            py::gil_scoped_release release;
            rows = run_claim_suite(opts);
          }
          py::list out;
          for (const VerificationRow& row : rows) out.append(json_to_py(row.to_json(false)));
          py::dict d;
          d["exit_code"] = claim_suite_exit_code(rows);
          d["table"] = claim_suite_table(rows);
          d["rows"] = out;
          return d;
        },
        py::arg("max_n") = 5, py::arg("max_nodes") = std::uint64_t{100'000'000},
        py::arg("timeout_s") = 300.0, py::arg("jobs") = 1,
        "Runs the bundled claim suite; rows mirror the CLI's verify-paper output.");

  m.def("poset_to_json",
        [](const GradedPoset& p) { return to_canonical_string(poset_to_json(p)); },
        py::arg("p"));
  m.def("poset_from_json",
        [](const std::string& text) { return poset_from_json(Json::parse(text)); },
        py::arg("text"));
  m.def("load_poset_file", &load_poset_file, py::arg("path"));
  m.def("flag_vector_to_json",
        [](const FlagVector& v) { return to_canonical_string(flag_vector_to_json(v)); },
        py::arg("v"));
  m.def("assignment_to_json",
        [](const TripleAssignment& t) { return to_canonical_string(assignment_to_json(t)); },
        py::arg("t"));
  m.def("assignment_from_json",
        [](const std::string& text) { return assignment_from_json(Json::parse(text)); },
        py::arg("text"));
  m.def("load_assignment_file", &load_assignment_file, py::arg("path"));
  m.def("labeling_to_json",
        [](const Labeling& l) { return to_canonical_string(labeling_to_json(l)); },
        py::arg("l"));
  m.def("labeling_from_json",
        [](const std::string& text) { return labeling_from_json(Json::parse(text)); },
        py::arg("text"));
}
