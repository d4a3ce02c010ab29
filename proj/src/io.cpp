#include "rposet/io.hpp"

#include <fstream>
#include <sstream>

namespace rposet {

namespace {
[[noreturn]] void parse_fail(const std::string& message) {
  throw PosetError(ErrorKind::ParseError, message);
}
}  // namespace

std::string to_canonical_string(const Json& j) { return j.dump(2) + "\n"; }

Json int_to_json(const Int& v) {
  // numbers while they are exactly representable everywhere, strings beyond
  static const Int kLimit = Int(1) << 53;
  if (v > -kLimit && v < kLimit) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  parse_fail("expected an integer or a decimal string");
}

Json poset_to_json(const GradedPoset& p) {
  Json j;
  j["rank"] = p.rank();
  Json elements = Json::array();
  for (int v = 0; v < p.size(); ++v)
    elements.push_back(Json{{"id", p.id(v)}, {"rank", p.rank_of(v)}});
  j["elements"] = std::move(elements);
  Json covers = Json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back(Json::array({p.id(x), p.id(y)}));
  j["covers"] = std::move(covers);
  return j;
}

GradedPoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    parse_fail("poset object needs \"elements\" and \"covers\"");
  std::vector<std::pair<std::string, int>> elements;
  for (const Json& e : j.at("elements")) {
    if (!e.is_object() || !e.contains("id") || !e.contains("rank"))
      parse_fail("poset element needs \"id\" and \"rank\"");
    elements.emplace_back(e.at("id").get<std::string>(), e.at("rank").get<int>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const Json& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) parse_fail("cover entries are [lower, upper] pairs");
    covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
  }
  GradedPoset p = GradedPoset::from_cover_relations(elements, covers);
  if (j.contains("rank") && j.at("rank").get<int>() != p.rank())
    parse_fail("declared rank " + j.at("rank").dump() + " does not match the elements");
  return p;
}

GradedPoset load_poset_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
  return poset_from_json(j);
}

Json flag_vector_to_json(const FlagVector& v) {
  Json j = Json::object();
  for (std::uint32_t mask = 0; mask < v.mask_count(); ++mask)
    j[std::to_string(mask)] = int_to_json(v.at(mask));
  return j;
}

namespace {
template <typename W>
Json poly_to_json(const Polynomial<W>& p) {
  Json j = Json::object();
  for (const auto& [w, c] : p.terms()) j[w.str()] = int_to_json(c);
  return j;
}

template <typename W>
Polynomial<W> poly_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("polynomial must be a word -> coefficient object");
  Polynomial<W> p;
  for (const auto& [word, coeff] : j.items()) p.add_term(W::parse(word), int_from_json(coeff));
  return p;
}
}  // namespace

Json ab_to_json(const AbPolynomial& p) { return poly_to_json(p); }
Json cd_to_json(const CdPolynomial& p) { return poly_to_json(p); }
AbPolynomial ab_from_json(const Json& j) { return poly_from_json<AbWord>(j); }
CdPolynomial cd_from_json(const Json& j) { return poly_from_json<CdWord>(j); }

Json assignment_to_json(const TripleAssignment& t) {
  Json j;
  j["poset"] = poset_to_json(t.poset);
  Json values = Json::array();
  for (std::size_t i = 0; i < t.trips.size(); ++i) {
    const Triplet& trip = t.trips[i];
    values.push_back(Json{{"x", t.poset.id(trip.x)},
                          {"y", t.poset.id(trip.y)},
                          {"z", t.poset.id(trip.z)},
                          {"letter", std::string(1, letter_char(t.values[i]))}});
  }
  j["values"] = std::move(values);
  return j;
}

TripleAssignment assignment_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("values"))
    parse_fail("assignment object needs \"poset\" and \"values\"");
  const Json& pj = j.at("poset");
  const GradedPoset p =
      pj.is_string() ? load_poset_file(pj.get<std::string>()) : poset_from_json(pj);
  std::map<Triplet, Letter> values;
  for (const Json& e : j.at("values")) {
    if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("z") ||
        !e.contains("letter"))
      parse_fail("assignment entries need \"x\", \"y\", \"z\", \"letter\"");
    const std::string letter = e.at("letter").get<std::string>();
    if (letter != "a" && letter != "b") parse_fail("letter must be \"a\" or \"b\"");
    const Triplet t{p.index_of(e.at("x").get<std::string>()),
                    p.index_of(e.at("y").get<std::string>()),
                    p.index_of(e.at("z").get<std::string>())};
    if (!values.emplace(t, letter == "a" ? Letter::A : Letter::B).second)
      parse_fail("duplicate triplet in assignment");
  }
  try {
    return make_assignment(p, values);
  } catch (const std::invalid_argument& e) {
    parse_fail(e.what());
  }
}

TripleAssignment load_assignment_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
  return assignment_from_json(j);
}

Json labeling_to_json(const Labeling& l) {
  Json j;
  j["poset"] = poset_to_json(l.poset);
  Json labels = Json::array();
  for (std::size_t i = 0; i < l.labels.size(); ++i) {
    const auto& [x, y] = l.poset.covers()[i];
    labels.push_back(
        Json{{"x", l.poset.id(x)}, {"y", l.poset.id(y)}, {"label", l.labels[i]}});
  }
  j["labels"] = std::move(labels);
  Json relation = Json::array();
  for (const auto& [lo, hi] : l.relation) relation.push_back(Json::array({lo, hi}));
  j["relation"] = std::move(relation);
  return j;
}

Labeling labeling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("labels") ||
      !j.contains("relation"))
    parse_fail("labeling object needs \"poset\", \"labels\", \"relation\"");
  const Json& pj = j.at("poset");
  const GradedPoset p =
      pj.is_string() ? load_poset_file(pj.get<std::string>()) : poset_from_json(pj);
  std::map<std::pair<std::string, std::string>, std::string> labels;
  for (const Json& e : j.at("labels")) {
    if (!e.is_object() || !e.contains("x") || !e.contains("y") || !e.contains("label"))
      parse_fail("label entries need \"x\", \"y\", \"label\"");
    labels[{e.at("x").get<std::string>(), e.at("y").get<std::string>()}] =
        e.at("label").get<std::string>();
  }
  std::set<std::pair<std::string, std::string>> relation;
  for (const Json& r : j.at("relation")) {
    if (!r.is_array() || r.size() != 2) parse_fail("relation entries are [label, label] pairs");
    relation.insert({r.at(0).get<std::string>(), r.at(1).get<std::string>()});
  }
  try {
    return make_labeling(p, labels, relation);
  } catch (const std::invalid_argument& e) {
    parse_fail(e.what());
  }
}

Labeling load_labeling_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
  return labeling_from_json(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_fail("cannot open " + path + " for writing");
  out << text;
  if (!out) parse_fail("write to " + path + " failed");
}

}  // namespace rposet
