#pragma once

#include <string>

#include "json.hpp"
#include "rposet/flag.hpp"
#include "rposet/labeling.hpp"
#include "rposet/polynomial.hpp"
#include "rposet/poset.hpp"

namespace rposet {

// Order-preserving JSON throughout; the writers below emit keys in a fixed
// order and sort every list, so serialization is byte-stable.
using Json = nlohmann::ordered_json;

/// dump(2) plus a trailing newline; the canonical text form of every file
/// this library writes.
std::string to_canonical_string(const Json& j);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/// {"rank": n, "elements": [{"id", "rank"}...], "covers": [[x, y]...]} with
/// elements sorted by (rank, id) and covers sorted lexicographically.
Json poset_to_json(const GradedPoset& p);
GradedPoset poset_from_json(const Json& j);
GradedPoset load_poset_file(const std::string& path);

/// {"mask": count} with masks ascending, rendered as decimal strings.
Json flag_vector_to_json(const FlagVector& v);

/// {"word": coefficient} with words in lexicographic order; the empty word
/// serializes as "".
Json ab_to_json(const AbPolynomial& p);
Json cd_to_json(const CdPolynomial& p);
AbPolynomial ab_from_json(const Json& j);
CdPolynomial cd_from_json(const Json& j);

/// {"poset": <inline poset>, "values": [{"x","y","z","letter"}...]} in the
/// canonical triplet order. The reader also accepts a path string under
/// "poset".
Json assignment_to_json(const TripleAssignment& t);
TripleAssignment assignment_from_json(const Json& j);
TripleAssignment load_assignment_file(const std::string& path);

/// {"poset": ..., "labels": [{"x","y","label"}...], "relation": [[l, m]...]}
/// in cover order / sorted pair order.
Json labeling_to_json(const Labeling& l);
Labeling labeling_from_json(const Json& j);
Labeling load_labeling_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rposet
