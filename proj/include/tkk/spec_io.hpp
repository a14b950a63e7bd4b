#pragma once

// JSON spec files for algebras and triple systems, the named fixtures, and
// machine-readable export.
//
// Algebra table:
//   {"name": ..., "kind": "associative", "basis": ["1", "x"], "unit": ["1", "0"],
//    "products": [{"i": 1, "j": 1, "terms": [{"k": 0, "c": "1/2"}]}]}
// Builders:
//   {"construct": "scalar" | "fixture" | "matrix" | "sl" | "plus" |
//                 "truncated_free" | "grassmann" | "direct_sum", ...}
// Triple system:
//   {"name": ..., "basis": [...], "gamma": [{"u": 0, "v": 0, "w": 0, "terms": [{"t": 0, "c": "1"}]}]}

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tkk/tkk.hpp"

namespace tkk {

using Json = nlohmann::ordered_json;
using SpecObject = std::variant<Algebra, TripleSystem>;

/// scalar, dual, double, grassmann2, mat2, free2d2, free2d3.
const std::vector<std::string>& fixture_names();
/// Throws ParseError on an unknown name.
Algebra fixture(const std::string& name);

/// Parses spec text; `origin` names the source in error messages. Throws
/// ParseError (with line or field path) and ValidationError (with witness).
SpecObject parse_spec_text(const std::string& text, const std::string& origin = "<spec>");
SpecObject parse_spec(const std::string& path);

/// Table or builder object → Algebra. `path` prefixes field names in errors.
Algebra algebra_from_json(const Json& j, const std::string& path = "");
TripleSystem triple_from_json(const Json& j, const std::string& path = "");

/// A fixture name or a spec file that describes an algebra.
Algebra load_algebra(const std::string& name_or_path);

Json algebra_to_json(const Algebra& a);
Json triple_to_json(const TripleSystem& t);
Json graded_to_json(const GradedLie& k, Index kernel_dim_over_standard);
Json vector_to_json(const SparseVec& v);

}  // namespace tkk
