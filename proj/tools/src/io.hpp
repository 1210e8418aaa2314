#pragma once

// JSON and text forms of scalars, free-algebra elements and solved basis
// elements. Scalars are written in the library's text form ("v^2 - 3*v^-1",
// "(1)/(v^2 - v^-2)") and read back by parse_rat.

#include <json.hpp>
#include <string>

#include "qschubert/canon.hpp"

namespace qschubert::cli {

using nlohmann::json;

Laurent parse_laurent(const std::string& text);
Rat parse_rat(const std::string& text);

// 1-based lists
json word_json(const std::vector<int>& letters);
std::vector<int> word_from_json(const json& j);

json nc_to_json(const NcElement& x);
NcElement nc_from_json(const Algebra* alg, const json& j);

json pbw_to_json(const PBWVector& v);
PBWVector pbw_from_json(const json& j);

// {"degree", "frame", "a", "pbw", "string", "label", "norm", "terms"?}
json canonical_to_json(const PBWFrame& frame, const CanonicalElement& b);

// Reads {"degree", "terms"} or {"degree", "frame", "pbw"}.
Element element_from_json(FrameCache& cache, const json& j);

}  // namespace qschubert::cli
