#pragma once

#include <string>

#include <json.hpp>

#include "lgcy/diagram.hpp"
#include "lgcy/mirror.hpp"
#include "lgcy/state_spaces.hpp"

namespace lgcy {

using json = nlohmann::json;

json to_json(const Rational& r);  // "num/den"
json to_json(const PhaseVector& v);
json to_json(const BigradedDims& dims);  // [[p, q, mult], ...]
json to_json(const ChargeData& c);
json to_json(const Sector& s);
json to_json(const std::vector<DimDiff>& diffs);
json to_json(const DiagramCheck& check, const PhaseVector& coset);
json to_json(const MirrorReport& r);

// One line per sector with its nonzero bidegrees.
std::string sector_table(const StateSpace& space);
std::string dims_line(const BigradedDims& dims);

// Text diamond of an integrally graded table for a variety of the given dimension.
std::string hodge_diamond(const BigradedDims& dims, int dimension);

std::string diagram_svg(const Diagram& diagram, const std::string& title);

}  // namespace lgcy
