#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgcy/poly.hpp"
#include "lgcy/symmetry.hpp"

namespace lgcy {

// Terms separated by '+' (or '-'); a term is "[coef*] x<i>[^e] [* x<j>[^e] ...]".
// The '*' between factors may be omitted ("x1^2x2"). Variables must be
// x1..xN without gaps. Throws SyntaxError, DuplicateMonomial, UnknownVariable.
ExponentMatrix parse_polynomial(std::string_view text);
std::string print_polynomial(const ExponentMatrix& m);

struct GroupSpec {
    enum class Kind { J, SL, Aut, Generators } kind = Kind::J;
    std::vector<PhaseVector> generators;  // Kind::Generators
    bool includes_j = false;              // the token J appeared in the generator list
};

// "J" | "SL" | "Aut" | "gens: a/b,c/d,...; e/f,..." (entries of a generator may
// also be the token J). Throws SyntaxError.
GroupSpec parse_group_spec(std::string_view text, std::size_t n);
std::string print_group_spec(const GroupSpec& spec);

// Resolves a group spec against W; throws JNotContained if the result misses J
// and require_j is set.
SymmetryGroup parse_group(std::string_view text, const ExponentMatrix& m, const ChargeData& c, bool require_j = true,
                          std::size_t max_order = kDefaultMaxGroupOrder);
SymmetryGroup resolve_group(const GroupSpec& spec, const ExponentMatrix& m, const ChargeData& c, bool require_j = true,
                            std::size_t max_order = kDefaultMaxGroupOrder);

}  // namespace lgcy
