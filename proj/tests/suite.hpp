#pragma once

#include <string>
#include <vector>

#include "lgcy/parse.hpp"
#include "lgcy/potential.hpp"
#include "lgcy/state_spaces.hpp"

namespace suite {

struct Instance {
    std::string name;
    std::string poly;
    std::string group;
    bool mirror = false;  // invertible with <J> inside G inside SL
};

// Fermat, loop and chain mixes, Gorenstein and not, with groups J, SL, Aut and in between.
inline const std::vector<Instance>& instances()
{
    static const std::vector<Instance> all = {
        {"fermat cubic / J", "x1^3 + x2^3 + x3^3", "J", true},
        {"fermat cubic / SL", "x1^3 + x2^3 + x3^3", "SL", true},
        {"fermat cubic / Aut", "x1^3 + x2^3 + x3^3", "Aut", false},
        {"elliptic chain / J", "x1^2*x2 + x2^2*x3 + x3^3", "J", true},
        {"elliptic chain / Aut", "x1^2*x2 + x2^2*x3 + x3^3", "Aut", false},
        {"loop cubic / J", "x1^2*x2 + x2^2*x3 + x3^2*x1", "J", true},
        {"loop cubic / Aut", "x1^2*x2 + x2^2*x3 + x3^2*x1", "Aut", false},
        {"quartic quartic quadric / J", "x1^4 + x2^4 + x3^2", "J", true},
        {"sextic cubic quadric / J", "x1^6 + x2^3 + x3^2", "J", true},
        {"chain curve / J", "x1^3*x2 + x2^2*x3 + x3^2", "J", true},
        {"loop plus quadric / J", "x1^3*x2 + x2^3*x1 + x3^2", "J", true},
        {"loop plus quadric / Aut", "x1^3*x2 + x2^3*x1 + x3^2", "Aut", false},
        {"fermat quartic / J", "x1^4 + x2^4 + x3^4 + x4^4", "J", true},
        {"fermat quartic / SL", "x1^4 + x2^4 + x3^4 + x4^4", "SL", true},
        {"fermat quartic / intermediate", "x1^4 + x2^4 + x3^4 + x4^4", "gens: J; 1/4,3/4,0,0", true},
        {"gorenstein K3 / J", "x1^6 + x2^4 + x3^4 + x4^3", "J", true},
        {"non-gorenstein K3 / J", "x1^4*x2 + x2^3*x3 + x3^3*x4 + x4^3", "J", true},
        {"transposed K3 / J", "x1^4 + x1*x2^3 + x2*x3^3 + x3*x4^3", "J", true},
        {"loop plus fermat K3 / J", "x1^3*x2 + x2^3*x1 + x3^4 + x4^4", "J", true},
        {"fermat quintic / J", "x1^5 + x2^5 + x3^5 + x4^5 + x5^5", "J", true},
        {"fermat quintic / intermediate", "x1^5 + x2^5 + x3^5 + x4^5 + x5^5", "gens: J; 1/5,4/5,0,0,0", true},
        {"chain quintic / J", "x1^4*x2 + x2^4*x3 + x3^4*x4 + x4^4*x5 + x5^5", "J", true},
        {"hesse cubic / J", "x1^3 + x2^3 + x3^3 + x1*x2*x3", "J", false},
        {"hesse cubic / Aut", "x1^3 + x2^3 + x3^3 + x1*x2*x3", "Aut", false},
        {"deformed quartic / J", "x1^4 + x2^4 + x3^4 + x4^4 + x1*x2*x3*x4", "J", false},
    };
    return all;
}

inline lgcy::LgPair pair_of(const Instance& in)
{
    lgcy::Potential p = lgcy::make_potential(lgcy::parse_polynomial(in.poly));
    lgcy::SymmetryGroup g = lgcy::parse_group(in.group, p.M, p.charges, true);
    return lgcy::make_lg_pair(std::move(p), std::move(g));
}

}  // namespace suite
