#pragma once

#include <optional>
#include <string>

#include "lgcy/poly.hpp"

namespace lgcy {

struct PotentialOptions {
    // slice bound for the linear-algebra nondegeneracy test of non-invertible W
    std::size_t oracle_slice_bound = 4000;
};

// A polynomial accepted for the pipelines: full rank, quasihomogeneous with
// positive charges, and certified nondegenerate.
struct Potential {
    ExponentMatrix M;
    ChargeData charges;
    bool invertible = false;
    std::optional<AtomicDecomposition> atoms;  // set for invertible W
    std::string certificate;                   // how nondegeneracy was established

    int n() const { return M.n(); }
};

// Throws NotQuasihomogeneous, NonPositiveCharge, NotNondegenerate,
// InstanceTooLarge (non-invertible W too big for the rank test).
Potential make_potential(ExponentMatrix m, const PotentialOptions& opts = {});

}  // namespace lgcy
