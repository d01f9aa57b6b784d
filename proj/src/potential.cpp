#include "lgcy/potential.hpp"

#include <algorithm>

#include "lgcy/errors.hpp"
#include "lgcy/milnor.hpp"

namespace lgcy {

Potential make_potential(ExponentMatrix m, const PotentialOptions& opts)
{
    Potential p;
    if (m.n() == 0 || m.empty()) throw Error(ErrorCode::NotQuasihomogeneous, "empty polynomial");
    if (m.rank() < static_cast<std::size_t>(m.n()))
        throw Error(ErrorCode::NotQuasihomogeneous, "exponent matrix has rank below the number of variables");
    p.charges = charges(m);

    bool square = m.s() == static_cast<std::size_t>(m.n());
    if (square && m.unit_coefficients()) {
        p.atoms = atomic_decomposition(m);
        p.invertible = true;
        p.certificate = "atomic decomposition";
        auto q_inv = charges_from_inverse(m);
        if (q_inv != p.charges.q) throw std::logic_error("charge computations disagree");
    } else {
        const auto& w = p.charges.w;
        std::vector<std::int64_t> series;
        try {
            series = poincare_series(w, p.charges.d);
        } catch (const Error&) {
            throw Error(ErrorCode::NotNondegenerate, "Poincare series is not a polynomial");
        }
        OracleOptions o;
        o.max_slice_monomials = opts.oracle_slice_bound;
        auto dims = milnor_oracle(m, w, p.charges.d, o);
        series.resize(std::max(series.size(), dims.size()), 0);
        dims.resize(series.size(), 0);
        if (dims != series)
            throw Error(ErrorCode::NotNondegenerate, "Milnor algebra dimensions differ from the Poincare series");
        p.certificate = "Milnor algebra rank test";
    }
    p.M = std::move(m);
    return p;
}

}  // namespace lgcy
