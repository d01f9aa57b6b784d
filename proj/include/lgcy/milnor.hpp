#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lgcy/cyclotomic.hpp"
#include "lgcy/poly.hpp"
#include "lgcy/symmetry.hpp"

namespace lgcy {

// prod_j (1 - t^{d - w_j}) / (1 - t^{w_j}); index = weighted degree.
std::vector<std::int64_t> poincare_series(const std::vector<std::int64_t>& w, std::int64_t d);

// Trace of h on the graded Milnor ring of a nondegenerate polynomial with the
// given weights: prod_j (1 - l_j^{-1} t^{d - w_j}) / (1 - l_j t^{w_j}),
// l_j = x^{e * theta_j}. `theta` has one phase per weight.
CycloPoly equivariant_trace_series(const std::vector<std::int64_t>& w, std::int64_t d,
                                   const std::vector<Rational>& theta, int e);

struct GradedInvariantDims {
    std::int64_t d = 1;
    std::int64_t weight_sum = 0;  // sum of w_j over the fixed coordinates
    std::int64_t top = 0;         // socle degree sum (d - 2 w_j)
    std::vector<std::int64_t> by_degree;  // index k = 0..top

    // c = (k + weight_sum) / d
    Rational charge(std::int64_t k) const;
    std::map<Rational, std::int64_t> by_charge() const;  // nonzero entries only
    std::int64_t total() const;
};

// Dimensions of the G-invariant part of the relative cohomology of W restricted
// to `fixed`: average over h in G of det(h|fixed) * trace(h | Milnor ring).
GradedInvariantDims invariant_dims(const ChargeData& c, const SymmetryGroup& g, const std::vector<int>& fixed);

std::pair<Rational, Rational> hodge_type(int n_gamma, const Rational& c);

inline constexpr std::size_t kDefaultOracleSliceBound = 300;

struct OracleOptions {
    std::size_t max_slice_monomials = kDefaultOracleSliceBound;
    std::int64_t max_degree = -1;  // default: socle degree plus the largest weight
    // when set, only classes x^a dx whose character is trivial on these phases
    std::vector<PhaseVector> invariant_under;
};

// Graded dimensions of C[x]/(dW) by exact rank computation over Q; throws
// InstanceTooLarge when a degree slice exceeds the bound.
std::vector<std::int64_t> milnor_oracle(const ExponentMatrix& m, const std::vector<std::int64_t>& w, std::int64_t d,
                                        const OracleOptions& opts = {});

// Is the weighted-degree slice count of every degree up to the socle degree within the bound?
bool oracle_feasible(const std::vector<std::int64_t>& w, std::int64_t d, std::size_t max_slice_monomials);

}  // namespace lgcy
