#pragma once

#include <string>
#include <vector>

#include "lgcy/linalg.hpp"
#include "lgcy/poly.hpp"
#include "lgcy/state_spaces.hpp"
#include "lgcy/symmetry.hpp"

namespace lgcy {

// Rows of an invertible M reordered so that row i is the monomial headed by x_i.
IntMatrix head_ordered_matrix(const ExponentMatrix& m);

// W^T: variable i of W^T stands for the monomial of W headed by x_i.
ExponentMatrix transpose(const ExponentMatrix& m);

struct InvariantLattice {
    IntMatrix basis;  // rows
};

// {a in Z^N : sum_j a_j theta_j(h) in Z for all h in G}
InvariantLattice invariant_lattice(const SymmetryGroup& g);
bool in_lattice(const SymmetryGroup& g, const std::vector<std::int64_t>& a);

SymmetryGroup dual_group(const ExponentMatrix& m, const SymmetryGroup& g,
                         std::size_t max_order = kDefaultMaxGroupOrder);

struct MirrorTable {
    std::string name;  // "CR" or "FJRW"
    BigradedDims original;
    BigradedDims mirror;
    std::vector<DimDiff> diffs;  // left = h^{p,q}(W,G), right = h^{N-2-p,q}(W^T,G^T)
};

struct MirrorReport {
    bool ok = false;
    ExponentMatrix transposed;
    ChargeData transposed_charges;
    SymmetryGroup dual;
    bool j_in_dual = false;
    bool dual_in_sl = false;
    bool involution = false;  // (G^T)^T = G
    std::vector<MirrorTable> tables;
};

// Requires invertible nondegenerate CY W with <J> in G in SL_W; throws NotApplicable otherwise.
MirrorReport verify_mirror(const LgPair& pair, std::size_t max_order = kDefaultMaxGroupOrder);

// h^{p,q} -> h^{N-2-p,q}
BigradedDims mirror_rotate(const BigradedDims& dims, int n);

}  // namespace lgcy
