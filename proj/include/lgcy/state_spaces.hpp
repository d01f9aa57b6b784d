#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "lgcy/milnor.hpp"
#include "lgcy/potential.hpp"
#include "lgcy/symmetry.hpp"

namespace lgcy {

using Bidegree = std::pair<Rational, Rational>;

class BigradedDims {
public:
    void add(const Rational& p, const Rational& q, std::int64_t mult);
    std::int64_t at(const Rational& p, const Rational& q) const;
    const std::map<Bidegree, std::int64_t>& entries() const { return m_; }
    bool empty() const { return m_.empty(); }
    std::int64_t total() const;
    bool integral() const;  // every bidegree is a pair of integers
    BigradedDims& operator+=(const BigradedDims& o);

    friend bool operator==(const BigradedDims&, const BigradedDims&) = default;

private:
    std::map<Bidegree, std::int64_t> m_;
};

struct DimDiff {
    Rational p, q;
    std::int64_t left = 0, right = 0;
};

std::vector<DimDiff> diff(const BigradedDims& a, const BigradedDims& b);

enum class Side { LG, CY };
enum class SectorKind { NeveuSchwarz, Ramond, Empty, Transversal, NonTransversal };

const char* to_string(Side side);
const char* to_string(SectorKind kind);

struct Sector {
    Side side = Side::LG;
    PhaseVector gamma;
    PhaseVector coset_rep;  // CY only
    Rational s;             // CY only: gamma = coset_rep + s w
    std::vector<int> fixed;
    int n_gamma = 0;
    Rational age;  // LG: ambient age; CY: age on the tangent space of the hypersurface
    SectorKind kind = SectorKind::Ramond;
    BigradedDims dims;
    BigradedDims primitive;  // CY: primitive part of dims; LG: equal to dims for Ramond sectors
};

struct StateSpace {
    std::vector<Sector> sectors;
    BigradedDims total;
};

// An admissible pair: W Calabi-Yau and J_W in G, which acts on W.
struct LgPair {
    Potential W;
    SymmetryGroup G;
    PhaseVector J;
};

// Throws NotApplicable (W not Calabi-Yau or G not inside Aut W) and JNotContained.
LgPair make_lg_pair(Potential w, SymmetryGroup g);

// Memo of invariant_dims by fixed locus, shared by the pipelines of one pair.
class InvariantDimsCache {
public:
    InvariantDimsCache(const ChargeData& c, const SymmetryGroup& g) : c_(c), g_(g) {}
    const GradedInvariantDims& get(const std::vector<int>& fixed);

private:
    const ChargeData& c_;
    const SymmetryGroup& g_;
    std::mutex mu_;
    std::map<std::vector<int>, std::unique_ptr<GradedInvariantDims>> memo_;
};

StateSpace fjrw(const LgPair& pair, InvariantDimsCache* cache = nullptr);
StateSpace cr(const LgPair& pair, InvariantDimsCache* cache = nullptr);

struct IsoReport {
    bool ok = false;
    StateSpace cr;
    StateSpace fjrw;
    std::vector<DimDiff> diffs;  // left = CR, right = FJRW
};

IsoReport verify_isomorphism(const LgPair& pair);

}  // namespace lgcy
