#include "lgcy/state_spaces.hpp"

#include <algorithm>
#include <set>

#include "lgcy/errors.hpp"

namespace lgcy {

void BigradedDims::add(const Rational& p, const Rational& q, std::int64_t mult)
{
    if (mult == 0) return;
    auto& slot = m_[{p, q}];
    slot = checked_add(slot, mult);
    if (slot == 0) m_.erase({p, q});
}

std::int64_t BigradedDims::at(const Rational& p, const Rational& q) const
{
    auto it = m_.find({p, q});
    return it == m_.end() ? 0 : it->second;
}

std::int64_t BigradedDims::total() const
{
    std::int64_t t = 0;
    for (const auto& [k, v] : m_) t += v;
    return t;
}

bool BigradedDims::integral() const
{
    return std::all_of(m_.begin(), m_.end(),
                       [](const auto& kv) { return kv.first.first.is_integer() && kv.first.second.is_integer(); });
}

BigradedDims& BigradedDims::operator+=(const BigradedDims& o)
{
    for (const auto& [k, v] : o.m_) add(k.first, k.second, v);
    return *this;
}

std::vector<DimDiff> diff(const BigradedDims& a, const BigradedDims& b)
{
    std::set<Bidegree> keys;
    for (const auto& kv : a.entries()) keys.insert(kv.first);
    for (const auto& kv : b.entries()) keys.insert(kv.first);
    std::vector<DimDiff> out;
    for (const auto& k : keys) {
        auto x = a.at(k.first, k.second), y = b.at(k.first, k.second);
        if (x != y) out.push_back({k.first, k.second, x, y});
    }
    return out;
}

const char* to_string(Side side) { return side == Side::LG ? "LG" : "CY"; }

const char* to_string(SectorKind kind)
{
    switch (kind) {
    case SectorKind::NeveuSchwarz: return "NeveuSchwarz";
    case SectorKind::Ramond: return "Ramond";
    case SectorKind::Empty: return "Empty";
    case SectorKind::Transversal: return "Transversal";
    case SectorKind::NonTransversal: return "NonTransversal";
    }
    return "?";
}

LgPair make_lg_pair(Potential w, SymmetryGroup g)
{
    if (!w.charges.cy) throw Error(ErrorCode::NotApplicable, "W does not satisfy the Calabi-Yau condition");
    if (g.n() != static_cast<std::size_t>(w.n())) throw Error(ErrorCode::NotApplicable, "group acts on the wrong number of variables");
    for (const auto& h : g.generators())
        for (const auto& row : w.M.rows()) {
            Rational s;
            for (std::size_t j = 0; j < row.size(); ++j) s += h[j] * Rational(row[j]);
            if (!s.is_integer()) throw Error(ErrorCode::NotApplicable, "generator " + h.str() + " does not preserve W");
        }
    PhaseVector j = j_element(w.charges);
    if (!g.contains(j)) throw Error(ErrorCode::JNotContained, "the group does not contain J = " + j.str());
    return LgPair{std::move(w), std::move(g), std::move(j)};
}

const GradedInvariantDims& InvariantDimsCache::get(const std::vector<int>& fixed)
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(fixed);
        if (it != memo_.end()) return *it->second;
    }
    auto dims = std::make_unique<GradedInvariantDims>(invariant_dims(c_, g_, fixed));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(fixed, std::move(dims));
    return *it->second;
}

namespace {

// (N - c - 1 + shift, c - 1 + shift) for every invariant class of W restricted to `fixed`
BigradedDims primitive_part(const GradedInvariantDims& inv, int n_gamma, const Rational& shift)
{
    BigradedDims out;
    for (const auto& [c, mult] : inv.by_charge()) {
        if (!c.is_integer()) throw std::logic_error("invariant class with non-integral charge " + c.pretty());
        auto [p, q] = hodge_type(n_gamma, c);
        out.add(p - 1 + shift, q - 1 + shift, mult);
    }
    return out;
}

}  // namespace

StateSpace fjrw(const LgPair& pair, InvariantDimsCache* cache)
{
    InvariantDimsCache local(pair.W.charges, pair.G);
    if (!cache) cache = &local;
    StateSpace out;
    for (const auto& gamma : pair.G.elements()) {
        Sector sec;
        sec.side = Side::LG;
        sec.gamma = gamma;
        auto fd = fixed_data(gamma);
        sec.fixed = fd.fixed;
        sec.n_gamma = fd.n_gamma;
        sec.age = age(gamma);
        if (sec.n_gamma == 0) {
            sec.kind = SectorKind::NeveuSchwarz;
            sec.dims.add(sec.age - 1, sec.age - 1, 1);
        } else {
            sec.kind = SectorKind::Ramond;
            sec.dims = primitive_part(cache->get(sec.fixed), sec.n_gamma, sec.age);
            sec.primitive = sec.dims;
        }
        out.total += sec.dims;
        out.sectors.push_back(std::move(sec));
    }
    return out;
}

StateSpace cr(const LgPair& pair, InvariantDimsCache* cache)
{
    InvariantDimsCache local(pair.W.charges, pair.G);
    if (!cache) cache = &local;
    const auto& w = pair.W.charges.w;
    const auto d = pair.W.charges.d;
    StateSpace out;
    std::set<PhaseVector> seen;

    for (const auto& g : cosets(pair.G, pair.J).representatives) {
        std::set<Rational> params;
        for (std::size_t j = 0; j < w.size(); ++j)
            for (std::int64_t k = 0; k < w[j]; ++k) params.insert(((Rational(k) - g[j]) / Rational(w[j])).frac());

        for (const auto& s : params) {
            Sector sec;
            sec.side = Side::CY;
            sec.coset_rep = g;
            sec.s = s;
            sec.gamma = g + lambda_bar(s, w);
            if (!seen.insert(sec.gamma).second)
                throw std::logic_error("sector " + sec.gamma.str() + " enumerated twice");
            auto fd = fixed_data(sec.gamma);
            sec.fixed = fd.fixed;
            sec.n_gamma = fd.n_gamma;
            sec.age = hypersurface_age(g, s, w, d);
            const Rational& a = sec.age;

            if ((s * Rational(d)).is_integer()) {
                sec.kind = SectorKind::Transversal;
                for (int i = 0; i + 2 <= sec.n_gamma; ++i) sec.dims.add(Rational(i) + a, Rational(i) + a, 1);
                sec.primitive = primitive_part(cache->get(sec.fixed), sec.n_gamma, a);
                sec.dims += sec.primitive;
                if (sec.n_gamma == 1) {
                    if (!sec.dims.empty()) throw std::logic_error("one-dimensional transversal sector with classes");
                    sec.kind = SectorKind::Empty;
                }
            } else {
                sec.kind = SectorKind::NonTransversal;
                for (int i = 0; i < sec.n_gamma; ++i) sec.dims.add(Rational(i) + a, Rational(i) + a, 1);
            }
            out.total += sec.dims;
            out.sectors.push_back(std::move(sec));
        }
    }
    return out;
}

IsoReport verify_isomorphism(const LgPair& pair)
{
    IsoReport r;
    InvariantDimsCache cache(pair.W.charges, pair.G);
    r.cr = cr(pair, &cache);
    r.fjrw = fjrw(pair, &cache);
    r.diffs = diff(r.cr.total, r.fjrw.total);
    r.ok = r.diffs.empty();
    return r;
}

}  // namespace lgcy
