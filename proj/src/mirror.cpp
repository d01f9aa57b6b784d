#include "lgcy/mirror.hpp"

#include <future>
#include <numeric>

#include "lgcy/errors.hpp"
#include "lgcy/potential.hpp"
#include "lgcy/smith.hpp"

namespace lgcy {

IntMatrix head_ordered_matrix(const ExponentMatrix& m)
{
    auto atoms = atomic_decomposition(m);
    IntMatrix out;
    for (std::size_t row : atoms.head_row) out.emplace_back(m.rows()[row].begin(), m.rows()[row].end());
    return out;
}

ExponentMatrix transpose(const ExponentMatrix& m)
{
    IntMatrix t = lgcy::transpose(head_ordered_matrix(m));
    std::vector<Exponents> rows;
    for (const auto& r : t) rows.emplace_back(r.begin(), r.end());
    return ExponentMatrix(m.n(), std::move(rows));
}

bool in_lattice(const SymmetryGroup& g, const std::vector<std::int64_t>& a)
{
    for (const auto& h : g.generators()) {
        Rational s;
        for (std::size_t j = 0; j < a.size(); ++j) s += h[j] * Rational(a[j]);
        if (!s.is_integer()) return false;
    }
    return true;
}

InvariantLattice invariant_lattice(const SymmetryGroup& g)
{
    const std::size_t n = g.n();
    InvariantLattice out;
    if (g.generators().empty()) {
        out.basis = identity_matrix(n);
        return out;
    }
    std::int64_t den = 1;
    for (const auto& h : g.generators()) den = lcm64(den, h.order());
    IntMatrix a;
    for (const auto& h : g.generators()) {
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < n; ++j) row.push_back((h[j] * Rational(den)).num());
        a.push_back(std::move(row));
    }
    // A x = 0 mod den; with U A V = S and x = V y: s_i y_i = 0 mod den
    auto snf = smith_normal_form(a);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = i < snf.diagonal.size() ? snf.diagonal[i] : 0;
        std::int64_t f = s == 0 ? 1 : den / std::gcd(s, den);
        std::vector<std::int64_t> v;
        for (std::size_t j = 0; j < n; ++j) v.push_back(checked_mul(snf.V[j][i], f));
        if (!in_lattice(g, v)) throw std::logic_error("invariant lattice basis vector fails membership");
        out.basis.push_back(std::move(v));
    }
    return out;
}

namespace {

SymmetryGroup trimmed(std::size_t n, const std::vector<PhaseVector>& gens, std::size_t max_order)
{
    std::vector<PhaseVector> kept;
    SymmetryGroup cur = SymmetryGroup::generate(n, {}, max_order);
    for (const auto& x : gens) {
        if (cur.contains(x)) continue;
        kept.push_back(x);
        cur = SymmetryGroup::generate(n, kept, max_order);
    }
    return cur;
}

}  // namespace

SymmetryGroup dual_group(const ExponentMatrix& m, const SymmetryGroup& g, std::size_t max_order)
{
    auto inv = inverse(to_rational(head_ordered_matrix(m)));
    if (!inv) throw Error(ErrorCode::NotInvertible, "exponent matrix is singular");
    const std::size_t n = g.n();
    std::vector<PhaseVector> gens;
    for (const auto& a : invariant_lattice(g).basis) {
        std::vector<Rational> theta(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) theta[i] += (*inv)[k][i] * Rational(a[k]);
        gens.emplace_back(std::move(theta));
    }
    return trimmed(n, gens, max_order);
}

BigradedDims mirror_rotate(const BigradedDims& dims, int n)
{
    BigradedDims out;
    for (const auto& [k, v] : dims.entries()) out.add(Rational(n - 2) - k.first, k.second, v);
    return out;
}

MirrorReport verify_mirror(const LgPair& pair, std::size_t max_order)
{
    if (!pair.W.invertible) throw Error(ErrorCode::NotApplicable, "mirror construction needs an invertible polynomial");
    for (const auto& h : pair.G.generators())
        if (!age(h).is_integer()) throw Error(ErrorCode::NotApplicable, "the group is not contained in SL_W");

    MirrorReport r;
    r.transposed = transpose(pair.W.M);
    Potential wt = make_potential(r.transposed);
    r.transposed_charges = wt.charges;
    r.dual = dual_group(pair.W.M, pair.G, max_order);
    r.j_in_dual = r.dual.contains(j_element(wt.charges));
    r.dual_in_sl = true;
    for (const auto& x : r.dual.elements())
        if (!age(x).is_integer()) r.dual_in_sl = false;
    r.involution = dual_group(r.transposed, r.dual, max_order) == pair.G;
    if (!r.j_in_dual) return r;

    LgPair tp = make_lg_pair(std::move(wt), r.dual);
    InvariantDimsCache c1(pair.W.charges, pair.G), c2(tp.W.charges, tp.G);
    auto f1 = std::async(std::launch::async, [&] { return cr(pair, &c1); });
    auto f2 = std::async(std::launch::async, [&] { return fjrw(pair, &c1); });
    auto f3 = std::async(std::launch::async, [&] { return cr(tp, &c2); });
    auto f4 = std::async(std::launch::async, [&] { return fjrw(tp, &c2); });
    StateSpace a = f1.get(), b = f2.get(), c = f3.get(), d = f4.get();

    const int n = pair.W.n();
    r.tables.push_back({"CR", a.total, c.total, diff(a.total, mirror_rotate(c.total, n))});
    r.tables.push_back({"FJRW", b.total, d.total, diff(b.total, mirror_rotate(d.total, n))});
    r.ok = r.j_in_dual && r.dual_in_sl && r.involution;
    for (const auto& t : r.tables) r.ok = r.ok && t.diffs.empty();
    return r;
}

}  // namespace lgcy
