#include "lgcy/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "lgcy/errors.hpp"
#include "lgcy/smith.hpp"

namespace lgcy {

PhaseVector::PhaseVector(std::vector<Rational> entries) : v_(std::move(entries))
{
    for (auto& x : v_) x = x.frac();
}

bool PhaseVector::is_zero() const
{
    return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::int64_t PhaseVector::order() const
{
    std::int64_t o = 1;
    for (const auto& x : v_) o = lcm64(o, x.den());
    return o;
}

PhaseVector PhaseVector::operator+(const PhaseVector& o) const
{
    PhaseVector r(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) {
        Rational s = v_[j] + o.v_[j];
        r.v_[j] = s >= Rational(1) ? s - Rational(1) : s;
    }
    return r;
}

PhaseVector PhaseVector::operator-() const
{
    PhaseVector r(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) r.v_[j] = v_[j].is_zero() ? v_[j] : Rational(1) - v_[j];
    return r;
}

PhaseVector PhaseVector::operator-(const PhaseVector& o) const { return *this + (-o); }

PhaseVector PhaseVector::operator*(std::int64_t k) const
{
    PhaseVector r(v_.size());
    for (std::size_t j = 0; j < v_.size(); ++j) r.v_[j] = (v_[j] * Rational(k)).frac();
    return r;
}

std::string PhaseVector::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t j = 0; j < v_.size(); ++j) os << (j ? "," : "") << v_[j].pretty();
    os << ")";
    return os.str();
}

std::size_t PhaseVectorHash::operator()(const PhaseVector& p) const noexcept
{
    std::size_t h = p.size();
    for (const auto& x : p.entries()) h = h * 1000003u ^ std::hash<Rational>{}(x);
    return h;
}

SymmetryGroup SymmetryGroup::generate(std::size_t n, std::vector<PhaseVector> generators, std::size_t max_order)
{
    SymmetryGroup g;
    g.n_ = n;
    for (auto& x : generators) {
        if (x.size() != n) throw std::invalid_argument("generator has wrong length");
        if (!x.is_zero()) g.gens_.push_back(x);
    }

    std::unordered_set<PhaseVector, PhaseVectorHash> seen;
    std::deque<PhaseVector> todo;
    PhaseVector zero(n);
    seen.insert(zero);
    todo.push_back(zero);
    while (!todo.empty()) {
        PhaseVector x = std::move(todo.front());
        todo.pop_front();
        for (const auto& gen : g.gens_) {
            PhaseVector y = x + gen;
            if (seen.insert(y).second) {
                if (seen.size() > max_order)
                    throw Error(ErrorCode::GroupTooLarge,
                                "group has more than " + std::to_string(max_order) + " elements");
                todo.push_back(std::move(y));
            }
        }
    }
    g.elements_.assign(seen.begin(), seen.end());
    std::sort(g.elements_.begin(), g.elements_.end());
    for (const auto& x : g.elements_) g.exponent_ = lcm64(g.exponent_, x.order());
    return g;
}

bool SymmetryGroup::contains(const PhaseVector& g) const
{
    return g.size() == n_ && std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SymmetryGroup::is_subgroup_of(const SymmetryGroup& other) const
{
    return std::all_of(gens_.begin(), gens_.end(), [&](const PhaseVector& x) { return other.contains(x); });
}

SymmetryGroup aut_group(const ExponentMatrix& m, std::size_t max_order)
{
    std::size_t n = static_cast<std::size_t>(m.n());
    if (m.rank() < n) throw Error(ErrorCode::InfiniteGroup, "exponent matrix has rank below the number of variables");
    // M theta in Z^s  <=>  S phi in Z^s with theta = V phi
    auto snf = smith_normal_form(m.matrix());
    std::vector<PhaseVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t di = snf.diagonal[i];
        if (di == 1) continue;
        std::vector<Rational> col;
        for (std::size_t j = 0; j < n; ++j) col.emplace_back(snf.V[j][i], di);
        gens.emplace_back(std::move(col));
    }
    return SymmetryGroup::generate(n, std::move(gens), max_order);
}

PhaseVector j_element(const ChargeData& c) { return PhaseVector(c.q); }

SymmetryGroup sl_subgroup(const SymmetryGroup& g, std::size_t max_order)
{
    std::vector<PhaseVector> gens;
    for (const auto& x : g.elements())
        if (age(x).is_integer()) gens.push_back(x);
    // every element is a generator; trim to a small generating set greedily
    std::vector<PhaseVector> small;
    SymmetryGroup cur = SymmetryGroup::generate(g.n(), {}, max_order);
    for (const auto& x : gens) {
        if (cur.contains(x)) continue;
        small.push_back(x);
        cur = SymmetryGroup::generate(g.n(), small, max_order);
    }
    return cur;
}

SymmetryGroup group_from_generators(std::size_t n, std::vector<PhaseVector> gens, std::size_t max_order)
{
    return SymmetryGroup::generate(n, std::move(gens), max_order);
}

bool contains(const SymmetryGroup& g, const PhaseVector& x) { return g.contains(x); }

CosetList cosets(const SymmetryGroup& g, const PhaseVector& j)
{
    if (!g.contains(j)) throw Error(ErrorCode::JNotInGroup, "J = " + j.str() + " is not in the group");
    std::int64_t ord = j.order();
    std::unordered_set<PhaseVector, PhaseVectorHash> covered;
    CosetList out;
    for (const auto& x : g.elements()) {
        if (covered.count(x)) continue;
        out.representatives.push_back(x);
        PhaseVector y = x;
        for (std::int64_t k = 0; k < ord; ++k) {
            covered.insert(y);
            y = y + j;
        }
    }
    return out;
}

PhaseVector lambda_bar(const Rational& s, const std::vector<std::int64_t>& w)
{
    std::vector<Rational> v;
    for (auto wj : w) v.push_back(s * Rational(wj));
    return PhaseVector(std::move(v));
}

FixedData fixed_data(const PhaseVector& gamma)
{
    FixedData f;
    for (std::size_t j = 0; j < gamma.size(); ++j)
        if (gamma[j].is_zero()) f.fixed.push_back(static_cast<int>(j));
    f.n_gamma = static_cast<int>(f.fixed.size());
    return f;
}

Rational age(const PhaseVector& gamma)
{
    Rational a;
    for (const auto& x : gamma.entries()) a += x;
    return a;
}

Rational hypersurface_age(const PhaseVector& g, const Rational& s, const std::vector<std::int64_t>& w, std::int64_t d)
{
    return age(g + lambda_bar(s, w)) - (s * Rational(d)).frac();
}

Rational det_twist(const PhaseVector& gamma, const std::vector<int>& fixed)
{
    Rational t;
    for (int j : fixed) t += gamma[static_cast<std::size_t>(j)];
    return t.frac();
}

}  // namespace lgcy
