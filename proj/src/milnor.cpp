#include "lgcy/milnor.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "lgcy/errors.hpp"

namespace lgcy {

std::vector<std::int64_t> poincare_series(const std::vector<std::int64_t>& w, std::int64_t d)
{
    std::int64_t deg = 0;
    for (auto wj : w) deg += d - wj;
    if (deg < 0) throw Error(ErrorCode::NonPolynomialQuotient, "weights exceed the degree");
    std::vector<std::int64_t> p(static_cast<std::size_t>(deg) + 1, 0);
    p[0] = 1;
    for (auto wj : w) {
        auto m = static_cast<std::size_t>(d - wj);
        for (std::size_t n = p.size(); n-- > m && m > 0;) p[n] = checked_add(p[n], -p[n - m]);
        if (m == 0) std::fill(p.begin(), p.end(), 0);
    }
    for (auto wj : w) {
        auto m = static_cast<std::size_t>(wj);
        for (std::size_t n = m; n <= static_cast<std::size_t>(deg); ++n) p[n] = checked_add(p[n], p[n - m]);
        for (std::int64_t n = deg - wj + 1; n <= deg; ++n)
            if (n >= 0 && p[static_cast<std::size_t>(n)] != 0)
                throw Error(ErrorCode::NonPolynomialQuotient, "Poincare series is not a polynomial");
        deg -= wj;
        if (deg < 0) throw Error(ErrorCode::NonPolynomialQuotient, "Poincare series is not a polynomial");
    }
    p.resize(static_cast<std::size_t>(deg) + 1);
    return p;
}

namespace {

std::int64_t scaled_phase(const Rational& theta, int e)
{
    Rational k = theta * Rational(e);
    if (!k.is_integer()) throw std::logic_error("phase " + theta.pretty() + " is not an e-th root of unity");
    return k.num();
}

}  // namespace

CycloPoly equivariant_trace_series(const std::vector<std::int64_t>& w, std::int64_t d,
                                   const std::vector<Rational>& theta, int e)
{
    std::int64_t deg = 0;
    for (auto wj : w) deg += d - wj;
    if (deg < 0) throw Error(ErrorCode::NonPolynomialQuotient, "weights exceed the degree");
    CycloPoly p(e, static_cast<std::size_t>(deg) + 1);
    p[0] = CyclotomicInt::monomial(e, 0);
    std::vector<std::int64_t> k(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        k[j] = scaled_phase(theta[j], e);
        p.mul_binomial(-k[j], static_cast<std::size_t>(d - w[j]));
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (deg < w[j] || !p.div_binomial(k[j], static_cast<std::size_t>(w[j]), static_cast<std::size_t>(deg)))
            throw Error(ErrorCode::NonPolynomialQuotient, "equivariant trace series is not a polynomial");
        deg -= w[j];
    }
    p.resize(static_cast<std::size_t>(deg) + 1);
    return p;
}

Rational GradedInvariantDims::charge(std::int64_t k) const { return Rational(k + weight_sum, d); }

std::map<Rational, std::int64_t> GradedInvariantDims::by_charge() const
{
    std::map<Rational, std::int64_t> out;
    for (std::size_t k = 0; k < by_degree.size(); ++k)
        if (by_degree[k] != 0) out[charge(static_cast<std::int64_t>(k))] += by_degree[k];
    return out;
}

std::int64_t GradedInvariantDims::total() const
{
    return std::accumulate(by_degree.begin(), by_degree.end(), std::int64_t{0});
}

GradedInvariantDims invariant_dims(const ChargeData& c, const SymmetryGroup& g, const std::vector<int>& fixed)
{
    GradedInvariantDims out;
    out.d = c.d;
    std::vector<std::int64_t> wf;
    for (int j : fixed) {
        wf.push_back(c.w[static_cast<std::size_t>(j)]);
        out.weight_sum += wf.back();
        out.top += c.d - 2 * wf.back();
    }
    if (out.top < 0) throw Error(ErrorCode::NonPolynomialQuotient, "negative socle degree");
    const int e = static_cast<int>(g.exponent());

    std::map<std::vector<Rational>, std::int64_t> projections;
    for (const auto& h : g.elements()) {
        std::vector<Rational> proj;
        for (int j : fixed) proj.push_back(h[static_cast<std::size_t>(j)]);
        ++projections[proj];
    }

    std::vector<CyclotomicInt> sum(static_cast<std::size_t>(out.top) + 1, CyclotomicInt(e));
    for (const auto& [theta, mult] : projections) {
        CycloPoly tr = equivariant_trace_series(wf, c.d, theta, e);
        Rational twist;
        for (const auto& t : theta) twist += t;
        std::int64_t shift = scaled_phase(twist.frac(), e);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k].add_shifted(tr[k], shift, mult);
    }

    const auto order = static_cast<std::int64_t>(g.order());
    for (std::size_t k = 0; k < sum.size(); ++k) {
        auto r = reduce_mod_cyclotomic(sum[k]);
        for (std::size_t i = 1; i < r.size(); ++i)
            if (r[i] != 0) throw Error(ErrorCode::NonIntegerDimension, "averaged trace is not rational at degree " + std::to_string(k));
        if (r[0] % order != 0 || r[0] < 0)
            throw Error(ErrorCode::NonIntegerDimension,
                        "averaged trace " + std::to_string(r[0]) + "/" + std::to_string(order) + " at degree " + std::to_string(k));
        out.by_degree.push_back(r[0] / order);
    }
    return out;
}

std::pair<Rational, Rational> hodge_type(int n_gamma, const Rational& c) { return {Rational(n_gamma) - c, c}; }

}  // namespace lgcy
