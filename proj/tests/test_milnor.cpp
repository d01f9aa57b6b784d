#include <doctest.h>

#include <set>

#include "lgcy/cyclotomic.hpp"
#include "lgcy/errors.hpp"
#include "lgcy/milnor.hpp"
#include "lgcy/parse.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace lgcy;

namespace {

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v)
{
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Fermat exponents of a diagonal polynomial, or empty when W is not Fermat.
std::vector<int> fermat_exponents(const ExponentMatrix& m)
{
    std::vector<int> a(static_cast<std::size_t>(m.n()), 0);
    if (m.s() != a.size()) return {};
    for (const auto& row : m.rows()) {
        int nonzero = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) {
                ++nonzero;
                a[j] = row[j];
            }
        if (nonzero != 1) return {};
    }
    return a;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

TEST_SUITE("milnor")
{
    TEST_CASE("cyclotomic polynomials")
    {
        CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
        CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
        CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
        CHECK(cyclotomic_polynomial(7) == std::vector<std::int64_t>(7, 1));
        auto phi105 = cyclotomic_polynomial(105);
        CHECK(phi105.size() == 49);
        CHECK(std::count(phi105.begin(), phi105.end(), -2) == 2);
        for (int n : {8, 12, 30, 60, 72}) {
            std::vector<std::int64_t> prod{1};
            for (int k = 1; k <= n; ++k)
                if (n % k == 0) prod = poly_mul(prod, cyclotomic_polynomial(k));
            std::vector<std::int64_t> expect(static_cast<std::size_t>(n) + 1, 0);
            expect[0] = -1;
            expect[static_cast<std::size_t>(n)] = 1;
            CHECK(prod == expect);
        }
    }

    TEST_CASE("reduction modulo the cyclotomic polynomial")
    {
        for (int e : {2, 3, 6, 12}) {
            CyclotomicInt all(e);
            for (int k = 0; k < e; ++k) all += CyclotomicInt::monomial(e, k);
            for (auto c : reduce_mod_cyclotomic(all)) CHECK(c == 0);
            auto one = reduce_mod_cyclotomic(CyclotomicInt::monomial(e, e));
            CHECK(one[0] == 1);
        }
        // x^2 = -1 in Z[i]
        auto r = reduce_mod_cyclotomic(CyclotomicInt::monomial(4, 2, 3));
        CHECK(r[0] == -3);
        CyclotomicInt a = CyclotomicInt::monomial(5, 3) * CyclotomicInt::monomial(5, 4, 2);
        CHECK(a == CyclotomicInt::monomial(5, 2, 2));
    }

    TEST_CASE("Poincare series of Fermat polynomials match their monomial basis")
    {
        for (const auto& in : suite::instances()) {
            ExponentMatrix m = parse_polynomial(in.poly);
            auto a = fermat_exponents(m);
            if (a.empty()) continue;
            auto c = charges(m);
            CHECK(trimmed(poincare_series(c.w, c.d)) == trimmed(oracle::fermat_poincare(a, c.w)));
        }
        auto p = poincare_series({1, 1, 1, 1, 1}, 5);
        CHECK(p == std::vector<std::int64_t>{1, 5, 15, 35, 65, 101, 135, 155, 155, 135, 101, 65, 35, 15, 5, 1});
        CHECK_THROWS_AS(poincare_series({2, 2}, 3), Error);
    }

    TEST_CASE("Milnor number is the product of (d/w_j - 1)")
    {
        for (const auto& in : suite::instances()) {
            auto c = charges(parse_polynomial(in.poly));
            auto p = poincare_series(c.w, c.d);
            Rational mu(1);
            for (auto w : c.w) mu *= Rational(c.d, w) - 1;
            CHECK(Rational(std::accumulate(p.begin(), p.end(), std::int64_t{0})) == mu);
        }
    }

    TEST_CASE("trace of the identity is the Poincare series")
    {
        for (const auto& in : suite::instances()) {
            auto c = charges(parse_polynomial(in.poly));
            auto p = poincare_series(c.w, c.d);
            auto tr = equivariant_trace_series(c.w, c.d, std::vector<Rational>(c.w.size()), 1);
            REQUIRE(tr.length() == p.size());
            for (std::size_t k = 0; k < p.size(); ++k) CHECK(tr[k][0] == p[k]);
        }
    }

    TEST_CASE("equivariant traces on Fermat polynomials match the monomial basis")
    {
        for (const auto& in : suite::instances()) {
            auto pair = suite::pair_of(in);
            auto a = fermat_exponents(pair.W.M);
            if (a.empty()) continue;
            const auto& c = pair.W.charges;
            int e = static_cast<int>(pair.G.exponent());
            for (const auto& h : pair.G.elements()) {
                auto tr = equivariant_trace_series(c.w, c.d, h.entries(), e);
                std::vector<CyclotomicInt> expect(tr.length(), CyclotomicInt(e));
                oracle::fermat_basis(a, [&](const std::vector<int>& b) {
                    std::int64_t deg = 0;
                    Rational phase;
                    for (std::size_t j = 0; j < b.size(); ++j) {
                        deg += b[j] * c.w[j];
                        phase += Rational(b[j]) * h[j];
                    }
                    expect[static_cast<std::size_t>(deg)] += CyclotomicInt::monomial(e, (phase * Rational(e)).num());
                });
                for (std::size_t k = 0; k < tr.length(); ++k) CHECK(tr[k] == expect[k]);
            }
        }
    }

    TEST_CASE("invariant dimensions of the quintic")
    {
        auto pair = suite::pair_of({"", "x1^5 + x2^5 + x3^5 + x4^5 + x5^5", "J"});
        auto dims = invariant_dims(pair.W.charges, pair.G, {0, 1, 2, 3, 4});
        std::map<Rational, std::int64_t> expect{{1, 1}, {2, 101}, {3, 101}, {4, 1}};
        CHECK(dims.by_charge() == expect);
        CHECK(dims.total() == 204);
        CHECK(hodge_type(5, Rational(2)) == std::make_pair(Rational(3), Rational(2)));
        auto empty = invariant_dims(pair.W.charges, pair.G, {});
        CHECK(empty.total() == 1);
        CHECK(empty.charge(0) == Rational(0));
    }

    TEST_CASE("rank oracle agrees with the Poincare series for the trivial group")
    {
        std::size_t compared = 0;
        for (const auto& in : suite::instances()) {
            ExponentMatrix m = parse_polynomial(in.poly);
            auto c = charges(m);
            if (!oracle_feasible(c.w, c.d, kDefaultOracleSliceBound)) continue;
            auto series = poincare_series(c.w, c.d);
            auto ranks = milnor_oracle(m, c.w, c.d);
            CHECK(trimmed(ranks) == trimmed(series));
            ++compared;
        }
        CHECK(compared >= 15);
    }

    TEST_CASE("rank oracle agrees with averaged traces on every fixed locus")
    {
        for (const auto& in : suite::instances()) {
            auto pair = suite::pair_of(in);
            const auto& c = pair.W.charges;
            std::set<std::vector<int>> loci;
            for (const auto& g : pair.G.elements()) loci.insert(fixed_data(g).fixed);
            for (const auto& F : loci) {
                if (F.empty()) continue;
                std::vector<std::int64_t> wf;
                for (int j : F) wf.push_back(c.w[static_cast<std::size_t>(j)]);
                if (!oracle_feasible(wf, c.d, kDefaultOracleSliceBound)) continue;
                OracleOptions opts;
                for (const auto& h : pair.G.generators()) {
                    std::vector<Rational> proj;
                    for (int j : F) proj.push_back(h[static_cast<std::size_t>(j)]);
                    opts.invariant_under.emplace_back(proj);
                }
                if (opts.invariant_under.empty()) opts.invariant_under.emplace_back(F.size());
                auto ranks = milnor_oracle(restrict(pair.W.M, F), wf, c.d, opts);
                auto dims = invariant_dims(c, pair.G, F);
                CHECK(trimmed(ranks) == trimmed(dims.by_degree));
            }
        }
    }

    TEST_CASE("rank oracle refuses oversized slices")
    {
        auto m = parse_polynomial("x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
        OracleOptions opts;
        opts.max_slice_monomials = 10;
        try {
            milnor_oracle(m, {1, 1, 1, 1, 1}, 5, opts);
            FAIL("expected InstanceTooLarge");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InstanceTooLarge);
        }
        CHECK(!oracle_feasible({1, 1, 1, 1, 1}, 5, 300));
        CHECK(!oracle_feasible({1, 1, 1}, 3, 5));
        CHECK(oracle_feasible({1, 1, 1}, 3, 300));
    }
}
