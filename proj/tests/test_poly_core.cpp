#include <doctest.h>

#include <random>

#include "lgcy/errors.hpp"
#include "lgcy/linalg.hpp"
#include "lgcy/parse.hpp"
#include "lgcy/poly.hpp"
#include "lgcy/potential.hpp"
#include "lgcy/smith.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace lgcy;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no lgcy::Error thrown");
    return ErrorCode::SyntaxError;
}

}  // namespace

TEST_SUITE("poly-core")
{
    TEST_CASE("rational arithmetic stays reduced")
    {
        Rational a(6, -8);
        CHECK(a.num() == -3);
        CHECK(a.den() == 4);
        CHECK(a.floor() == -1);
        CHECK(a.frac() == Rational(1, 4));
        CHECK((Rational(1, 6) + Rational(1, 3)) == Rational(1, 2));
        CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
        CHECK(Rational(4).str() == "4/1");
        CHECK(Rational(4).pretty() == "4");
        CHECK(Rational::parse("-7/21") == Rational(-1, 3));
        CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
        CHECK(Rational(1, 3) < Rational(1, 2));
        CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), std::overflow_error);
    }

    TEST_CASE("smith normal form satisfies U A V = S with a divisibility chain")
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
            IntMatrix a(r, std::vector<std::int64_t>(c));
            for (auto& row : a)
                for (auto& x : row) x = entry(rng);
            SmithForm f = smith_normal_form(a);
            CHECK(multiply(multiply(f.U, a), f.V) == f.S);
            CHECK(std::abs(determinant(to_rational(f.U)).num()) == 1);
            CHECK(std::abs(determinant(to_rational(f.V)).num()) == 1);
            for (std::size_t i = 0; i + 1 < f.rank; ++i) CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
            for (std::size_t i = 0; i < f.diagonal.size(); ++i) CHECK((f.diagonal[i] > 0) == (i < f.rank));
            CHECK(f.rank == rank(to_rational(a)));
        }
    }

    TEST_CASE("charges and weights of the example polynomials")
    {
        auto c = charges(parse_polynomial("x1^4*x2 + x2^4*x3 + x3^4*x4 + x4^4*x5 + x5^5"));
        CHECK(c.w == std::vector<std::int64_t>{1, 1, 1, 1, 1});
        CHECK(c.d == 5);
        CHECK(c.cy);

        c = charges(parse_polynomial("x1^6 + x2^4 + x3^4 + x4^3"));
        CHECK(c.w == std::vector<std::int64_t>{2, 3, 3, 4});
        CHECK(c.d == 12);

        c = charges(parse_polynomial("x1^4*x2 + x2^3*x3 + x3^3*x4 + x4^3"));
        CHECK(c.w == std::vector<std::int64_t>{5, 7, 6, 9});
        CHECK(c.d == 27);
        CHECK(c.cy);

        c = charges(parse_polynomial("x1^20 + x2^6 + x3^5 + x4^4 + x5^3"));
        CHECK(c.w == std::vector<std::int64_t>{3, 10, 12, 15, 20});
        CHECK(c.d == 60);

        c = charges(parse_polynomial("x1^4 + x1*x2^4 + x2*x3^4 + x3*x4^4 + x4*x5^5"));
        CHECK(c.w == std::vector<std::int64_t>{64, 48, 52, 51, 41});
        CHECK(c.d == 256);
        CHECK(c.cy);

        c = charges(parse_polynomial("x1^2*x2 + x2^2*x3 + x3^3"));
        CHECK(c.w == std::vector<std::int64_t>{1, 1, 1});
        CHECK(c.large_charge == false);

        c = charges(parse_polynomial("x1^2 + x2^3"));
        CHECK(!c.cy);
        CHECK(!is_calabi_yau(c));
    }

    TEST_CASE("charges agree with Cramer's rule and with row sums of the inverse")
    {
        for (const auto& in : suite::instances()) {
            ExponentMatrix m = parse_polynomial(in.poly);
            if (m.s() != static_cast<std::size_t>(m.n())) continue;
            auto c = charges(m);
            CHECK(c.q == oracle::cramer_charges(m.matrix()));
            CHECK(charges_from_inverse(m) == c.q);
            std::int64_t g = c.d;
            for (auto w : c.w) g = std::gcd(g, w);
            CHECK(g == 1);
            for (std::size_t j = 0; j < c.q.size(); ++j) CHECK(c.q[j] * Rational(c.d) == Rational(c.w[j]));
        }
    }

    TEST_CASE("quasihomogeneity errors")
    {
        CHECK(code_of([] { charges(parse_polynomial("x1^2 + x1^3")); }) == ErrorCode::NotQuasihomogeneous);
        CHECK(code_of([] { charges(parse_polynomial("x1^2 + x1^3*x2")); }) == ErrorCode::NonPositiveCharge);
        CHECK(code_of([] { make_potential(parse_polynomial("x1^2*x2^2")); }) == ErrorCode::NotQuasihomogeneous);
    }

    TEST_CASE("rows are kept in canonical order and duplicates are rejected")
    {
        ExponentMatrix a(2, {{0, 3}, {3, 0}});
        ExponentMatrix b(2, {{3, 0}, {0, 3}});
        CHECK(a == b);
        CHECK(a.rows()[0] == Exponents{3, 0});
        CHECK(code_of([] { ExponentMatrix(1, {{5}, {5}}); }) == ErrorCode::DuplicateMonomial);
        CHECK_THROWS_AS(ExponentMatrix(2, {{1, -1}}), std::invalid_argument);
        CHECK(ExponentMatrix(2, {{2, 0}, {0, 2}}, {Rational(3, 2), Rational(1)}).unit_coefficients() == false);
    }

    TEST_CASE("atomic decomposition recognises fermat, loop and chain atoms")
    {
        auto chain = atomic_decomposition(parse_polynomial("x1^4*x2 + x2^3*x3 + x3^3*x4 + x4^3"));
        REQUIRE(chain.atoms.size() == 1);
        CHECK(chain.atoms[0].type == AtomType::Chain);
        CHECK(chain.atoms[0].vars.size() == 4);

        auto loop = atomic_decomposition(parse_polynomial("x1^2*x2 + x2^2*x3 + x3^2*x1"));
        REQUIRE(loop.atoms.size() == 1);
        CHECK(loop.atoms[0].type == AtomType::Loop);

        auto mixed = atomic_decomposition(parse_polynomial("x1^3*x2 + x2^3*x1 + x3^4 + x4^4"));
        CHECK(mixed.atoms.size() == 3);
        int fermats = 0, loops = 0;
        for (const auto& a : mixed.atoms) {
            fermats += a.type == AtomType::Fermat;
            loops += a.type == AtomType::Loop;
        }
        CHECK(fermats == 2);
        CHECK(loops == 1);

        auto transposed = atomic_decomposition(parse_polynomial("x1^4 + x1*x2^3 + x2*x3^3 + x3*x4^3"));
        REQUIRE(transposed.atoms.size() == 1);
        CHECK(transposed.atoms[0].type == AtomType::Chain);

        for (const auto& in : suite::instances()) {
            ExponentMatrix m = parse_polynomial(in.poly);
            if (!in.mirror) continue;
            auto dec = atomic_decomposition(m);
            std::size_t vars = 0;
            for (const auto& a : dec.atoms) vars += a.vars.size();
            CHECK(vars == static_cast<std::size_t>(m.n()));
            std::vector<bool> used(m.s(), false);
            for (std::size_t j = 0; j < dec.head_row.size(); ++j) {
                CHECK(!used[dec.head_row[j]]);
                used[dec.head_row[j]] = true;
                CHECK(m.rows()[dec.head_row[j]][j] >= 1);
            }
            CHECK(!describe(dec.atoms[0]).empty());
        }
    }

    TEST_CASE("degenerate and non-invertible polynomials")
    {
        CHECK(code_of([] { atomic_decomposition(parse_polynomial("x1^3*x2 + x1^2*x2^2")); }) ==
              ErrorCode::NotNondegenerate);
        CHECK(code_of([] { make_potential(parse_polynomial("x1^3*x2 + x1^2*x2^2")); }) == ErrorCode::NotNondegenerate);
        CHECK(code_of([] { atomic_decomposition(parse_polynomial("x1^3 + x2^3 + x3^3 + x1*x2*x3")); }) ==
              ErrorCode::NotInvertible);
        CHECK(code_of([] { atomic_decomposition(parse_polynomial("x1^3 + 2*x2^3")); }) == ErrorCode::NotInvertible);
        auto two_loop = make_potential(parse_polynomial("x1^2*x2 + x1*x2^2"));
        REQUIRE(two_loop.atoms.has_value());
        CHECK(two_loop.atoms->atoms.size() == 1);
        CHECK(two_loop.atoms->atoms[0].type == AtomType::Loop);
    }

    TEST_CASE("non-invertible nondegenerate polynomials are certified by the rank test")
    {
        auto hesse = make_potential(parse_polynomial("x1^3 + x2^3 + x3^3 + x1*x2*x3"));
        CHECK(!hesse.invertible);
        CHECK(!hesse.atoms.has_value());
        CHECK(!hesse.certificate.empty());
        auto quartic = make_potential(parse_polynomial("x1^4 + x2^4 + x3^4 + x4^4 + x1*x2*x3*x4"));
        CHECK(quartic.charges.d == 4);
        // x1^2 (x1^2 + x1 x2 + x2^2) has a non-isolated critical locus
        CHECK(code_of([] { make_potential(parse_polynomial("x1^4 + x1^3*x2 + x1^2*x2^2")); }) ==
              ErrorCode::NotNondegenerate);
        auto lines = make_potential(parse_polynomial("x1^3 + x1*x2^2 + x1^2*x2"));
        CHECK(!lines.invertible);
    }

    TEST_CASE("restriction to a coordinate subspace keeps only monomials inside it")
    {
        ExponentMatrix m = parse_polynomial("x1^4*x2 + x2^3*x3 + x3^3*x4 + x4^3");
        ExponentMatrix r = restrict(m, {2, 3});
        CHECK(r.n() == 2);
        CHECK(r == ExponentMatrix(2, {{3, 1}, {0, 3}}));
        CHECK(restrict(m, {0}).empty());
    }
}
