#include <doctest.h>

#include <cmath>
#include <set>

#include "lgcy/errors.hpp"
#include "lgcy/mirror.hpp"
#include "oracles.hpp"
#include "suite.hpp"

using namespace lgcy;

namespace {

SymmetryGroup named(const ExponentMatrix& m, const char* spec)
{
    return parse_group(spec, m, charges(m), false);
}

// Brute-force dual group: all (M^{-1})^T a for a in a box, kept when a is G-invariant.
std::set<PhaseVector> brute_dual(const ExponentMatrix& m, const SymmetryGroup& g)
{
    IntMatrix head = head_ordered_matrix(m);
    auto inv = inverse(to_rational(head));
    const std::size_t n = head.size();
    std::int64_t D = std::abs(oracle::det(head));
    std::set<PhaseVector> out;
    std::vector<std::int64_t> a(n, 0);
    for (;;) {
        bool invariant = true;
        for (const auto& h : g.elements()) {
            Rational s;
            for (std::size_t j = 0; j < n; ++j) s += h[j] * Rational(a[j]);
            if (!s.is_integer()) {
                invariant = false;
                break;
            }
        }
        if (invariant) {
            std::vector<Rational> t(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) t[i] += (*inv)[k][i] * Rational(a[k]);
            out.insert(PhaseVector(t));
        }
        std::size_t j = 0;
        while (j < n && ++a[j] == D) a[j++] = 0;
        if (j == n) break;
    }
    return out;
}

}  // namespace

TEST_SUITE("mirror")
{
    TEST_CASE("transpose of the chain quintic")
    {
        ExponentMatrix m = parse_polynomial("x1^4*x2 + x2^4*x3 + x3^4*x4 + x4^4*x5 + x5^5");
        CHECK(transpose(m) == parse_polynomial("x1^4 + x1*x2^4 + x2*x3^4 + x3*x4^4 + x4*x5^5"));
        auto c = charges(transpose(m));
        CHECK(c.w == std::vector<std::int64_t>{64, 48, 52, 51, 41});
        CHECK(c.d == 256);
        CHECK(c.cy);
        ExponentMatrix fermat = parse_polynomial("x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
        CHECK(transpose(fermat) == fermat);
        CHECK_THROWS_AS(transpose(parse_polynomial("x1^3 + x2^3 + x3^3 + x1*x2*x3")), Error);
    }

    TEST_CASE("transpose is an involution preserving |det M|")
    {
        for (const auto& in : suite::instances()) {
            if (!in.mirror) continue;
            CAPTURE(in.name);
            ExponentMatrix m = parse_polynomial(in.poly);
            ExponentMatrix t = transpose(m);
            CHECK(transpose(t) == m);
            CHECK(std::abs(oracle::det(m.matrix())) == std::abs(oracle::det(t.matrix())));
            CHECK(aut_group(m).order() == aut_group(t).order());
            CHECK(make_potential(t).charges.cy);
        }
    }

    TEST_CASE("invariant lattice membership")
    {
        ExponentMatrix m = parse_polynomial("x1^3 + x2^3 + x3^3");
        SymmetryGroup j = named(m, "J");
        auto lat = invariant_lattice(j);
        CHECK(lat.basis.size() == 3);
        for (const auto& row : lat.basis) CHECK(in_lattice(j, row));
        CHECK(in_lattice(j, {1, -1, 0}));
        CHECK(in_lattice(j, {3, 0, 0}));
        CHECK(!in_lattice(j, {1, 0, 0}));
        CHECK(std::abs(determinant(to_rational(lat.basis)).num()) == 3);
    }

    TEST_CASE("dual groups of the examples")
    {
        ExponentMatrix chain = parse_polynomial("x1^4*x2 + x2^4*x3 + x3^4*x4 + x4^4*x5 + x5^5");
        ExponentMatrix chain_t = transpose(chain);
        SymmetryGroup gt = dual_group(chain, named(chain, "J"));
        CHECK(gt == named(chain_t, "J"));
        CHECK(gt.order() == 256);

        ExponentMatrix fermat = parse_polynomial("x1^5 + x2^5 + x3^5 + x4^5 + x5^5");
        SymmetryGroup fj = dual_group(fermat, named(fermat, "J"));
        CHECK(fj.order() == 625);
        CHECK(fj == named(fermat, "SL"));
        CHECK(dual_group(fermat, fj) == named(fermat, "J"));

        for (const auto& in : suite::instances()) {
            ExponentMatrix m = parse_polynomial(in.poly);
            if (m.s() != static_cast<std::size_t>(m.n()) || !m.unit_coefficients()) continue;
            CHECK(dual_group(m, aut_group(m)).order() == 1);
        }
    }

    TEST_CASE("dual groups agree with brute force over the invariant monomials")
    {
        for (const auto& in : suite::instances()) {
            if (!in.mirror) continue;
            auto pair = suite::pair_of(in);
            std::int64_t det = std::abs(oracle::det(pair.W.M.matrix()));
            if (std::pow(static_cast<double>(det), pair.W.n()) > 2e6) continue;
            CAPTURE(in.name);
            SymmetryGroup gt = dual_group(pair.W.M, pair.G);
            CHECK(std::set<PhaseVector>(gt.elements().begin(), gt.elements().end()) == brute_dual(pair.W.M, pair.G));
            CHECK(gt.order() * pair.G.order() == static_cast<std::size_t>(det));
        }
    }

    TEST_CASE("mirror symmetry on the suite")
    {
        for (const auto& in : suite::instances()) {
            if (!in.mirror) continue;
            CAPTURE(in.name);
            auto rep = verify_mirror(suite::pair_of(in));
            CHECK(rep.involution);
            CHECK(rep.j_in_dual);
            CHECK(rep.dual_in_sl);
            REQUIRE(rep.tables.size() == 2);
            for (const auto& t : rep.tables) CHECK(t.diffs.empty());
            CHECK(rep.ok);
        }
    }

    TEST_CASE("mirror of the chain quintic has the rotated diamond")
    {
        auto rep = verify_mirror(suite::pair_of({"", "x1^4*x2 + x2^4*x3 + x3^4*x4 + x4^4*x5 + x5^5", "J"}));
        REQUIRE(rep.ok);
        const auto& mirror = rep.tables[0].mirror;
        CHECK(mirror.at(1, 1) == 101);
        CHECK(mirror.at(1, 2) == 1);
        CHECK(mirror.at(2, 1) == 1);
        CHECK(mirror.at(3, 0) == 1);
        CHECK(rep.transposed_charges.w == std::vector<std::int64_t>{64, 48, 52, 51, 41});
        CHECK(rep.dual.order() == 256);
        BigradedDims once = mirror_rotate(rep.tables[0].original, 5);
        CHECK(mirror_rotate(once, 5) == rep.tables[0].original);
        CHECK(once == mirror);
    }

    TEST_CASE("mirror preconditions")
    {
        auto code_of = [](auto f) {
            try {
                f();
            } catch (const Error& e) {
                return e.code();
            }
            return ErrorCode::SyntaxError;
        };
        CHECK(code_of([] { verify_mirror(suite::pair_of({"", "x1^2*x2 + x2^2*x3 + x3^3", "Aut"})); }) ==
              ErrorCode::NotApplicable);
        CHECK(code_of([] { verify_mirror(suite::pair_of({"", "x1^3 + x2^3 + x3^3 + x1*x2*x3", "J"})); }) ==
              ErrorCode::NotApplicable);
    }
}
