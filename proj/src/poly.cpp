#include "lgcy/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lgcy/errors.hpp"

namespace lgcy {

ExponentMatrix::ExponentMatrix(int n, std::vector<Exponents> rows, std::vector<Rational> coefficients) : n_(n)
{
    if (n < 0) throw std::invalid_argument("negative variable count");
    if (coefficients.empty()) coefficients.assign(rows.size(), Rational(1));
    if (coefficients.size() != rows.size()) throw std::invalid_argument("coefficient count does not match rows");

    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("exponent row has wrong length");
        for (int e : rows[i])
            if (e < 0) throw std::invalid_argument("negative exponent");
        if (coefficients[i].is_zero()) throw std::invalid_argument("zero coefficient");
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a] > rows[b]; });
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && rows[order[k]] == rows[order[k - 1]]) {
            std::ostringstream msg;
            msg << "monomial with exponents (";
            for (int j = 0; j < n; ++j) msg << (j ? "," : "") << rows[order[k]][static_cast<std::size_t>(j)];
            msg << ") appears twice";
            throw Error(ErrorCode::DuplicateMonomial, msg.str());
        }
        rows_.push_back(rows[order[k]]);
        coeffs_.push_back(coefficients[order[k]]);
    }
}

bool ExponentMatrix::unit_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == Rational(1); });
}

IntMatrix ExponentMatrix::matrix() const
{
    IntMatrix m;
    for (const auto& r : rows_) m.emplace_back(r.begin(), r.end());
    return m;
}

std::size_t ExponentMatrix::rank() const { return lgcy::rank(to_rational(matrix())); }

ChargeData charges(const ExponentMatrix& m)
{
    if (m.empty() || m.n() == 0) throw Error(ErrorCode::NotQuasihomogeneous, "empty polynomial");
    auto q = solve_unique(to_rational(m.matrix()), std::vector<Rational>(m.s(), Rational(1)));
    if (!q) throw Error(ErrorCode::NotQuasihomogeneous, "M q = 1 has no unique rational solution");

    ChargeData c;
    c.q = *q;
    c.d = 1;
    for (const auto& qj : c.q) {
        if (qj <= Rational(0)) throw Error(ErrorCode::NonPositiveCharge, "charge " + qj.pretty() + " is not positive");
        c.d = lcm64(c.d, qj.den());
        if (qj > Rational(1, 2)) c.large_charge = true;
    }
    Rational sum;
    for (const auto& qj : c.q) {
        c.w.push_back((qj * Rational(c.d)).num());
        sum += qj;
    }
    c.cy = sum == Rational(1);
    return c;
}

std::vector<Rational> charges_from_inverse(const ExponentMatrix& m)
{
    if (m.s() != static_cast<std::size_t>(m.n())) throw Error(ErrorCode::NotInvertible, "exponent matrix is not square");
    auto inv = inverse(to_rational(m.matrix()));
    if (!inv) throw Error(ErrorCode::NotInvertible, "exponent matrix is singular");
    std::vector<Rational> q;
    for (const auto& row : *inv) {
        Rational s;
        for (const auto& x : row) s += x;
        q.push_back(s);
    }
    return q;
}

bool is_calabi_yau(const ChargeData& c)
{
    Rational s;
    for (const auto& q : c.q) s += q;
    return s == Rational(1);
}

namespace {

struct HeadChoice {
    int head;
    int tail;  // -1 when the monomial is a pure power
    int exponent;
};

std::vector<HeadChoice> head_candidates(const Exponents& row)
{
    std::vector<int> support;
    for (int j = 0; j < static_cast<int>(row.size()); ++j)
        if (row[static_cast<std::size_t>(j)] != 0) support.push_back(j);
    std::vector<HeadChoice> out;
    if (support.size() == 1) {
        int j = support[0];
        out.push_back({j, -1, row[static_cast<std::size_t>(j)]});
    } else if (support.size() == 2) {
        int a = support[0], b = support[1];
        if (row[static_cast<std::size_t>(b)] == 1) out.push_back({a, b, row[static_cast<std::size_t>(a)]});
        if (row[static_cast<std::size_t>(a)] == 1) out.push_back({b, a, row[static_cast<std::size_t>(b)]});
    }
    return out;
}

std::optional<std::vector<Atom>> atoms_from(const std::vector<HeadChoice>& by_head)
{
    int n = static_cast<int>(by_head.size());
    std::vector<int> tail(static_cast<std::size_t>(n)), indeg(static_cast<std::size_t>(n), 0);
    for (int h = 0; h < n; ++h) {
        tail[static_cast<std::size_t>(h)] = by_head[static_cast<std::size_t>(h)].tail;
        if (tail[static_cast<std::size_t>(h)] >= 0 && ++indeg[static_cast<std::size_t>(tail[static_cast<std::size_t>(h)])] > 1)
            return std::nullopt;
    }
    auto exp_of = [&](int v) { return by_head[static_cast<std::size_t>(v)].exponent; };

    std::vector<Atom> atoms;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        if (indeg[static_cast<std::size_t>(v)] != 0) continue;
        Atom a;
        for (int x = v; x >= 0; x = tail[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            a.vars.push_back(x);
            a.exponents.push_back(exp_of(x));
        }
        if (a.exponents.back() < 2) return std::nullopt;
        a.type = a.vars.size() == 1 ? AtomType::Fermat : AtomType::Chain;
        atoms.push_back(std::move(a));
    }
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        Atom a;
        a.type = AtomType::Loop;
        for (int x = v; !seen[static_cast<std::size_t>(x)]; x = tail[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            a.vars.push_back(x);
            a.exponents.push_back(exp_of(x));
            if (exp_of(x) < 2) return std::nullopt;
        }
        atoms.push_back(std::move(a));
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
        return *std::min_element(a.vars.begin(), a.vars.end()) < *std::min_element(b.vars.begin(), b.vars.end());
    });
    return atoms;
}

}  // namespace

AtomicDecomposition atomic_decomposition(const ExponentMatrix& m)
{
    std::size_t n = static_cast<std::size_t>(m.n());
    if (m.s() != n) throw Error(ErrorCode::NotInvertible, "number of monomials differs from number of variables");
    if (determinant(to_rational(m.matrix())).is_zero()) throw Error(ErrorCode::NotInvertible, "exponent matrix is singular");
    if (!m.unit_coefficients()) throw Error(ErrorCode::NotInvertible, "invertible polynomials must have unit coefficients");

    std::vector<std::vector<HeadChoice>> cands;
    for (const auto& row : m.rows()) cands.push_back(head_candidates(row));

    std::vector<HeadChoice> by_head(n);
    std::vector<std::size_t> head_row(n);
    std::vector<bool> used(n, false);
    std::optional<std::vector<Atom>> found;

    std::function<bool(std::size_t)> assign = [&](std::size_t r) {
        if (r == n) {
            found = atoms_from(by_head);
            return found.has_value();
        }
        for (const auto& c : cands[r]) {
            auto h = static_cast<std::size_t>(c.head);
            if (used[h]) continue;
            used[h] = true;
            by_head[h] = c;
            head_row[h] = r;
            if (assign(r + 1)) return true;
            used[h] = false;
        }
        return false;
    };
    if (!assign(0)) throw Error(ErrorCode::NotNondegenerate, "no decomposition into Fermat, loop and chain atoms");

    AtomicDecomposition out;
    out.atoms = std::move(*found);
    out.head_row = head_row;
    return out;
}

std::string describe(const Atom& atom)
{
    std::ostringstream os;
    switch (atom.type) {
    case AtomType::Fermat: os << "Fermat"; break;
    case AtomType::Loop: os << "Loop"; break;
    case AtomType::Chain: os << "Chain"; break;
    }
    os << "(";
    for (std::size_t i = 0; i < atom.exponents.size(); ++i) os << (i ? "," : "") << atom.exponents[i];
    os << ") on ";
    for (std::size_t i = 0; i < atom.vars.size(); ++i) os << (i ? "," : "") << "x" << atom.vars[i] + 1;
    return os.str();
}

ExponentMatrix restrict(const ExponentMatrix& m, const std::vector<int>& fixed)
{
    std::vector<bool> keep(static_cast<std::size_t>(m.n()), false);
    for (int j : fixed) keep.at(static_cast<std::size_t>(j)) = true;
    std::vector<Exponents> rows;
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < m.s(); ++i) {
        const auto& row = m.rows()[i];
        bool inside = true;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0 && !keep[j]) inside = false;
        if (!inside) continue;
        Exponents r;
        for (int j : fixed) r.push_back(row[static_cast<std::size_t>(j)]);
        rows.push_back(std::move(r));
        coeffs.push_back(m.coefficients()[i]);
    }
    return ExponentMatrix(static_cast<int>(fixed.size()), std::move(rows), std::move(coeffs));
}

}  // namespace lgcy
