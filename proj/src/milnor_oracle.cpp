#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>

#include "lgcy/errors.hpp"
#include "lgcy/milnor.hpp"

namespace lgcy {

namespace {

using SparseRow = std::map<std::size_t, mpq_class>;

struct Term {
    mpq_class coeff;
    Exponents exps;
};

void monomials_of_degree(const std::vector<std::int64_t>& w, std::int64_t k, std::size_t bound,
                         std::vector<Exponents>& out)
{
    Exponents cur(w.size(), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
        if (j + 1 == w.size()) {
            if (left % w[j] != 0) return;
            cur[j] = static_cast<int>(left / w[j]);
            out.push_back(cur);
            if (out.size() > bound)
                throw Error(ErrorCode::InstanceTooLarge,
                            "graded slice of degree " + std::to_string(k) + " has more than " + std::to_string(bound) +
                                " monomials");
            return;
        }
        for (std::int64_t a = 0; a * w[j] <= left; ++a) {
            cur[j] = static_cast<int>(a);
            rec(j + 1, left - a * w[j]);
        }
        cur[j] = 0;
    };
    if (k < 0) return;
    if (w.empty()) {
        if (k == 0) out.emplace_back();
        return;
    }
    rec(0, k);
}

mpq_class to_mpq(const Rational& r)
{
    mpq_class q(mpz_class(std::to_string(r.num())), mpz_class(std::to_string(r.den())));
    q.canonicalize();
    return q;
}

class EchelonBasis {
public:
    // returns true if the row was independent
    bool insert(SparseRow row)
    {
        while (!row.empty()) {
            auto [col, lead] = *row.begin();
            auto it = rows_.find(col);
            if (it == rows_.end()) {
                mpq_class inv = 1 / lead;
                for (auto& [c, v] : row) v *= inv;
                rows_.emplace(col, std::move(row));
                return true;
            }
            mpq_class f = lead;
            for (const auto& [c, v] : it->second) {
                mpq_class& slot = row[c];
                slot -= f * v;
                if (slot == 0) row.erase(c);
            }
        }
        return false;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    std::map<std::size_t, SparseRow> rows_;
};

bool trivial_character(const Exponents& a, const std::vector<PhaseVector>& phases, bool with_volume_form)
{
    for (const auto& h : phases) {
        Rational s;
        for (std::size_t j = 0; j < a.size(); ++j) s += h[j] * Rational(a[j] + (with_volume_form ? 1 : 0));
        if (!s.is_integer()) return false;
    }
    return true;
}

}  // namespace

bool oracle_feasible(const std::vector<std::int64_t>& w, std::int64_t d, std::size_t max_slice_monomials)
{
    std::int64_t top = 0;
    for (auto wj : w) top += d - 2 * wj;
    try {
        for (std::int64_t k = 0; k <= top; ++k) {
            std::vector<Exponents> tmp;
            monomials_of_degree(w, k, max_slice_monomials, tmp);
        }
    } catch (const Error&) {
        return false;
    }
    return true;
}

std::vector<std::int64_t> milnor_oracle(const ExponentMatrix& m, const std::vector<std::int64_t>& w, std::int64_t d,
                                        const OracleOptions& opts)
{
    const std::size_t n = w.size();
    if (static_cast<std::size_t>(m.n()) != n) throw std::invalid_argument("milnor_oracle: weight count mismatch");

    std::vector<std::vector<Term>> partials(n);
    for (std::size_t i = 0; i < m.s(); ++i) {
        const auto& row = m.rows()[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            Term t{to_mpq(m.coefficients()[i]) * row[j], row};
            --t.exps[j];
            partials[j].push_back(std::move(t));
        }
    }

    std::int64_t top = 0, wmax = 0;
    for (auto wj : w) {
        top += d - 2 * wj;
        wmax = std::max(wmax, wj);
    }
    std::int64_t max_degree = opts.max_degree >= 0 ? opts.max_degree : top + wmax;
    const bool equivariant = !opts.invariant_under.empty();

    std::vector<std::int64_t> dims;
    for (std::int64_t k = 0; k <= max_degree; ++k) {
        std::vector<Exponents> all;
        monomials_of_degree(w, k, opts.max_slice_monomials, all);
        std::map<Exponents, std::size_t> column;
        for (const auto& a : all)
            if (!equivariant || trivial_character(a, opts.invariant_under, true)) column.emplace(a, column.size());

        EchelonBasis basis;
        for (std::size_t j = 0; j < n && basis.rank() < column.size(); ++j) {
            if (partials[j].empty()) continue;
            std::vector<Exponents> mults;
            monomials_of_degree(w, k - (d - w[j]), opts.max_slice_monomials, mults);
            for (const auto& mono : mults) {
                SparseRow row;
                bool keep = true;
                for (const auto& t : partials[j]) {
                    Exponents prod = t.exps;
                    for (std::size_t v = 0; v < n; ++v) prod[v] += mono[v];
                    auto it = column.find(prod);
                    if (it == column.end()) {
                        keep = false;  // character differs from the invariant one
                        break;
                    }
                    row[it->second] += t.coeff;
                }
                if (!keep) continue;
                for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
                basis.insert(std::move(row));
                if (basis.rank() == column.size()) break;
            }
        }
        dims.push_back(static_cast<std::int64_t>(column.size() - basis.rank()));
    }
    while (dims.size() > 1 && dims.back() == 0 && static_cast<std::int64_t>(dims.size()) - 1 > top) dims.pop_back();
    return dims;
}

}  // namespace lgcy
