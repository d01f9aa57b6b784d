#include "lgcy/smith.hpp"

#include <cstdlib>
#include <utility>

namespace lgcy {

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f)
{
    for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] = checked_add(m[dst][j], checked_mul(-f, m[src][j]));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t f)
{
    for (auto& row : m) row[dst] = checked_add(row[dst], checked_mul(-f, row[src]));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithForm out;
    IntMatrix& s = out.S;
    s = a;
    std::size_t m = s.size();
    std::size_t n = m ? s[0].size() : 0;
    out.U = identity_matrix(m);
    out.V = identity_matrix(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the remaining block goes to (t,t)
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (s[i][j] != 0 && (pi == m || std::llabs(s[i][j]) < std::llabs(s[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) break;
            if (pi != t) {
                std::swap(s[pi], s[t]);
                std::swap(out.U[pi], out.U[t]);
            }
            if (pj != t) {
                swap_cols(s, pj, t);
                swap_cols(out.V, pj, t);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                std::int64_t q = s[i][t] / s[t][t];
                if (q != 0) {
                    row_axpy(s, i, t, q);
                    row_axpy(out.U, i, t, q);
                }
                if (s[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                std::int64_t q = s[t][j] / s[t][t];
                if (q != 0) {
                    col_axpy(s, j, t, q);
                    col_axpy(out.V, j, t, q);
                }
                if (s[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into row t and go again
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (s[i][j] % s[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            row_axpy(s, t, bad, -1);
            row_axpy(out.U, t, bad, -1);
        }
        if (t < m && t < n && s[t][t] < 0) {
            for (auto& v : s[t]) v = -v;
            for (auto& v : out.U[t]) v = -v;
        }
    }

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        out.diagonal.push_back(s[t][t]);
        if (s[t][t] != 0) ++out.rank;
    }
    return out;
}

}  // namespace lgcy
