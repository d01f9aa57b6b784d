#include "lgcy/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lgcy {

QMatrix to_rational(const IntMatrix& a)
{
    QMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto v : a[i]) out[i].emplace_back(v);
    return out;
}

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix transpose(const IntMatrix& a)
{
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), std::vector<std::int64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix c(a.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("matrix size mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
        }
    }
    return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rational inv = Rational(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(QMatrix a)
{
    if (a.empty()) return 0;
    return rref(a, a[0].size()).size();
}

std::optional<std::vector<Rational>> solve_unique(const QMatrix& a, const std::vector<Rational>& b)
{
    if (a.size() != b.size()) throw std::invalid_argument("solve_unique: size mismatch");
    std::size_t n = a.empty() ? 0 : a[0].size();
    QMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1 row
    if (pivots.size() != n) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& a)
{
    std::size_t n = a.size();
    QMatrix aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) aug[i].emplace_back(i == j ? 1 : 0);
    }
    auto pivots = rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    QMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return inv;
}

Rational determinant(const QMatrix& m)
{
    QMatrix a = m;
    std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

}  // namespace lgcy
