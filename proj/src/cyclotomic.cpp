#include "lgcy/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "lgcy/rational.hpp"

namespace lgcy {

namespace {

std::int64_t mod_e(std::int64_t k, int e)
{
    std::int64_t r = k % e;
    return r < 0 ? r + e : r;
}

// Exact division of integer polynomials, b monic.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b)
{
    std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("poly_div_exact: degree too small");
    std::vector<std::int64_t> q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = checked_add(a[i - db + j], checked_mul(-c, b[j]));
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace

CyclotomicInt CyclotomicInt::monomial(int e, std::int64_t k, std::int64_t coeff)
{
    CyclotomicInt r(e);
    r.c_[static_cast<std::size_t>(mod_e(k, e))] = coeff;
    return r;
}

bool CyclotomicInt::is_zero() const
{
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
    return *this;
}

void CyclotomicInt::add_shifted(const CyclotomicInt& o, std::int64_t k, std::int64_t coeff)
{
    int e = this->e();
    std::size_t shift = static_cast<std::size_t>(mod_e(k, e));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (o.c_[i] == 0) continue;
        std::size_t t = i + shift;
        if (t >= c_.size()) t -= c_.size();
        c_[t] = checked_add(c_[t], checked_mul(coeff, o.c_[i]));
    }
}

CyclotomicInt CyclotomicInt::shifted(std::int64_t k) const
{
    CyclotomicInt r(e());
    r.add_shifted(*this, k, 1);
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const
{
    CyclotomicInt r(e());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) r.add_shifted(o, static_cast<std::int64_t>(i), c_[i]);
    return r;
}

void CycloPoly::mul_binomial(std::int64_t k, std::size_t m)
{
    for (std::size_t n = terms_.size(); n-- > m;) terms_[n].add_shifted(terms_[n - m], k, -1);
}

bool CycloPoly::div_binomial(std::int64_t k, std::size_t m, std::size_t deg)
{
    // Q_n = P_n + x^k Q_{n-m}
    std::size_t upto = std::min(deg, terms_.size() - 1);
    for (std::size_t n = m; n <= upto; ++n) terms_[n].add_shifted(terms_[n - m], k, 1);
    if (deg < m) return false;
    for (std::size_t n = deg - m + 1; n <= upto; ++n)
        if (!terms_[n].is_zero()) return false;
    return true;
}

std::vector<std::int64_t> cyclotomic_polynomial(int n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::mutex mu;
    static std::map<int, std::vector<std::int64_t>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

std::vector<std::int64_t> reduce_mod_cyclotomic(const CyclotomicInt& a)
{
    const auto phi = cyclotomic_polynomial(a.e());
    std::size_t dp = phi.size() - 1;
    std::vector<std::int64_t> r = a.coeffs();
    for (std::size_t i = r.size(); i-- > dp;) {
        std::int64_t c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dp; ++j) r[i - dp + j] = checked_add(r[i - dp + j], checked_mul(-c, phi[j]));
    }
    r.resize(dp);
    return r;
}

}  // namespace lgcy
