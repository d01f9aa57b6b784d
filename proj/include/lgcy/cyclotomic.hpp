#pragma once

#include <cstdint>
#include <vector>

namespace lgcy {

// Element of Z[x]/(x^e - 1); x stands for exp(2 pi i / e).
class CyclotomicInt {
public:
    CyclotomicInt() = default;
    explicit CyclotomicInt(int e) : c_(static_cast<std::size_t>(e), 0) {}
    static CyclotomicInt monomial(int e, std::int64_t k, std::int64_t coeff = 1);

    int e() const { return static_cast<int>(c_.size()); }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t operator[](std::size_t k) const { return c_[k]; }
    bool is_zero() const;

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    // add coeff * x^k * o
    void add_shifted(const CyclotomicInt& o, std::int64_t k, std::int64_t coeff);
    CyclotomicInt shifted(std::int64_t k) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;

    friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

private:
    std::vector<std::int64_t> c_;
};

// Truncated polynomial in t with coefficients in Z[x]/(x^e - 1).
class CycloPoly {
public:
    CycloPoly(int e, std::size_t length) : e_(e), terms_(length, CyclotomicInt(e)) {}

    int e() const { return e_; }
    std::size_t length() const { return terms_.size(); }
    const CyclotomicInt& operator[](std::size_t k) const { return terms_[k]; }
    CyclotomicInt& operator[](std::size_t k) { return terms_[k]; }

    // *this *= (1 - x^k t^m), truncated
    void mul_binomial(std::int64_t k, std::size_t m);
    // exact series division by (1 - x^k t^m); returns false if the quotient of a
    // polynomial of the given degree is not a polynomial of degree deg - m
    bool div_binomial(std::int64_t k, std::size_t m, std::size_t deg);
    void resize(std::size_t length) { terms_.resize(length, CyclotomicInt(e_)); }

private:
    int e_;
    std::vector<CyclotomicInt> terms_;
};

// Integer coefficients of Phi_n, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

// Reduction of an element of Z[x]/(x^e - 1) modulo Phi_e, as coefficient vector.
std::vector<std::int64_t> reduce_mod_cyclotomic(const CyclotomicInt& a);

}  // namespace lgcy
