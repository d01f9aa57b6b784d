#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgcy/linalg.hpp"
#include "lgcy/rational.hpp"

namespace lgcy {

using Exponents = std::vector<int>;

// Monomials of W as rows of exponents, with coefficients.
// Rows are kept in canonical order: lexicographically decreasing, so that
// x1^4*x2 comes before x2^4*x3.
class ExponentMatrix {
public:
    ExponentMatrix() = default;
    // Throws DuplicateMonomial on repeated rows, std::invalid_argument on
    // negative exponents or ragged rows. Missing coefficients default to 1.
    ExponentMatrix(int n, std::vector<Exponents> rows, std::vector<Rational> coefficients = {});

    int n() const { return n_; }
    std::size_t s() const { return rows_.size(); }
    const std::vector<Exponents>& rows() const { return rows_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool empty() const { return rows_.empty(); }
    bool unit_coefficients() const;

    IntMatrix matrix() const;
    std::size_t rank() const;

    friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Exponents> rows_;
    std::vector<Rational> coeffs_;
};

struct ChargeData {
    std::vector<Rational> q;
    std::vector<std::int64_t> w;
    std::int64_t d = 1;
    bool cy = false;
    bool large_charge = false;  // some q_j > 1/2
};

ChargeData charges(const ExponentMatrix& m);
// Row sums of M^{-1}; only for square invertible M.
std::vector<Rational> charges_from_inverse(const ExponentMatrix& m);
bool is_calabi_yau(const ChargeData& c);

enum class AtomType { Fermat, Loop, Chain };

struct Atom {
    AtomType type = AtomType::Fermat;
    std::vector<int> vars;       // chain: from the free end towards x^a; loop: cyclic order
    std::vector<int> exponents;  // head exponent of each variable, same order
};

struct AtomicDecomposition {
    std::vector<Atom> atoms;
    std::vector<std::size_t> head_row;  // head_row[j] = row of M headed by x_j
};

AtomicDecomposition atomic_decomposition(const ExponentMatrix& m);
std::string describe(const Atom& atom);

// Exponent matrix of W restricted to the given coordinates, in that order.
ExponentMatrix restrict(const ExponentMatrix& m, const std::vector<int>& fixed);

}  // namespace lgcy
