#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lgcy/poly.hpp"
#include "lgcy/rational.hpp"

namespace lgcy {

// Diagonal symmetry as a point of (Q/Z)^N; entry t stands for exp(2 pi i t).
class PhaseVector {
public:
    PhaseVector() = default;
    explicit PhaseVector(std::size_t n) : v_(n) {}
    explicit PhaseVector(std::vector<Rational> entries);  // reduced mod 1

    std::size_t size() const { return v_.size(); }
    const Rational& operator[](std::size_t j) const { return v_[j]; }
    const std::vector<Rational>& entries() const { return v_; }

    bool is_zero() const;
    std::int64_t order() const;  // lcm of denominators

    PhaseVector operator+(const PhaseVector& o) const;
    PhaseVector operator-(const PhaseVector& o) const;
    PhaseVector operator-() const;
    PhaseVector operator*(std::int64_t k) const;

    friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
    friend bool operator<(const PhaseVector& a, const PhaseVector& b) { return a.v_ < b.v_; }

    std::string str() const;  // "(1/12,5/6,1/3)"

private:
    std::vector<Rational> v_;
};

struct PhaseVectorHash {
    std::size_t operator()(const PhaseVector& p) const noexcept;
};

inline constexpr std::size_t kDefaultMaxGroupOrder = 1000000;

class SymmetryGroup {
public:
    SymmetryGroup() = default;
    // Closure of the generators; throws GroupTooLarge past max_order elements.
    static SymmetryGroup generate(std::size_t n, std::vector<PhaseVector> generators,
                                  std::size_t max_order = kDefaultMaxGroupOrder);

    std::size_t n() const { return n_; }
    const std::vector<PhaseVector>& generators() const { return gens_; }
    const std::vector<PhaseVector>& elements() const { return elements_; }  // sorted
    std::size_t order() const { return elements_.size(); }
    std::int64_t exponent() const { return exponent_; }
    bool contains(const PhaseVector& g) const;
    bool is_subgroup_of(const SymmetryGroup& other) const;

    friend bool operator==(const SymmetryGroup& a, const SymmetryGroup& b) { return a.elements_ == b.elements_; }

private:
    std::size_t n_ = 0;
    std::vector<PhaseVector> gens_;
    std::vector<PhaseVector> elements_;
    std::int64_t exponent_ = 1;
};

SymmetryGroup aut_group(const ExponentMatrix& m, std::size_t max_order = kDefaultMaxGroupOrder);
PhaseVector j_element(const ChargeData& c);
SymmetryGroup sl_subgroup(const SymmetryGroup& g, std::size_t max_order = kDefaultMaxGroupOrder);
SymmetryGroup group_from_generators(std::size_t n, std::vector<PhaseVector> gens,
                                    std::size_t max_order = kDefaultMaxGroupOrder);
bool contains(const SymmetryGroup& g, const PhaseVector& x);

struct CosetList {
    std::vector<PhaseVector> representatives;
};

// Lexicographically minimal representative of each coset of <J>; throws JNotInGroup.
CosetList cosets(const SymmetryGroup& g, const PhaseVector& j);

// (s w_j mod 1)_j
PhaseVector lambda_bar(const Rational& s, const std::vector<std::int64_t>& w);

struct FixedData {
    std::vector<int> fixed;
    int n_gamma = 0;
};

FixedData fixed_data(const PhaseVector& gamma);
Rational age(const PhaseVector& gamma);
Rational hypersurface_age(const PhaseVector& g, const Rational& s, const std::vector<std::int64_t>& w, std::int64_t d);
Rational det_twist(const PhaseVector& gamma, const std::vector<int>& fixed);

}  // namespace lgcy
