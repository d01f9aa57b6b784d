#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lgcy/rational.hpp"

namespace lgcy {

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using QMatrix = std::vector<std::vector<Rational>>;

QMatrix to_rational(const IntMatrix& a);
IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& a);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

std::size_t rank(QMatrix a);

// Unique solution of a*x = b, or nullopt if inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_unique(const QMatrix& a, const std::vector<Rational>& b);

std::optional<QMatrix> inverse(const QMatrix& a);

Rational determinant(const QMatrix& a);

}  // namespace lgcy
