#pragma once

#include <cstdint>
#include <vector>

#include "lgcy/linalg.hpp"

namespace lgcy {

// U * A * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ... , s_i > 0
// for i < rank and zero afterwards.
struct SmithForm {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;
    std::vector<std::int64_t> diagonal;  // first min(rows, cols) diagonal entries
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace lgcy
