#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lgcy/state_spaces.hpp"
#include "lgcy/symmetry.hpp"

namespace lgcy {

enum class ElementKind { Ray, Dot };

struct DiagramElement {
    ElementKind kind = ElementKind::Ray;
    Rational angle;          // in [0,1)
    int radius = 0;          // dots only: 1..N for coordinate dots, N+1 for the extra dot
    std::int64_t D = 0;
    std::int64_t R = 0;
    std::size_t ray = 0;     // dots: element index of the ray carrying the dot
    std::size_t dot_count = 0;  // rays only
    bool in_mu_d = false;    // angle * d is an integer
    bool extremal = false;   // dots only
    bool internal() const { return kind == ElementKind::Dot && !extremal; }
    bool empty_ray() const { return kind == ElementKind::Ray && dot_count == 0; }
    std::int64_t F() const { return D - R; }
};

struct Diagram {
    PhaseVector g;
    std::vector<std::int64_t> w;
    std::int64_t d = 1;
    Rational phase_sum;                    // sum of the phases of g
    std::vector<DiagramElement> elements;  // in the total order
    std::vector<std::size_t> rays;
    std::vector<std::size_t> dots;
};

Diagram build_diagram(const ChargeData& c, const PhaseVector& g);

// 2 (sum s_j + D - R); throws NotApplicable for extremal dots and nonempty rays.
Rational element_degree(const Diagram& diagram, std::size_t element);

// F-preserving bijection (internal dot, empty ray), by element index.
std::vector<std::pair<std::size_t, std::size_t>> match_internal_to_empty(const Diagram& diagram);

struct DiagramCheck {
    bool ok = true;
    std::vector<std::string> failures;
    std::size_t rays = 0, dots = 0, internal_dots = 0, empty_rays = 0;
};

// Compares the diagram of coset representative `diagram.g` with both state spaces.
DiagramCheck cross_check(const Diagram& diagram, const LgPair& pair, const StateSpace& cr_space,
                         const StateSpace& fjrw_space);

namespace detail {
// Variants of R and D counting only rays of mu_d and dots of radius at most N.
std::int64_t r_tilde(const Diagram& diagram, std::size_t element);
std::int64_t d_tilde(const Diagram& diagram, std::size_t element);
}  // namespace detail

}  // namespace lgcy
