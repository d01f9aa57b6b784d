#include "lgcy/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "lgcy/errors.hpp"

namespace lgcy {

Diagram build_diagram(const ChargeData& c, const PhaseVector& g)
{
    Diagram dg;
    dg.g = g;
    dg.w = c.w;
    dg.d = c.d;
    dg.phase_sum = age(g);
    const std::size_t n = c.w.size();

    // angle -> radii of the dots on that ray
    std::map<Rational, std::vector<int>> rays;
    for (std::int64_t l = 0; l < c.d; ++l) rays[Rational(l, c.d)];
    for (std::size_t j = 0; j < n; ++j)
        for (std::int64_t k = 0; k < c.w[j]; ++k)
            rays[((g[j] + Rational(k)) / Rational(c.w[j])).frac()].push_back(static_cast<int>(j) + 1);
    for (auto& [angle, radii] : rays) {
        if (!(angle * Rational(c.d)).is_integer()) radii.push_back(static_cast<int>(n) + 1);
        std::sort(radii.begin(), radii.end());
    }

    std::int64_t r_count = -1, d_count = -1;
    for (const auto& [angle, radii] : rays) {
        DiagramElement ray;
        ray.kind = ElementKind::Ray;
        ray.angle = angle;
        ray.in_mu_d = (angle * Rational(c.d)).is_integer();
        ray.R = ++r_count;
        ray.D = d_count;
        ray.dot_count = radii.size();
        std::size_t ray_index = dg.elements.size();
        dg.rays.push_back(ray_index);
        dg.elements.push_back(ray);
        for (std::size_t i = 0; i < radii.size(); ++i) {
            DiagramElement dot;
            dot.kind = ElementKind::Dot;
            dot.angle = angle;
            dot.radius = radii[i];
            dot.in_mu_d = ray.in_mu_d;
            dot.R = r_count;
            dot.D = ++d_count;
            dot.ray = ray_index;
            dot.extremal = i + 1 == radii.size();
            dg.dots.push_back(dg.elements.size());
            dg.elements.push_back(dot);
        }
    }
    return dg;
}

Rational element_degree(const Diagram& dg, std::size_t element)
{
    const auto& e = dg.elements.at(element);
    if (!e.internal() && !e.empty_ray())
        throw Error(ErrorCode::NotApplicable, "degree formula applies only to internal dots and empty rays");
    return Rational(2) * (dg.phase_sum + Rational(e.D - e.R));
}

std::vector<std::pair<std::size_t, std::size_t>> match_internal_to_empty(const Diagram& dg)
{
    // per level of F, pair internal dots and empty rays in the order they occur
    std::map<std::int64_t, std::vector<std::size_t>> internal, empty;
    for (std::size_t i = 0; i < dg.elements.size(); ++i) {
        const auto& e = dg.elements[i];
        if (e.internal()) internal[e.F()].push_back(i);
        if (e.empty_ray()) empty[e.F()].push_back(i);
    }
    std::set<std::int64_t> levels;
    for (const auto& kv : internal) levels.insert(kv.first);
    for (const auto& kv : empty) levels.insert(kv.first);

    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto v : levels) {
        const auto& a = internal[v];
        const auto& b = empty[v];
        if (a.size() != b.size())
            throw Error(ErrorCode::MatchingImpossible, "level F=" + std::to_string(v) + " has " + std::to_string(a.size()) +
                                                           " internal dots and " + std::to_string(b.size()) + " empty rays");
        for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i], b[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

std::int64_t r_tilde(const Diagram& dg, std::size_t element)
{
    const auto& e = dg.elements.at(element);
    if (e.in_mu_d) return (e.angle * Rational(dg.d)).num();
    if (e.kind == ElementKind::Ray) throw Error(ErrorCode::NotApplicable, "ray outside mu_d");
    for (std::size_t i = element + 1; i < dg.elements.size(); ++i) {
        const auto& x = dg.elements[i];
        if (x.kind == ElementKind::Ray && x.in_mu_d) return (x.angle * Rational(dg.d)).num();
    }
    return dg.d;
}

std::int64_t d_tilde(const Diagram& dg, std::size_t element)
{
    const int n = static_cast<int>(dg.w.size());
    const auto& e = dg.elements.at(element);
    if (e.kind == ElementKind::Dot && e.radius > n) throw Error(ErrorCode::NotApplicable, "dot of radius N+1");
    std::int64_t count = -1;
    for (std::size_t i = 0; i <= element; ++i) {
        const auto& x = dg.elements[i];
        if (x.kind == ElementKind::Dot && x.radius <= n) ++count;
    }
    return count;
}

}  // namespace detail

namespace {

std::string where(const Diagram& dg, const DiagramElement& e)
{
    std::ostringstream os;
    os << "coset " << dg.g.str() << ", " << (e.kind == ElementKind::Ray ? "ray" : "dot") << " at angle "
       << e.angle.pretty();
    if (e.kind == ElementKind::Dot) os << " radius " << e.radius;
    return os.str();
}

}  // namespace

DiagramCheck cross_check(const Diagram& dg, const LgPair& pair, const StateSpace& cr_space, const StateSpace& fjrw_space)
{
    DiagramCheck out;
    auto fail = [&](const std::string& msg) {
        out.ok = false;
        out.failures.push_back(msg);
    };

    std::map<PhaseVector, const Sector*> lg;
    for (const auto& s : fjrw_space.sectors) lg[s.gamma] = &s;
    std::map<Rational, const Sector*> cy;
    for (const auto& s : cr_space.sectors)
        if (s.coset_rep == dg.g) cy[s.s] = &s;

    out.rays = dg.rays.size();
    out.dots = dg.dots.size();
    if (out.rays != out.dots)
        fail("coset " + dg.g.str() + ": " + std::to_string(out.rays) + " rays but " + std::to_string(out.dots) + " dots");
    if (!dg.elements.empty() && dg.elements.back().F() != 0) fail("coset " + dg.g.str() + ": F does not return to 0");

    std::size_t dotted_rays = 0;
    for (std::size_t idx : dg.rays) {
        const auto& ray = dg.elements[idx];
        Rational s = (-ray.angle).frac();
        if (ray.empty_ray()) ++out.empty_rays;
        else ++dotted_rays;

        // dots on this ray, inner first
        std::vector<std::size_t> on_ray;
        for (std::size_t k = idx + 1; k < dg.elements.size() && dg.elements[k].kind == ElementKind::Dot; ++k)
            on_ray.push_back(k);
        out.internal_dots += on_ray.empty() ? 0 : on_ray.size() - 1;

        const Sector* cs = nullptr;
        if (!ray.empty_ray()) {
            auto it = cy.find(s);
            if (it == cy.end()) {
                fail(where(dg, ray) + ": no Chen-Ruan sector");
                continue;
            }
            cs = it->second;
            // i-th internal dot is the i-th hyperplane class of the sector
            for (std::size_t i = 0; i + 1 < on_ray.size(); ++i) {
                Rational deg = element_degree(dg, on_ray[i]);
                Rational expect = Rational(2) * (Rational(static_cast<std::int64_t>(i)) + cs->age);
                if (deg != expect)
                    fail(where(dg, dg.elements[on_ray[i]]) + ": degree " + deg.pretty() + ", sector gives " + expect.pretty());
                if (cs->dims.at(Rational(static_cast<std::int64_t>(i)) + cs->age,
                                Rational(static_cast<std::int64_t>(i)) + cs->age) == 0)
                    fail(where(dg, dg.elements[on_ray[i]]) + ": sector has no class of that bidegree");
            }
        }

        if (ray.in_mu_d) {
            std::int64_t l = (ray.angle * Rational(dg.d)).num();
            PhaseVector gamma = dg.g - pair.J * l;
            auto it = lg.find(gamma);
            if (it == lg.end()) {
                fail(where(dg, ray) + ": no FJRW sector " + gamma.str());
                continue;
            }
            const Sector* ls = it->second;
            if (static_cast<std::size_t>(ls->n_gamma) != ray.dot_count)
                fail(where(dg, ray) + ": " + std::to_string(ray.dot_count) + " dots but N_gamma = " + std::to_string(ls->n_gamma));
            if (ray.empty_ray()) {
                if (ls->kind != SectorKind::NeveuSchwarz) fail(where(dg, ray) + ": empty ray but sector is not Neveu-Schwarz");
                Rational deg = element_degree(dg, idx);
                Rational expect = Rational(2) * (ls->age - 1);
                if (deg != expect) fail(where(dg, ray) + ": degree " + deg.pretty() + ", NS generator has " + expect.pretty());
            } else {
                if (cs->gamma != gamma) fail(where(dg, ray) + ": sector elements differ");
                if (cs->kind != SectorKind::Transversal && cs->kind != SectorKind::Empty)
                    fail(where(dg, ray) + ": expected a transversal sector");
                if (cs->primitive != ls->dims) fail(where(dg, ray) + ": primitive part differs from the Ramond sector");
            }
        } else {
            if (!cs) continue;
            if (cs->kind != SectorKind::NonTransversal) fail(where(dg, ray) + ": expected a non-transversal sector");
            if (static_cast<std::size_t>(cs->n_gamma) + 1 != ray.dot_count)
                fail(where(dg, ray) + ": " + std::to_string(ray.dot_count) + " dots but N_gamma + 1 = " +
                     std::to_string(cs->n_gamma + 1));
            if (!cs->primitive.empty()) fail(where(dg, ray) + ": non-transversal sector with primitive classes");
        }
    }
    if (dotted_rays != cy.size())
        fail("coset " + dg.g.str() + ": " + std::to_string(dotted_rays) + " dotted rays but " + std::to_string(cy.size()) +
             " Chen-Ruan sectors");

    try {
        auto matching = match_internal_to_empty(dg);
        for (const auto& [a, b] : matching)
            if (dg.elements[a].F() != dg.elements[b].F()) fail("matching does not preserve F");
        if (matching.size() != out.internal_dots || matching.size() != out.empty_rays)
            fail("coset " + dg.g.str() + ": matching is not a bijection");
    } catch (const Error& e) {
        fail(e.what());
    }
    return out;
}

}  // namespace lgcy
