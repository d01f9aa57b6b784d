#include "lgcy/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lgcy {

json to_json(const Rational& r) { return r.str(); }

json to_json(const PhaseVector& v)
{
    json a = json::array();
    for (const auto& x : v.entries()) a.push_back(x.str());
    return a;
}

json to_json(const BigradedDims& dims)
{
    json a = json::array();
    for (const auto& [k, v] : dims.entries()) a.push_back(json::array({k.first.str(), k.second.str(), v}));
    return a;
}

json to_json(const ChargeData& c)
{
    json q = json::array();
    for (const auto& x : c.q) q.push_back(x.str());
    return {{"w", c.w}, {"d", c.d}, {"q", q}, {"cy", c.cy}};
}

json to_json(const Sector& s)
{
    json label;
    label["gamma"] = to_json(s.gamma);
    if (s.side == Side::CY) {
        label["coset"] = to_json(s.coset_rep);
        label["s"] = s.s.str();
    }
    return {{"side", to_string(s.side)}, {"label", label},         {"N_gamma", s.n_gamma},
            {"age", s.age.str()},        {"kind", to_string(s.kind)}, {"dims", to_json(s.dims)}};
}

json to_json(const std::vector<DimDiff>& diffs)
{
    json a = json::array();
    for (const auto& d : diffs) a.push_back(json::array({d.p.str(), d.q.str(), d.left, d.right}));
    return a;
}

json to_json(const DiagramCheck& check, const PhaseVector& coset)
{
    return {{"coset", to_json(coset)},
            {"pass", check.ok},
            {"rays", check.rays},
            {"dots", check.dots},
            {"internal_dots", check.internal_dots},
            {"empty_rays", check.empty_rays},
            {"failures", check.failures}};
}

json to_json(const MirrorReport& r)
{
    json gens = json::array();
    for (const auto& g : r.dual.generators()) gens.push_back(to_json(g));
    json tables = json::object();
    for (const auto& t : r.tables)
        tables[t.name] = {{"original", to_json(t.original)}, {"mirror", to_json(t.mirror)}, {"diffs", to_json(t.diffs)}};
    return {{"pass", r.ok},
            {"transpose", {{"charges", to_json(r.transposed_charges)}}},
            {"dual_group", {{"order", r.dual.order()}, {"generators", gens}}},
            {"j_in_dual", r.j_in_dual},
            {"dual_in_sl", r.dual_in_sl},
            {"involution", r.involution},
            {"tables", tables}};
}

std::string dims_line(const BigradedDims& dims)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : dims.entries()) {
        os << (first ? "" : " ") << "h^{" << k.first.pretty() << "," << k.second.pretty() << "}=" << v;
        first = false;
    }
    return first ? "-" : os.str();
}

std::string sector_table(const StateSpace& space)
{
    std::ostringstream os;
    for (const auto& s : space.sectors) {
        os << "  " << (s.side == Side::LG ? "gamma=" : "coset=");
        if (s.side == Side::LG) os << s.gamma.str();
        else os << s.coset_rep.str() << " s=" << s.s.pretty() << " gamma=" << s.gamma.str();
        os << "  N=" << s.n_gamma << "  age=" << s.age.pretty() << "  " << to_string(s.kind) << "  "
           << dims_line(s.dims) << "\n";
    }
    return os.str();
}

std::string hodge_diamond(const BigradedDims& dims, int n)
{
    std::size_t width = 1;
    for (const auto& [k, v] : dims.entries()) width = std::max(width, std::to_string(v).size());
    width += 1;
    std::ostringstream os;
    for (int k = 2 * n; k >= 0; --k) {
        std::string line(static_cast<std::size_t>(2 * n + 1) * width, ' ');
        for (int p = std::min(k, n); p >= std::max(0, k - n); --p) {
            int q = k - p;
            std::string cell = std::to_string(dims.at(Rational(p), Rational(q)));
            std::size_t slot = static_cast<std::size_t>(q - p + n) * width;
            line.replace(slot + (width - cell.size()) / 2, cell.size(), cell);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        os << line << "\n";
    }
    return os.str();
}

namespace {

std::string fmt(const char* f, double a, double b)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string diagram_svg(const Diagram& dg, const std::string& title)
{
    const double size = 480, cx = 240, cy = 250;
    const int n = static_cast<int>(dg.w.size());
    const double unit = 200.0 / (n + 1.5);
    const double two_pi = 6.283185307179586;
    auto pos = [&](double r, const Rational& angle) {
        double t = two_pi * static_cast<double>(angle.num()) / static_cast<double>(angle.den());
        return std::make_pair(cx + r * unit * std::cos(t), cy - r * unit * std::sin(t));
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size + 20
       << "\" viewBox=\"0 0 " << size << " " << size + 20 << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">" << xml_escape(title) << "</text>\n";

    for (int r = 1; r <= n + 1; ++r)
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r * unit
           << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4,4\"/>\n";

    for (std::size_t idx : dg.rays) {
        const auto& ray = dg.elements[idx];
        auto [x, y] = pos(n + 1.5, ray.angle);
        os << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x << "\" y2=\"" << y << "\" stroke=\""
           << (ray.empty_ray() ? "#1f5fbf" : "black") << "\" stroke-width=\"1.5\"/>\n";
        auto [lx, ly] = pos(n + 1.8, ray.angle);
        os << "<text" << fmt(" x=\"%.2f\" y=\"%.2f\"", lx - 8, ly + 4)
           << " font-family=\"sans-serif\" font-size=\"10\">" << ray.angle.pretty() << "</text>\n";
    }
    for (std::size_t idx : dg.dots) {
        const auto& dot = dg.elements[idx];
        auto [x, y] = pos(dot.radius, dot.angle);
        os << "<circle" << fmt(" cx=\"%.2f\" cy=\"%.2f\"", x, y) << " r=\"4\" fill=\""
           << (dot.extremal ? "#c0392b" : "black") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace lgcy
