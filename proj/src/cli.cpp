#include "lgcy/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lgcy/diagram.hpp"
#include "lgcy/errors.hpp"
#include "lgcy/mirror.hpp"
#include "lgcy/parse.hpp"
#include "lgcy/potential.hpp"
#include "lgcy/report.hpp"

namespace lgcy {

namespace {

struct Options {
    std::string poly;
    std::string group = "J";
    std::string json_path;
    std::string svg_dir;
    std::size_t max_order = kDefaultMaxGroupOrder;
};

std::string read_poly_source(const std::string& arg)
{
    std::error_code ec;
    if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return arg;
}

json group_json(const SymmetryGroup& g)
{
    json gens = json::array();
    for (const auto& x : g.generators()) gens.push_back(to_json(x));
    return {{"order", g.order()}, {"exponent", g.exponent()}, {"generators", gens}};
}

void print_charges(std::ostream& os, const Potential& p)
{
    const auto& c = p.charges;
    os << "weights  (";
    for (std::size_t j = 0; j < c.w.size(); ++j) os << (j ? "," : "") << c.w[j];
    os << ")  degree " << c.d << "  charges (";
    for (std::size_t j = 0; j < c.q.size(); ++j) os << (j ? "," : "") << c.q[j].pretty();
    os << ")  " << (c.cy ? "Calabi-Yau" : "not Calabi-Yau") << "\n";
    if (c.large_charge) os << "warning: some charge exceeds 1/2\n";
}

void print_totals(std::ostream& os, const char* title, const BigradedDims& dims, int n)
{
    os << title << ": " << dims_line(dims) << "  (total " << dims.total() << ")\n";
    if (dims.integral() && n >= 2) os << hodge_diamond(dims, n - 2);
}

json sectors_json(const std::vector<const StateSpace*>& spaces)
{
    json a = json::array();
    for (const auto* s : spaces)
        for (const auto& sec : s->sectors) a.push_back(to_json(sec));
    return a;
}

struct Context {
    Options opt;
    std::string command;
    Potential W;
    std::string poly_text;
    std::ostringstream out;
    json doc;
};

int cmd_analyze(Context& cx)
{
    auto& os = cx.out;
    const auto& p = cx.W;
    os << "W = " << cx.poly_text << "\n";
    os << "variables " << p.n() << ", monomials " << p.M.s() << "\n";
    print_charges(os, p);
    os << "nondegenerate: " << p.certificate << "\n";
    if (p.atoms) {
        os << "invertible, atoms:";
        for (const auto& a : p.atoms->atoms) os << " " << describe(a);
        os << "\n";
    }
    SymmetryGroup g = parse_group(cx.opt.group, p.M, p.charges, false, cx.opt.max_order);
    PhaseVector j = j_element(p.charges);
    bool in_sl = true;
    for (const auto& h : g.generators())
        if (!age(h).is_integer()) in_sl = false;
    bool gorenstein = true;
    for (auto w : p.charges.w)
        if (p.charges.d % w != 0) gorenstein = false;
    os << "group " << cx.opt.group << ": order " << g.order() << ", exponent " << g.exponent()
       << (in_sl ? ", inside SL" : ", not inside SL") << "\n";
    os << "J = " << j.str() << (g.contains(j) ? " is in the group" : " is NOT in the group") << "\n";
    if (g.contains(j)) os << "cosets of <J>: " << cosets(g, j).representatives.size() << "\n";
    os << "ambient weighted projective space is " << (gorenstein ? "Gorenstein" : "not Gorenstein") << "\n";

    cx.doc["group"] = group_json(g);
    cx.doc["analysis"] = {{"invertible", p.invertible},
                          {"certificate", p.certificate},
                          {"gorenstein", gorenstein},
                          {"contains_J", g.contains(j)},
                          {"in_SL", in_sl}};
    if (p.atoms) {
        json atoms = json::array();
        for (const auto& a : p.atoms->atoms) atoms.push_back(describe(a));
        cx.doc["analysis"]["atoms"] = atoms;
    }
    return 0;
}

LgPair make_pair_from(Context& cx)
{
    SymmetryGroup g = parse_group(cx.opt.group, cx.W.M, cx.W.charges, true, cx.opt.max_order);
    cx.doc["group"] = group_json(g);
    return make_lg_pair(cx.W, std::move(g));
}

int cmd_space(Context& cx, bool lg)
{
    LgPair pair = make_pair_from(cx);
    StateSpace space = lg ? fjrw(pair) : cr(pair);
    cx.out << (lg ? "FJRW state space" : "Chen-Ruan cohomology") << " of (" << cx.poly_text << ", " << cx.opt.group
           << "), |G| = " << pair.G.order() << "\n";
    cx.out << sector_table(space);
    print_totals(cx.out, "total", space.total, pair.W.n());
    cx.doc["sectors"] = sectors_json({&space});
    cx.doc["totals"] = to_json(space.total);
    return 0;
}

std::vector<DiagramCheck> run_diagrams(Context& cx, const LgPair& pair, const IsoReport& iso, bool verbose)
{
    std::vector<DiagramCheck> checks;
    json arr = json::array();
    auto reps = cosets(pair.G, pair.J).representatives;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        Diagram dg = build_diagram(pair.W.charges, reps[i]);
        DiagramCheck ck = cross_check(dg, pair, iso.cr, iso.fjrw);
        if (verbose) {
            cx.out << "coset " << i << " g=" << reps[i].str() << ": " << ck.rays << " rays, " << ck.dots << " dots, "
                   << ck.internal_dots << " internal dots, " << ck.empty_rays << " empty rays, "
                   << (ck.ok ? "consistent" : "INCONSISTENT") << "\n";
            for (std::size_t k = 0; k < dg.elements.size(); ++k) {
                const auto& e = dg.elements[k];
                cx.out << "    " << (e.kind == ElementKind::Ray ? "ray" : "dot") << " angle=" << e.angle.pretty();
                if (e.kind == ElementKind::Dot) cx.out << " radius=" << e.radius << (e.extremal ? " extremal" : " internal");
                else cx.out << (e.empty_ray() ? " empty" : " dotted");
                cx.out << " D=" << e.D << " R=" << e.R << " F=" << e.F();
                if (e.internal() || e.empty_ray()) cx.out << " degree=" << element_degree(dg, k).pretty();
                cx.out << "\n";
            }
            if (!cx.opt.svg_dir.empty()) {
                std::filesystem::create_directories(cx.opt.svg_dir);
                std::ofstream f(std::filesystem::path(cx.opt.svg_dir) / ("coset_" + std::to_string(i) + ".svg"));
                f << diagram_svg(dg, "coset " + std::to_string(i) + "  g = " + reps[i].str());
                if (!f) throw std::runtime_error("cannot write SVG into " + cx.opt.svg_dir);
            }
        }
        for (const auto& msg : ck.failures) cx.out << "  diagram check failed: " << msg << "\n";
        arr.push_back(to_json(ck, reps[i]));
        checks.push_back(std::move(ck));
    }
    bool ok = std::all_of(checks.begin(), checks.end(), [](const DiagramCheck& c) { return c.ok; });
    cx.doc["checks"]["diagram"] = {{"pass", ok}, {"cosets", arr}};
    return checks;
}

int cmd_verify_lgcy(Context& cx)
{
    LgPair pair = make_pair_from(cx);
    IsoReport iso = verify_isomorphism(pair);
    cx.out << "Chen-Ruan sectors:\n" << sector_table(iso.cr);
    cx.out << "FJRW sectors:\n" << sector_table(iso.fjrw);
    print_totals(cx.out, "Chen-Ruan total", iso.cr.total, pair.W.n());
    print_totals(cx.out, "FJRW total", iso.fjrw.total, pair.W.n());
    for (const auto& d : iso.diffs)
        cx.out << "  mismatch at (" << d.p.pretty() << "," << d.q.pretty() << "): CR " << d.left << ", FJRW " << d.right
               << "\n";
    auto checks = run_diagrams(cx, pair, iso, false);
    bool diag_ok = std::all_of(checks.begin(), checks.end(), [](const DiagramCheck& c) { return c.ok; });
    cx.out << "bigraded isomorphism: " << (iso.ok ? "PASS" : "FAIL") << "\n";
    cx.out << "diagram cross-check on " << checks.size() << " cosets: " << (diag_ok ? "PASS" : "FAIL") << "\n";

    cx.doc["sectors"] = sectors_json({&iso.cr, &iso.fjrw});
    cx.doc["totals"] = to_json(iso.cr.total);
    cx.doc["totals_by_side"] = {{"CY", to_json(iso.cr.total)}, {"LG", to_json(iso.fjrw.total)}};
    cx.doc["checks"]["iso"] = {{"pass", iso.ok}, {"diffs", to_json(iso.diffs)}};
    return iso.ok && diag_ok ? 0 : 2;
}

int cmd_mirror(Context& cx, bool verify)
{
    LgPair pair = make_pair_from(cx);
    if (!pair.W.invertible) throw Error(ErrorCode::NotApplicable, "mirror construction needs an invertible polynomial");
    ExponentMatrix mt = transpose(pair.W.M);
    Potential wt = make_potential(mt);
    SymmetryGroup gt = dual_group(pair.W.M, pair.G, cx.opt.max_order);
    cx.out << "W^T = " << print_polynomial(mt) << "\n";
    print_charges(cx.out, wt);
    cx.out << "G^T: order " << gt.order() << ", generators";
    for (const auto& x : gt.generators()) cx.out << " " << x.str();
    cx.out << "\n";
    cx.doc["mirror"] = {{"polynomial", print_polynomial(mt)}, {"charges", to_json(wt.charges)}, {"group", group_json(gt)}};

    if (!verify) {
        if (!gt.contains(j_element(wt.charges))) {
            cx.out << "G^T does not contain J of W^T (G is not inside SL_W); no state spaces for the mirror\n";
            return 0;
        }
        LgPair tp = make_lg_pair(wt, gt);
        StateSpace s = cr(tp);
        print_totals(cx.out, "Chen-Ruan total of the mirror", s.total, tp.W.n());
        cx.doc["sectors"] = sectors_json({&s});
        cx.doc["totals"] = to_json(s.total);
        return 0;
    }

    MirrorReport r = verify_mirror(pair, cx.opt.max_order);
    cx.out << "J of W^T in G^T: " << (r.j_in_dual ? "yes" : "NO") << "\n";
    cx.out << "G^T inside SL of W^T: " << (r.dual_in_sl ? "yes" : "NO") << "\n";
    cx.out << "(G^T)^T = G: " << (r.involution ? "yes" : "NO") << "\n";
    for (const auto& t : r.tables) {
        print_totals(cx.out, (t.name + " of (W,G)").c_str(), t.original, pair.W.n());
        print_totals(cx.out, (t.name + " of (W^T,G^T)").c_str(), t.mirror, pair.W.n());
        for (const auto& d : t.diffs)
            cx.out << "  mismatch at (" << d.p.pretty() << "," << d.q.pretty() << "): " << d.left << " vs " << d.right << "\n";
    }
    cx.out << "mirror symmetry: " << (r.ok ? "PASS" : "FAIL") << "\n";
    cx.doc["checks"]["mirror"] = to_json(r);
    for (const auto& t : r.tables)
        if (t.name == "CR") cx.doc["totals"] = to_json(t.original);
    return r.ok ? 0 : 2;
}

int cmd_diagram(Context& cx)
{
    LgPair pair = make_pair_from(cx);
    IsoReport iso = verify_isomorphism(pair);
    auto checks = run_diagrams(cx, pair, iso, true);
    bool ok = std::all_of(checks.begin(), checks.end(), [](const DiagramCheck& c) { return c.ok; });
    cx.out << "diagram cross-check: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 2;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::MatchingImpossible:
    case ErrorCode::CrossCheckFailure:
    case ErrorCode::NonIntegerDimension: return 2;
    default: return 1;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Landau-Ginzburg/Calabi-Yau state spaces and mirror symmetry with exact arithmetic", "lgcy"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"analyze", "charges, atoms, nondegeneracy and group data"},
        {"fjrw", "FJRW state space of (W,G)"},
        {"cr", "Chen-Ruan cohomology of the hypersurface quotient"},
        {"verify-lgcy", "compare both tables bidegree by bidegree and cross-check the diagrams"},
        {"mirror", "transpose polynomial and dual group"},
        {"verify-mirror", "check the mirror relation on CR and FJRW tables"},
        {"diagram", "ray/dot diagram of every coset of <J>"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--poly", opt.poly, "polynomial text, or a file containing it")->required();
        sub->add_option("--group", opt.group, "J | SL | Aut | 'gens: a/b,...; ...'")->capture_default_str();
        sub->add_option("--json", opt.json_path, "write a JSON report to this path ('-' for stdout)");
        sub->add_option("--max-group-order", opt.max_order, "refuse to enumerate larger groups")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        if (name == "diagram") sub->add_option("--svg", opt.svg_dir, "directory for coset_<i>.svg files");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? 0 : 1;
    }

    Context cx;
    cx.opt = opt;
    cx.command = app.get_subcommands().front()->get_name();
    int code = 0;
    try {
        ExponentMatrix m = parse_polynomial(read_poly_source(opt.poly));
        cx.poly_text = print_polynomial(m);
        cx.W = make_potential(std::move(m));
        cx.doc["input"] = {{"command", cx.command}, {"polynomial", cx.poly_text}, {"group", opt.group}};
        cx.doc["charges"] = to_json(cx.W.charges);

        if (cx.command == "analyze") code = cmd_analyze(cx);
        else if (cx.command == "fjrw") code = cmd_space(cx, true);
        else if (cx.command == "cr") code = cmd_space(cx, false);
        else if (cx.command == "verify-lgcy") code = cmd_verify_lgcy(cx);
        else if (cx.command == "mirror") code = cmd_mirror(cx, false);
        else if (cx.command == "verify-mirror") code = cmd_mirror(cx, true);
        else code = cmd_diagram(cx);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!opt.json_path.empty()) {
        std::string text = cx.doc.dump(2) + "\n";
        if (opt.json_path == "-") {
            out << text;
            return code;
        } else {
            std::ofstream f(opt.json_path);
            f << text;
            if (!f) {
                err << "error: cannot write " << opt.json_path << "\n";
                return 1;
            }
        }
    }
    out << cx.out.str();
    return code;
}

}  // namespace lgcy
