#include "lgcy/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "lgcy/errors.hpp"

namespace lgcy {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() const { return i_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[i_]; }
    char get() { return s_[i_++]; }
    std::size_t pos() const { return i_; }

    bool accept(char c)
    {
        skip_ws();
        if (peek() != c) return false;
        ++i_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::ostringstream os;
        os << what << " at column " << i_ + 1;
        if (!done()) os << " (near '" << s_.substr(i_, 8) << "')";
        throw Error(ErrorCode::SyntaxError, os.str());
    }

    std::int64_t integer()
    {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            try {
                v = checked_add(checked_mul(v, 10), get() - '0');
            } catch (const std::overflow_error&) {
                fail("number too large");
            }
        }
        return v;
    }

    Rational rational()
    {
        skip_ws();
        bool neg = false;
        if (peek() == '-' || peek() == '+') neg = get() == '-';
        std::int64_t num = integer();
        std::int64_t den = 1;
        if (accept('/')) {
            den = integer();
            if (den == 0) fail("zero denominator");
        }
        return Rational(neg ? -num : num, den);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

ExponentMatrix parse_polynomial(std::string_view text)
{
    Cursor cur(text);
    std::vector<std::map<int, int>> terms;
    std::vector<Rational> coeffs;

    cur.skip_ws();
    if (cur.done()) cur.fail("empty polynomial");
    bool negative = false;
    if (cur.peek() == '-' || cur.peek() == '+') negative = cur.get() == '-';

    for (;;) {
        Rational coef(1);
        std::map<int, int> exps;
        bool had_coef = false;
        cur.skip_ws();
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            had_coef = true;
            coef = cur.rational();
            if (coef.is_zero()) cur.fail("zero coefficient");
            cur.accept('*');
        }
        bool any_factor = false;
        for (;;) {
            cur.skip_ws();
            if (cur.peek() != 'x') break;
            cur.get();
            if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a variable index after 'x'");
            std::int64_t var = cur.integer();
            if (var < 1 || var > 10000)
                throw Error(ErrorCode::UnknownVariable, "variable x" + std::to_string(var) + " (indices start at x1)");
            std::int64_t e = 1;
            if (cur.accept('^')) e = cur.integer();
            if (e > 1000000) cur.fail("exponent too large");
            exps[static_cast<int>(var)] += static_cast<int>(e);
            any_factor = true;
            cur.skip_ws();
            if (cur.peek() == '*') {
                cur.get();
                cur.skip_ws();
                if (cur.peek() != 'x') cur.fail("expected a variable after '*'");
            }
        }
        if (!any_factor && !had_coef) cur.fail("expected a term");
        terms.push_back(std::move(exps));
        coeffs.push_back(negative ? -coef : coef);

        cur.skip_ws();
        if (cur.done()) break;
        char c = cur.peek();
        if (c != '+' && c != '-') cur.fail("expected '+' or '-'");
        negative = cur.get() == '-';
    }

    int n = 0;
    std::vector<bool> used(1, false);
    for (const auto& t : terms)
        for (const auto& [v, e] : t) {
            n = std::max(n, v);
            if (used.size() <= static_cast<std::size_t>(v)) used.resize(static_cast<std::size_t>(v) + 1, false);
            if (e > 0) used[static_cast<std::size_t>(v)] = true;
        }
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)])
            throw Error(ErrorCode::UnknownVariable,
                        "x" + std::to_string(v) + " does not occur although x" + std::to_string(n) + " does");

    std::vector<Exponents> rows;
    for (const auto& t : terms) {
        Exponents r(static_cast<std::size_t>(n), 0);
        for (const auto& [v, e] : t) r[static_cast<std::size_t>(v - 1)] = e;
        rows.push_back(std::move(r));
    }
    return ExponentMatrix(n, std::move(rows), std::move(coeffs));
}

std::string print_polynomial(const ExponentMatrix& m)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < m.s(); ++i) {
        Rational c = m.coefficients()[i];
        bool neg = c < Rational(0);
        if (neg) c = -c;
        if (i == 0) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        std::ostringstream mono;
        bool first = true;
        for (std::size_t j = 0; j < m.rows()[i].size(); ++j) {
            int e = m.rows()[i][j];
            if (e == 0) continue;
            mono << (first ? "" : "*") << "x" << j + 1;
            if (e != 1) mono << "^" << e;
            first = false;
        }
        if (first) os << c.pretty();
        else if (c != Rational(1)) os << c.pretty() << "*" << mono.str();
        else os << mono.str();
    }
    return os.str();
}

GroupSpec parse_group_spec(std::string_view text, std::size_t n)
{
    std::string t(text);
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r\n");
        auto e = s.find_last_not_of(" \t\r\n");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    t = trim(t);
    std::string lower = t;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });

    GroupSpec spec;
    if (lower == "j") return spec;
    if (lower == "sl") {
        spec.kind = GroupSpec::Kind::SL;
        return spec;
    }
    if (lower == "aut") {
        spec.kind = GroupSpec::Kind::Aut;
        return spec;
    }
    if (lower.rfind("gens:", 0) != 0)
        throw Error(ErrorCode::SyntaxError, "group must be J, SL, Aut or 'gens: ...', got '" + t + "'");

    spec.kind = GroupSpec::Kind::Generators;
    std::stringstream body(t.substr(5));
    std::string gen;
    while (std::getline(body, gen, ';')) {
        gen = trim(gen);
        if (gen.empty()) throw Error(ErrorCode::SyntaxError, "empty generator in group spec");
        if (gen == "J" || gen == "j") {
            spec.includes_j = true;
            continue;
        }
        std::vector<Rational> entries;
        std::stringstream items(gen);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                entries.push_back(Rational::parse(trim(item)));
            } catch (const std::exception&) {
                throw Error(ErrorCode::SyntaxError, "bad phase '" + trim(item) + "' in generator '" + gen + "'");
            }
        }
        if (entries.size() != n)
            throw Error(ErrorCode::SyntaxError, "generator '" + gen + "' has " + std::to_string(entries.size()) +
                                                    " entries, expected " + std::to_string(n));
        spec.generators.emplace_back(std::move(entries));
    }
    if (spec.generators.empty() && !spec.includes_j) throw Error(ErrorCode::SyntaxError, "no generators given");
    return spec;
}

std::string print_group_spec(const GroupSpec& spec)
{
    switch (spec.kind) {
    case GroupSpec::Kind::J: return "J";
    case GroupSpec::Kind::SL: return "SL";
    case GroupSpec::Kind::Aut: return "Aut";
    case GroupSpec::Kind::Generators: break;
    }
    std::ostringstream os;
    os << "gens: ";
    bool first = true;
    if (spec.includes_j) {
        os << "J";
        first = false;
    }
    for (const auto& g : spec.generators) {
        os << (first ? "" : "; ");
        for (std::size_t j = 0; j < g.size(); ++j) os << (j ? "," : "") << g[j].pretty();
        first = false;
    }
    return os.str();
}

SymmetryGroup resolve_group(const GroupSpec& spec, const ExponentMatrix& m, const ChargeData& c, bool require_j,
                            std::size_t max_order)
{
    const auto n = static_cast<std::size_t>(m.n());
    PhaseVector j = j_element(c);
    SymmetryGroup g;
    switch (spec.kind) {
    case GroupSpec::Kind::J: g = group_from_generators(n, {j}, max_order); break;
    case GroupSpec::Kind::SL: g = sl_subgroup(aut_group(m, max_order), max_order); break;
    case GroupSpec::Kind::Aut: g = aut_group(m, max_order); break;
    case GroupSpec::Kind::Generators: {
        auto gens = spec.generators;
        if (spec.includes_j) gens.push_back(j);
        g = group_from_generators(n, gens, max_order);
        break;
    }
    }
    if (require_j && !g.contains(j))
        throw Error(ErrorCode::JNotContained, "the group does not contain J = " + j.str());
    return g;
}

SymmetryGroup parse_group(std::string_view text, const ExponentMatrix& m, const ChargeData& c, bool require_j,
                          std::size_t max_order)
{
    return resolve_group(parse_group_spec(text, static_cast<std::size_t>(m.n())), m, c, require_j, max_order);
}

}  // namespace lgcy
