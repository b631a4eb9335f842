#include "dirac/format.hpp"

#include <algorithm>
#include <vector>

namespace dirac {

namespace {

using TermList = std::vector<std::pair<Rational, std::string>>;

std::string power_text(std::string_view var, int k) {
    if (k == 0) return "";
    std::string s(var);
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

std::string join_factors(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

TermList terms_of(const Poly& f, std::string_view var) {
    TermList t;
    for (int k = f.degree(); k >= 0; --k)
        if (!f.coeff(k).is_zero()) t.emplace_back(f.coeff(k), power_text(var, k));
    return t;
}

TermList terms_of(const BivPoly& u) {
    std::vector<std::pair<BivPoly::Exp, Rational>> v(u.terms().begin(), u.terms().end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    TermList t;
    for (const auto& [e, c] : v) t.emplace_back(c, join_factors(power_text("x", e.first), power_text("xi", e.second)));
    return t;
}

/// Appends sum(terms) * tail. A multi-term coefficient is parenthesized.
void append(std::string& out, const TermList& terms, const std::string& tail) {
    if (terms.empty()) return;
    if (terms.size() > 1 && tail.empty()) {
        for (const auto& t : terms) append(out, TermList{t}, "");
        return;
    }
    bool negative = false;
    std::string body;
    if (terms.size() == 1) {
        const auto& [c, mono] = terms[0];
        negative = c.sign() < 0;
        Rational a = abs(c);
        std::string factors = join_factors(mono, tail);
        if (factors.empty())
            body = a.str();
        else if (a == Rational(1))
            body = factors;
        else
            body = a.str() + "*" + factors;
    } else {
        std::string inner;
        for (const auto& t : terms) append(inner, TermList{t}, "");
        body = "(" + inner + ")";
        if (!tail.empty()) body += "*" + tail;
    }
    if (out.empty())
        out = negative ? "-" + body : body;
    else
        out += (negative ? " - " : " + ") + body;
}

std::string or_zero(std::string s) { return s.empty() ? "0" : s; }

std::string heaviside_text(std::string_view var, const Rational& a) { return "H(" + format_point(var, a) + ")"; }

std::string dirac_text(const std::string& arg, int k) {
    if (k == 0) return "delta(" + arg + ")";
    if (k == 1) return "delta'(" + arg + ")";
    return "delta^{" + std::to_string(k) + "}(" + arg + ")";
}

void append_piecewise(std::string& out, const Piecewise& p, std::string_view var, const std::string& tail) {
    append(out, terms_of(p.base(), var), tail);
    for (const auto& [a, f] : p.steps()) append(out, terms_of(f, var), join_factors(heaviside_text(var, a), tail));
}

std::string step_text(std::string_view var, const Step& s) { return s ? heaviside_text(var, *s) : ""; }

std::string derivative_text(int k) { return k == 0 ? "" : k == 1 ? "D" : "D^" + std::to_string(k); }

std::string right_power(int q) { return q == 0 ? "" : power_text("x", q); }

std::map<int, Poly> group_right(const BivPoly& fg) {
    std::map<int, Poly> out;
    for (const auto& [e, c] : fg.terms()) out[e.second] += Poly::monomial(c, e.first);
    return out;
}

}  // namespace

std::string format_point(std::string_view var, const Rational& a) {
    std::string s(var);
    if (a.sign() < 0) return s + "+" + abs(a).str();
    return s + "-" + a.str();
}

std::string format(const Poly& f, std::string_view var) {
    std::string out;
    append(out, terms_of(f, var), "");
    return or_zero(out);
}

std::string format(const Piecewise& p, std::string_view var) {
    std::string out;
    append_piecewise(out, p, var, "");
    return or_zero(out);
}

std::string format(const Dist& phi, std::string_view var) {
    std::string out;
    append_piecewise(out, phi.pw(), var, "");
    for (const auto& [key, c] : phi.diracs())
        append(out, TermList{{c, ""}}, dirac_text(format_point(var, key.first), key.second));
    return or_zero(out);
}

std::string format(const BivPoly& u) {
    std::string out;
    append(out, terms_of(u), "");
    return or_zero(out);
}

std::string format(const BivDist& phi) {
    std::string out;
    for (const auto& [k, u] : phi.pw2())
        append(out, terms_of(u), join_factors(step_text("x", k.first), step_text("xi", k.second)));
    for (const auto& [b, u] : phi.diag()) append(out, terms_of(u), join_factors(step_text("xi", b), "H(x-xi)"));
    for (const auto& [k, p] : phi.tensorial_x())
        append_piecewise(out, p, "xi", dirac_text(format_point("x", k.first), k.second));
    for (const auto& [k, p] : phi.tensorial_xi())
        append_piecewise(out, p, "x", dirac_text(format_point("xi", k.first), k.second));
    for (const auto& [k, c] : phi.diag_diracs())
        append(out, terms_of(c, "xi"), join_factors(step_text("xi", k.second), dirac_text("x-xi", k.first)));
    return or_zero(out);
}

std::string format(const IdOp& op) {
    std::string out;
    for (auto it = op.diff_part().rbegin(); it != op.diff_part().rend(); ++it)
        append(out, terms_of(it->second, "x"), derivative_text(it->first));
    for (const auto& [q, f] : group_right(op.int_part())) append(out, terms_of(f, "x"), join_factors("I", right_power(q)));
    for (const auto& [key, f] : op.eval_diff_part())
        append(out, terms_of(f, "x"), join_factors("ev(" + key.first.str() + ")", derivative_text(key.second)));
    for (const auto& [a, fg] : op.eval_int_part())
        for (const auto& [q, f] : group_right(fg))
            append(out, terms_of(f, "x"), join_factors("ev(" + a.str() + ")*I", right_power(q)));
    return or_zero(out);
}

}  // namespace dirac
