#include "dirac/json_io.hpp"

#include "dirac/format.hpp"

namespace dirac {

namespace {

json step_json(const Step& s) { return s ? json(s->str()) : json(nullptr); }

json piecewise_body(const Piecewise& p, std::string_view var) {
    json steps = json::array();
    for (const auto& [a, f] : p.steps()) steps.push_back({{"at", a.str()}, {"coef", format(f, var)}});
    return {{"base", format(p.base(), var)}, {"steps", steps}};
}

json tensorial(const std::map<BivDist::DiracKey, Piecewise>& part, std::string_view coef_var) {
    json out = json::array();
    for (const auto& [k, p] : part)
        out.push_back({{"at", k.first.str()}, {"order", k.second}, {"coef", piecewise_body(p, coef_var)}});
    return out;
}

}  // namespace

json to_json(const Poly& f, std::string_view var) {
    return {{"type", "polynomial"}, {"text", format(f, var)}};
}

json to_json(const Piecewise& p, std::string_view var) {
    json j = piecewise_body(p, var);
    j["type"] = "piecewise";
    j["text"] = format(p, var);
    return j;
}

json to_json(const Dist& phi) {
    json j = piecewise_body(phi.pw(), "x");
    j["type"] = "distribution";
    j["text"] = format(phi);
    json diracs = json::array();
    for (const auto& [key, c] : phi.diracs())
        diracs.push_back({{"at", key.first.str()}, {"order", key.second}, {"coef", c.str()}});
    j["diracs"] = diracs;
    return j;
}

json to_json(const BivDist& phi) {
    json pw2 = json::array();
    for (const auto& [k, u] : phi.pw2())
        pw2.push_back({{"coef", format(u)}, {"x_step", step_json(k.first)}, {"xi_step", step_json(k.second)}});
    json diag = json::array();
    for (const auto& [b, u] : phi.diag()) diag.push_back({{"coef", format(u)}, {"xi_step", step_json(b)}});
    json ddirac = json::array();
    for (const auto& [k, c] : phi.diag_diracs())
        ddirac.push_back({{"order", k.first}, {"xi_step", step_json(k.second)}, {"coef", format(c, "xi")}});
    return {{"type", "bivariate"},
            {"text", format(phi)},
            {"pw2", pw2},
            {"diagonal", {{"heaviside", diag}, {"diracs", ddirac}}},
            {"tensorial_x", tensorial(phi.tensorial_x(), "xi")},
            {"tensorial_xi", tensorial(phi.tensorial_xi(), "x")}};
}

json to_json(const IdOp& op) {
    json diff = json::array();
    for (const auto& [k, f] : op.diff_part()) diff.push_back({{"order", k}, {"coef", format(f)}});
    json integ = json::array();
    for (const auto& [e, c] : op.int_part().terms())
        integ.push_back({{"left", format(Poly::monomial(c, e.first))}, {"right", format(Poly::monomial(Rational(1), e.second))}});
    json ediff = json::array();
    for (const auto& [key, f] : op.eval_diff_part())
        ediff.push_back({{"at", key.first.str()}, {"order", key.second}, {"coef", format(f)}});
    json eint = json::array();
    for (const auto& [a, fg] : op.eval_int_part())
        for (const auto& [e, c] : fg.terms())
            eint.push_back({{"at", a.str()},
                            {"left", format(Poly::monomial(c, e.first))},
                            {"right", format(Poly::monomial(Rational(1), e.second))}});
    return {{"type", "operator"}, {"text", format(op)}, {"diff", diff},
            {"int", integ},       {"eval_diff", ediff},   {"eval_int", eint}};
}

json to_json(const Value& v) {
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

json to_json(const VerificationReport& rep) {
    json conds = json::array();
    for (const auto& r : rep.cond_residuals) conds.push_back({{"ok", r.is_zero()}, {"residual", format(r)}});
    return {{"ok", rep.ok()},
            {"operator", {{"ok", rep.operator_ok()}, {"residual", format(rep.operator_residual)}}},
            {"conditions", conds}};
}

}  // namespace dirac
