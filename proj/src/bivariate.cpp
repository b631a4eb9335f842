#include "dirac/bivariate.hpp"

#include "dirac/error.hpp"

namespace dirac {

namespace {

template <class Map, class Key, class Val>
void accumulate(Map& m, const Key& key, const Val& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = m.try_emplace(key, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

Rational signed_binomial(int k, int i) {
    Rational c = binomial(k, i);
    return i % 2 == 1 ? -c : c;
}

Piecewise step_factor(const Step& s) { return s ? Piecewise::step(*s) : Piecewise(1); }

/// co_heaviside(a - c) for a present step, 1 for an absent one: the value of
/// the evaluation character on [H(v - a)].
Rational step_value(const Step& s, const Rational& c) {
    return s ? co_heaviside(*s - c).as_rational() : Rational(1);
}

BivPoly derive_xi_n(const BivPoly& u, int times) {
    BivPoly r = u;
    for (int i = 0; i < times && !r.is_zero(); ++i) r = derive_xi(r);
    return r;
}

/// Rewrites c(xi) delta^{(k)}(x-xi) as sum_m d_m(x) delta^{(m)}(xi-x).
std::vector<std::pair<int, Poly>> to_xi_view(int k, const Poly& c) {
    std::vector<std::pair<int, Poly>> out;
    Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
    Poly ci = c;
    for (int i = 0; i <= k && !ci.is_zero(); ++i) {
        out.emplace_back(k - i, ci * (sign * signed_binomial(k, i)));
        ci = derive(ci);
    }
    return out;
}

/// Adds d(x) [H_b] delta^{(m)}(xi-x) back in the stored orientation.
void add_from_xi_view(BivDist& r, int m, const Step& label, const Poly& d) {
    Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
    r.add_diag_dirac(m, label, BivPoly::in_x(d) * sign);
}

enum class Part { Heaviside, DiagDirac, DiracX, DiracXi };

struct Term {
    Part part = Part::Heaviside;
    RawTerm h{};          // Heaviside
    int order = 0;        // Dirac order
    Rational point{};     // tensorial Dirac point
    Step label{};         // diagonal Dirac label
    Poly diag_coeff{};    // diagonal Dirac coefficient in xi
    Piecewise coeff{};    // tensorial Dirac coefficient
};

std::vector<Term> terms_of(const BivDist& phi) {
    std::vector<Term> out;
    for (const auto& [k, u] : phi.pw2()) {
        Term t{Part::Heaviside, RawTerm{u, k.first, k.second, false}};
        out.push_back(t);
    }
    for (const auto& [b, u] : phi.diag()) {
        Term t{Part::Heaviside, RawTerm{u, std::nullopt, b, true}};
        out.push_back(t);
    }
    for (const auto& [k, c] : phi.diag_diracs()) {
        Term t{Part::DiagDirac};
        t.order = k.first;
        t.label = k.second;
        t.diag_coeff = c;
        out.push_back(t);
    }
    for (const auto& [k, p] : phi.tensorial_x()) {
        Term t{Part::DiracX};
        t.point = k.first;
        t.order = k.second;
        t.coeff = p;
        out.push_back(t);
    }
    for (const auto& [k, p] : phi.tensorial_xi()) {
        Term t{Part::DiracXi};
        t.point = k.first;
        t.order = k.second;
        t.coeff = p;
        out.push_back(t);
    }
    return out;
}

[[noreturn]] void forbid(const char* what) {
    throw ForbiddenProduct(std::string("product of distributions is undefined: ") + what);
}

void mul_heaviside_with(BivDist& r, const RawTerm& h, const Term& t) {
    switch (t.part) {
        case Part::Heaviside:
            r.add_term(RawTerm{h.coeff * t.h.coeff, join_steps(h.x_step, t.h.x_step),
                               join_steps(h.xi_step, t.h.xi_step), h.diagonal || t.h.diagonal});
            return;
        case Part::DiagDirac:
            if (h.diagonal) forbid("H(x-xi) cannot multiply a diagonal Dirac term");
            r.add_diag_dirac(t.order, join_steps(t.label, join_steps(h.x_step, h.xi_step)),
                             h.coeff * BivPoly::in_xi(t.diag_coeff));
            return;
        case Part::DiracX:
            if (h.diagonal || h.x_step) forbid("a Heaviside factor in x cannot multiply a Dirac term in x");
            r.add_tx(t.point, t.order, h.coeff, pw_mul(step_factor(h.xi_step), t.coeff));
            return;
        case Part::DiracXi:
            if (h.diagonal || h.xi_step) forbid("a Heaviside factor in xi cannot multiply a Dirac term in xi");
            r.add_txi(t.point, t.order, h.coeff, pw_mul(step_factor(h.x_step), t.coeff));
            return;
    }
}

void derive_pw2_term(BivDist& r, const BivPoly& u, const Step& hx, const Step& hxi, Axis axis) {
    if (axis == Axis::X) {
        r.add_pw2(derive_x(u), hx, hxi);
        if (hx) r.add_tx(*hx, 0, u, step_factor(hxi));
    } else {
        r.add_pw2(derive_xi(u), hx, hxi);
        if (hxi) r.add_txi(*hxi, 0, u, step_factor(hx));
    }
}

void integrate_pw2_term(BivDist& r, const BivPoly& u, const Step& hx, const Step& hxi, Axis axis) {
    if (axis == Axis::X) {
        BivPoly U = integrate_x(u);
        if (!hx) {
            r.add_pw2(U, hx, hxi);
            return;
        }
        BivPoly Ua = BivPoly::in_xi(subst_x(U, *hx));
        r.add_pw2(U - Ua, hx, hxi);
        if (co_heaviside(*hx).value() == 1) r.add_pw2(Ua, std::nullopt, hxi);
    } else {
        BivPoly V = integrate_xi(u);
        if (!hxi) {
            r.add_pw2(V, hx, hxi);
            return;
        }
        BivPoly Vb = BivPoly::in_x(subst_xi(V, *hxi));
        r.add_pw2(V - Vb, hx, hxi);
        if (co_heaviside(*hxi).value() == 1) r.add_pw2(Vb, hx, std::nullopt);
    }
}

/// Adds p(v) * (H(w - a) - co_heaviside(a)), p piecewise in v, where w is the
/// integrated variable and v the other one.
void add_dirac_antiderivative(BivDist& r, const Piecewise& p, const Rational& a, Axis integrated) {
    Rational cb = co_heaviside(a).as_rational();
    auto put = [&](const Poly& q, const Step& s) {
        if (integrated == Axis::X) {
            BivPoly u = BivPoly::in_xi(q);
            r.add_pw2(u, a, s);
            r.add_pw2(u * (-cb), std::nullopt, s);
        } else {
            BivPoly u = BivPoly::in_x(q);
            r.add_pw2(u, s, a);
            r.add_pw2(u * (-cb), s, std::nullopt);
        }
    };
    put(p.base(), std::nullopt);
    for (const auto& [b, q] : p.steps()) put(q, b);
}

}  // namespace

Step join_steps(const Step& a, const Step& b) {
    if (!a) return b;
    if (!b) return a;
    return join(*a, *b);
}

BivDist BivDist::diag_heaviside() {
    BivDist r;
    r.add_term(RawTerm{BivPoly(Rational(1)), std::nullopt, std::nullopt, true});
    return r;
}

BivDist BivDist::diag_dirac(int k) {
    if (k < 0) throw DomainError("negative Dirac derivative order");
    BivDist r;
    r.add_diag_dirac(k, std::nullopt, BivPoly(Rational(1)));
    return r;
}

BivDist BivDist::embed(const Dist& phi, Axis axis) {
    BivDist r;
    const Piecewise& p = phi.pw();
    auto lift = [&](const Poly& f) { return axis == Axis::X ? BivPoly::in_x(f) : BivPoly::in_xi(f); };
    r.add_pw2(lift(p.base()), std::nullopt, std::nullopt);
    for (const auto& [a, f] : p.steps()) {
        if (axis == Axis::X)
            r.add_pw2(lift(f), a, std::nullopt);
        else
            r.add_pw2(lift(f), std::nullopt, a);
    }
    for (const auto& [key, c] : phi.diracs()) {
        if (axis == Axis::X)
            r.add_tx(key.first, key.second, BivPoly(c), Piecewise(1));
        else
            r.add_txi(key.first, key.second, BivPoly(c), Piecewise(1));
    }
    return r;
}

bool BivDist::is_zero() const {
    return pw2_.empty() && diag_.empty() && ddirac_.empty() && tx_.empty() && txi_.empty();
}

bool BivDist::free_of(Axis axis) const {
    if (has_diagonal()) return false;
    for (const auto& [k, u] : pw2_) {
        if (axis == Axis::X && (k.first || u.depends_on_x())) return false;
        if (axis == Axis::XI && (k.second || u.depends_on_xi())) return false;
    }
    if (axis == Axis::X) {
        if (!tx_.empty()) return false;
        for (const auto& [k, p] : txi_)
            if (!p.is_ground() || !p.base().is_constant()) return false;
    } else {
        if (!txi_.empty()) return false;
        for (const auto& [k, p] : tx_)
            if (!p.is_ground() || !p.base().is_constant()) return false;
    }
    return true;
}

void BivDist::add_pw2(const BivPoly& u, const Step& hx, const Step& hxi) { accumulate(pw2_, StepPair{hx, hxi}, u); }

void BivDist::add_term(const RawTerm& t) {
    if (!t.diagonal) {
        add_pw2(t.coeff, t.x_step, t.xi_step);
    } else if (!t.x_step) {
        accumulate(diag_, t.xi_step, t.coeff);
    } else {
        // H(x-a) H(x-xi) = H(x-a) H(a-xi) + H(xi-a) H(x-xi)
        const Rational& a = *t.x_step;
        Step merged = join_steps(t.xi_step, a);
        add_pw2(t.coeff, a, t.xi_step);
        add_pw2(-t.coeff, a, merged);
        accumulate(diag_, merged, t.coeff);
    }
}

void BivDist::add_diag_dirac(int k, const Step& label, const BivPoly& u) {
    BivPoly ui = u;
    for (int i = 0; i <= k && !ui.is_zero(); ++i) {
        accumulate(ddirac_, DiagDiracKey{k - i, label}, on_diagonal(ui) * signed_binomial(k, i));
        ui = derive_x(ui);
    }
}

void BivDist::add_tx(const Rational& a, int k, const BivPoly& u, const Piecewise& p) {
    BivPoly ui = u;
    for (int i = 0; i <= k && !ui.is_zero(); ++i) {
        Piecewise c = pw_mul(Piecewise(subst_x(ui, a) * signed_binomial(k, i)), p);
        accumulate(tx_, DiracKey{a, k - i}, c);
        ui = derive_x(ui);
    }
}

void BivDist::add_txi(const Rational& a, int k, const BivPoly& u, const Piecewise& p) {
    for (int i = 0; i <= k; ++i) {
        BivPoly ui = derive_xi_n(u, i);
        if (ui.is_zero()) break;
        Piecewise c = pw_mul(Piecewise(subst_xi(ui, a) * signed_binomial(k, i)), p);
        accumulate(txi_, DiracKey{a, k - i}, c);
    }
}

BivDist BivDist::operator-() const {
    BivDist r = *this;
    return r *= Rational(-1);
}

BivDist& BivDist::operator+=(const BivDist& o) {
    for (const auto& [k, v] : o.pw2_) accumulate(pw2_, k, v);
    for (const auto& [k, v] : o.diag_) accumulate(diag_, k, v);
    for (const auto& [k, v] : o.ddirac_) accumulate(ddirac_, k, v);
    for (const auto& [k, v] : o.tx_) accumulate(tx_, k, v);
    for (const auto& [k, v] : o.txi_) accumulate(txi_, k, v);
    return *this;
}

BivDist& BivDist::operator-=(const BivDist& o) { return *this += -o; }

BivDist& BivDist::operator*=(const Rational& c) {
    if (c.is_zero()) return *this = BivDist();
    for (auto& [k, v] : pw2_) v *= c;
    for (auto& [k, v] : diag_) v *= c;
    for (auto& [k, v] : ddirac_) v *= c;
    for (auto& [k, v] : tx_) v *= c;
    for (auto& [k, v] : txi_) v *= c;
    return *this;
}

BivDist biv_mul(const BivDist& a, const BivDist& b) {
    BivDist r;
    auto ta = terms_of(a);
    auto tb = terms_of(b);
    for (const Term& s : ta) {
        for (const Term& t : tb) {
            if (s.part == Part::Heaviside)
                mul_heaviside_with(r, s.h, t);
            else if (t.part == Part::Heaviside)
                mul_heaviside_with(r, t.h, s);
            else
                forbid("two Dirac factors cannot be multiplied");
        }
    }
    return r;
}

BivDist exchange(const BivDist& phi) {
    BivDist r;
    for (const auto& [k, u] : phi.pw2()) r.add_pw2(swap_vars(u), k.second, k.first);
    for (const auto& [b, u] : phi.diag()) {
        // u(xi,x) H(x-b) (1 - H(x-xi))
        BivPoly su = swap_vars(u);
        r.add_pw2(su, b, std::nullopt);
        r.add_term(RawTerm{-su, b, std::nullopt, true});
    }
    for (const auto& [k, c] : phi.diag_diracs()) {
        Rational sign = k.first % 2 == 0 ? Rational(1) : Rational(-1);
        r.add_diag_dirac(k.first, k.second, BivPoly::in_x(c) * sign);
    }
    for (const auto& [k, p] : phi.tensorial_x()) r.add_txi(k.first, k.second, BivPoly(Rational(1)), p);
    for (const auto& [k, p] : phi.tensorial_xi()) r.add_tx(k.first, k.second, BivPoly(Rational(1)), p);
    return r;
}

BivDist biv_derive(const BivDist& phi, Axis axis) {
    BivDist r;
    for (const auto& [k, u] : phi.pw2()) derive_pw2_term(r, u, k.first, k.second, axis);
    if (axis == Axis::X) {
        for (const auto& [b, u] : phi.diag()) {
            r.add_term(RawTerm{derive_x(u), std::nullopt, b, true});
            r.add_diag_dirac(0, b, u);
        }
        for (const auto& [k, c] : phi.diag_diracs()) r.add_diag_dirac(k.first + 1, k.second, BivPoly::in_xi(c));
        for (const auto& [k, p] : phi.tensorial_x()) r.add_tx(k.first, k.second + 1, BivPoly(Rational(1)), p);
        for (const auto& [k, p] : phi.tensorial_xi()) {
            if (!p.is_ground()) forbid("a Heaviside factor in x cannot be differentiated next to a Dirac term in xi");
            r.add_txi(k.first, k.second, BivPoly::in_x(derive(p.base())), Piecewise(1));
        }
    } else {
        for (const auto& [b, u] : phi.diag()) {
            // left-focused form: u H(x-b) H(x-xi) - u H(x-b) + u H(x-b) H(xi-b)
            r.add_term(RawTerm{derive_xi(u), b, std::nullopt, true});
            r.add_diag_dirac(0, b, -u);
            if (b) {
                derive_pw2_term(r, -u, b, std::nullopt, axis);
                derive_pw2_term(r, u, b, b, axis);
            }
        }
        for (const auto& [k, c] : phi.diag_diracs())
            for (const auto& [m, d] : to_xi_view(k.first, c)) add_from_xi_view(r, m + 1, k.second, d);
        for (const auto& [k, p] : phi.tensorial_x()) {
            if (!p.is_ground()) forbid("a Heaviside factor in xi cannot be differentiated next to a Dirac term in x");
            r.add_tx(k.first, k.second, BivPoly::in_xi(derive(p.base())), Piecewise(1));
        }
        for (const auto& [k, p] : phi.tensorial_xi()) r.add_txi(k.first, k.second + 1, BivPoly(Rational(1)), p);
    }
    return r;
}

BivDist biv_integrate(const BivDist& phi, Axis axis) {
    BivDist r;
    for (const auto& [k, u] : phi.pw2()) integrate_pw2_term(r, u, k.first, k.second, axis);
    if (axis == Axis::X) {
        for (const auto& [b, u] : phi.diag()) {
            // (U(x,xi) - U(xi,xi)) H(x-xi) + U(xi,xi) (1 - H(xi-0)), times [H(xi-b)]
            BivPoly U = integrate_x(u);
            BivPoly Ud = BivPoly::in_xi(on_diagonal(U));
            r.add_term(RawTerm{U - Ud, std::nullopt, b, true});
            r.add_pw2(Ud, std::nullopt, b);
            r.add_pw2(-Ud, std::nullopt, join_steps(b, Rational(0)));
        }
        for (const auto& [k, c] : phi.diag_diracs()) {
            const auto& [order, label] = k;
            BivPoly cu = BivPoly::in_xi(c);
            if (order > 0) {
                r.add_diag_dirac(order - 1, label, cu);
                continue;
            }
            // c(xi) [H_b] (H(x-xi) - (1 - H(xi-0)))
            r.add_term(RawTerm{cu, std::nullopt, label, true});
            r.add_pw2(-cu, std::nullopt, label);
            r.add_pw2(cu, std::nullopt, join_steps(label, Rational(0)));
        }
        for (const auto& [k, p] : phi.tensorial_x()) {
            if (k.second > 0)
                r.add_tx(k.first, k.second - 1, BivPoly(Rational(1)), p);
            else
                add_dirac_antiderivative(r, p, k.first, Axis::X);
        }
        for (const auto& [k, p] : phi.tensorial_xi())
            r.add_txi(k.first, k.second, BivPoly(Rational(1)), pw_integrate(p));
    } else {
        for (const auto& [b, u] : phi.diag()) {
            // left-focused form, then (V(x,xi) - V(x,x)) H(x-xi) + V(x,x) H(x-0), times [H(x-b)]
            BivPoly V = integrate_xi(u);
            BivPoly Vd = BivPoly::in_x(on_diagonal(V));
            r.add_term(RawTerm{V - Vd, b, std::nullopt, true});
            r.add_pw2(Vd, join_steps(b, Rational(0)), std::nullopt);
            if (b) {
                integrate_pw2_term(r, -u, b, std::nullopt, axis);
                integrate_pw2_term(r, u, b, b, axis);
            }
        }
        for (const auto& [k, c] : phi.diag_diracs()) {
            const Step& label = k.second;
            for (const auto& [m, d] : to_xi_view(k.first, c)) {
                if (m > 0) {
                    add_from_xi_view(r, m - 1, label, d);
                    continue;
                }
                // d(x) [H(x-b)] (H(x-0) - H(x-xi))
                BivPoly du = BivPoly::in_x(d);
                r.add_pw2(du, join_steps(label, Rational(0)), std::nullopt);
                r.add_term(RawTerm{-du, label, std::nullopt, true});
            }
        }
        for (const auto& [k, p] : phi.tensorial_x())
            r.add_tx(k.first, k.second, BivPoly(Rational(1)), pw_integrate(p));
        for (const auto& [k, p] : phi.tensorial_xi()) {
            if (k.second > 0)
                r.add_txi(k.first, k.second - 1, BivPoly(Rational(1)), p);
            else
                add_dirac_antiderivative(r, p, k.first, Axis::XI);
        }
    }
    return r;
}

BivDist biv_evaluate(const BivDist& phi, Axis axis, const Rational& c) {
    BivDist r;
    if (axis == Axis::X) {
        for (const auto& [k, u] : phi.pw2())
            r.add_pw2(BivPoly::in_xi(subst_x(u, c)) * step_value(k.first, c), std::nullopt, k.second);
        for (const auto& [b, u] : phi.diag()) {
            // e^x_c H(x-xi) = 1 - H(xi-c)
            BivPoly w = BivPoly::in_xi(subst_x(u, c));
            r.add_pw2(w, std::nullopt, b);
            r.add_pw2(-w, std::nullopt, join_steps(b, c));
        }
        for (const auto& [k, p] : phi.tensorial_xi())
            r.add_txi(k.first, k.second, BivPoly(pw_evaluate(p, c)), Piecewise(1));
    } else {
        for (const auto& [k, u] : phi.pw2())
            r.add_pw2(BivPoly::in_x(subst_xi(u, c)) * step_value(k.second, c), k.first, std::nullopt);
        for (const auto& [b, u] : phi.diag()) {
            // e^xi_c H(x-xi) = H(x-c)
            r.add_pw2(BivPoly::in_x(subst_xi(u, c)) * step_value(b, c), c, std::nullopt);
        }
        for (const auto& [k, p] : phi.tensorial_x())
            r.add_tx(k.first, k.second, BivPoly(pw_evaluate(p, c)), Piecewise(1));
    }
    return r;
}

BivDist biv_definite_integral(const BivDist& phi, Axis axis, const Rational& alpha, const Rational& beta) {
    if (!(alpha < beta)) throw DomainError("definite integral needs alpha < beta");
    BivDist I = biv_integrate(phi, axis);
    return biv_evaluate(I, axis, beta) - biv_evaluate(I, axis, alpha);
}

BivDist diagonal_normalize(const std::vector<RawTerm>& raw) {
    BivDist r;
    for (const auto& t : raw) r.add_term(t);
    return r;
}

BivDist diagonal_normalize(const BivDist& phi) {
    std::vector<RawTerm> raw;
    for (const auto& [k, u] : phi.pw2()) raw.push_back(RawTerm{u, k.first, k.second, false});
    for (const auto& [b, u] : phi.diag()) raw.push_back(RawTerm{u, std::nullopt, b, true});
    BivDist r = diagonal_normalize(raw);
    BivDist rest = phi;
    for (const auto& [k, u] : phi.pw2()) rest.add_pw2(-u, k.first, k.second);
    for (const auto& [b, u] : phi.diag()) rest.add_term(RawTerm{-u, std::nullopt, b, true});
    return r + rest;
}

BivDist biv_reduce_mod(const BivDist& phi, const Rational& alpha, const Rational& beta) {
    if (!(alpha < beta)) throw DomainError("interval needs alpha < beta");
    // returns false when the factor vanishes; clears it when it becomes 1
    auto reduce = [&](Step s, bool& alive) -> Step {
        alive = true;
        if (!s) return s;
        if (*s >= beta) alive = false;
        if (*s <= alpha) return std::nullopt;
        return s;
    };
    BivDist r;
    bool ax = true, axi = true;
    for (const auto& [k, u] : phi.pw2()) {
        Step hx = reduce(k.first, ax), hxi = reduce(k.second, axi);
        if (ax && axi) r.add_pw2(u, hx, hxi);
    }
    for (const auto& [b, u] : phi.diag()) {
        Step hb = reduce(b, ax);
        if (ax) r.add_term(RawTerm{u, std::nullopt, hb, true});
    }
    for (const auto& [k, c] : phi.diag_diracs()) {
        Step hb = reduce(k.second, ax);
        if (ax) r.add_diag_dirac(k.first, hb, BivPoly::in_xi(c));
    }
    for (const auto& [k, p] : phi.tensorial_x())
        r.add_tx(k.first, k.second, BivPoly(Rational(1)), pw_reduce_mod(p, alpha, beta));
    for (const auto& [k, p] : phi.tensorial_xi())
        r.add_txi(k.first, k.second, BivPoly(Rational(1)), pw_reduce_mod(p, alpha, beta));
    return r;
}

Rational eval2(const BivDist& phi, const Rational& x0, const Rational& xi0) {
    if (phi.has_diracs()) throw DomainError("pointwise value of a Dirac term is undefined");
    auto on = [](const Step& s, const Rational& t) { return !s || heaviside(t - *s).value() == 1; };
    Rational v;
    for (const auto& [k, u] : phi.pw2())
        if (on(k.first, x0) && on(k.second, xi0)) v += evaluate(u, x0, xi0);
    if (heaviside(x0 - xi0).value() == 1)
        for (const auto& [b, u] : phi.diag())
            if (on(b, xi0)) v += evaluate(u, x0, xi0);
    return v;
}

Dist to_univariate(const BivDist& phi, Axis axis) {
    Axis other = axis == Axis::X ? Axis::XI : Axis::X;
    if (!phi.free_of(other)) throw DomainError("element depends on both variables");
    Dist r;
    for (const auto& [k, u] : phi.pw2()) {
        Poly f = axis == Axis::X ? u.as_x_poly() : u.as_xi_poly();
        const Step& s = axis == Axis::X ? k.first : k.second;
        r += s ? Dist(Piecewise::step(*s, f)) : Dist(f);
    }
    const auto& diracs = axis == Axis::X ? phi.tensorial_x() : phi.tensorial_xi();
    for (const auto& [k, p] : diracs) r.add_dirac(k.first, k.second, p.base().constant_value());
    return r;
}

BivDist biv_shift(const BivDist& phi, Axis axis, const Rational& c) {
    if (phi.has_diagonal()) throw DomainError("shift along the diagonal is not defined");
    auto shift_step = [&](const Step& s) -> Step { return s ? Step(*s - c) : s; };
    auto shift_poly = [&](const BivPoly& u) {
        BivPoly r;
        BivPoly lin = (axis == Axis::X ? BivPoly::x() : BivPoly::xi()) + BivPoly(c);
        for (const auto& [e, k] : u.terms()) {
            int p = axis == Axis::X ? e.first : e.second;
            BivPoly m = BivPoly::monomial(k, axis == Axis::X ? 0 : e.first, axis == Axis::X ? e.second : 0);
            for (int i = 0; i < p; ++i) m = m * lin;
            r += m;
        }
        return r;
    };
    BivDist r;
    for (const auto& [k, u] : phi.pw2()) {
        if (axis == Axis::X)
            r.add_pw2(shift_poly(u), shift_step(k.first), k.second);
        else
            r.add_pw2(shift_poly(u), k.first, shift_step(k.second));
    }
    for (const auto& [k, p] : phi.tensorial_x()) {
        if (axis == Axis::X)
            r.add_tx(k.first - c, k.second, BivPoly(Rational(1)), p);
        else
            r.add_tx(k.first, k.second, BivPoly(Rational(1)), pw_shift(p, c));
    }
    for (const auto& [k, p] : phi.tensorial_xi()) {
        if (axis == Axis::XI)
            r.add_txi(k.first - c, k.second, BivPoly(Rational(1)), p);
        else
            r.add_txi(k.first, k.second, BivPoly(Rational(1)), pw_shift(p, c));
    }
    return r;
}

}  // namespace dirac
