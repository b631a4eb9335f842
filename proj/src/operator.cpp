#include "dirac/operator.hpp"

#include "dirac/error.hpp"

#include <algorithm>

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

/// Splits sum c x^p I x^q into q -> left polynomial.
std::map<int, Poly> by_right_power(const BivPoly& fg) {
    std::map<int, std::vector<Rational>> tmp;
    for (const auto& [e, c] : fg.terms()) {
        auto& v = tmp[e.second];
        if (v.size() <= static_cast<std::size_t>(e.first)) v.resize(static_cast<std::size_t>(e.first) + 1);
        v[static_cast<std::size_t>(e.first)] += c;
    }
    std::map<int, Poly> out;
    for (auto& [q, v] : tmp) out.emplace(q, Poly(std::move(v)));
    return out;
}

BivPoly tensor(const Poly& f, const Poly& g) { return BivPoly::in_x(f) * BivPoly::in_xi(g); }

IdOp left_mul(const Poly& f, const IdOp& b) {
    IdOp r;
    for (const auto& [k, c] : b.diff_part()) r.add_diff(k, f * c);
    r.add_int(BivPoly::in_x(f) * b.int_part());
    for (const auto& [key, c] : b.eval_diff_part()) r.add_eval_diff(key.first, key.second, f * c);
    for (const auto& [a, fg] : b.eval_int_part()) r.add_eval_int(a, BivPoly::in_x(f) * fg);
    return r;
}

IdOp left_diff(const IdOp& b) {
    IdOp r;
    for (const auto& [k, c] : b.diff_part()) {
        r.add_diff(k, derive(c));
        r.add_diff(k + 1, c);
    }
    // D f I g = f' I g + f g
    r.add_int(derive_x(b.int_part()));
    for (const auto& [q, f] : by_right_power(b.int_part())) r.add_diff(0, f * Poly::monomial(Rational(1), q));
    for (const auto& [key, c] : b.eval_diff_part()) r.add_eval_diff(key.first, key.second, derive(c));
    for (const auto& [a, fg] : b.eval_int_part()) r.add_eval_int(a, derive_x(fg));
    return r;
}

IdOp left_int(const IdOp& b);

/// I c D^k = c D^{k-1} - I c' D^{k-1} - c(0) ev(0) D^{k-1}
IdOp int_of_diff(const Poly& c, int k) {
    IdOp r;
    if (k == 0) {
        r.add_int(tensor(Poly(1), c));
        return r;
    }
    r.add_diff(k - 1, c);
    r.add_eval_diff(Rational(0), k - 1, Poly(-evaluate(c, Rational(0))));
    if (!derive(c).is_zero()) {
        IdOp tail;
        tail.add_diff(k - 1, derive(c));
        r -= left_int(tail);
    }
    return r;
}

IdOp left_int(const IdOp& b) {
    IdOp r;
    for (const auto& [k, c] : b.diff_part()) r += int_of_diff(c, k);
    // I f I g = F I g - I F g with F = I f
    for (const auto& [q, f] : by_right_power(b.int_part())) {
        Poly F = integrate(f);
        Poly g = Poly::monomial(Rational(1), q);
        r.add_int(tensor(F, g));
        r.add_int(-tensor(Poly(1), F * g));
    }
    for (const auto& [key, c] : b.eval_diff_part()) r.add_eval_diff(key.first, key.second, integrate(c));
    for (const auto& [a, fg] : b.eval_int_part()) r.add_eval_int(a, integrate_x(fg));
    return r;
}

IdOp left_eval(const Rational& a, const IdOp& b) {
    IdOp r;
    for (const auto& [k, c] : b.diff_part()) r.add_eval_diff(a, k, Poly(evaluate(c, a)));
    r.add_eval_int(a, BivPoly::in_xi(subst_x(b.int_part(), a)));
    for (const auto& [key, c] : b.eval_diff_part()) r.add_eval_diff(key.first, key.second, Poly(evaluate(c, a)));
    for (const auto& [p, fg] : b.eval_int_part()) r.add_eval_int(p, BivPoly::in_xi(subst_x(fg, a)));
    return r;
}

IdOp left_diff_n(IdOp b, int k) {
    for (int i = 0; i < k && !b.is_zero(); ++i) b = left_diff(b);
    return b;
}

}  // namespace

IdOp IdOp::mul(const Poly& f) {
    IdOp r;
    r.add_diff(0, f);
    return r;
}

IdOp IdOp::D(int k) {
    if (k < 0) throw DomainError("negative derivative order");
    IdOp r;
    r.add_diff(k, Poly(1));
    return r;
}

IdOp IdOp::I() {
    IdOp r;
    r.add_int(BivPoly(Rational(1)));
    return r;
}

IdOp IdOp::ev(const Rational& a) {
    IdOp r;
    r.add_eval_diff(a, 0, Poly(1));
    return r;
}

int IdOp::diff_order() const { return diff_.empty() ? -1 : diff_.rbegin()->first; }

int IdOp::eval_diff_order() const {
    int k = -1;
    for (const auto& [key, c] : ediff_) k = std::max(k, key.second);
    return k;
}

void IdOp::add_diff(int k, const Poly& f) { accumulate(diff_, k, f); }

void IdOp::add_int(const BivPoly& fg) { integ_ += fg; }

void IdOp::add_eval_diff(const Rational& a, int k, const Poly& f) { accumulate(ediff_, EvalDiffKey{a, k}, f); }

void IdOp::add_eval_int(const Rational& a, const BivPoly& fg) {
    if (a.is_zero()) return;
    accumulate(eint_, a, fg);
}

IdOp IdOp::operator-() const {
    IdOp r = *this;
    return r *= Rational(-1);
}

IdOp& IdOp::operator+=(const IdOp& o) {
    for (const auto& [k, c] : o.diff_) add_diff(k, c);
    add_int(o.integ_);
    for (const auto& [key, c] : o.ediff_) add_eval_diff(key.first, key.second, c);
    for (const auto& [a, fg] : o.eint_) add_eval_int(a, fg);
    return *this;
}

IdOp& IdOp::operator-=(const IdOp& o) { return *this += -o; }

IdOp& IdOp::operator*=(const Rational& c) {
    if (c.is_zero()) return *this = IdOp();
    for (auto& [k, v] : diff_) v *= c;
    integ_ *= c;
    for (auto& [k, v] : ediff_) v *= c;
    for (auto& [k, v] : eint_) v *= c;
    return *this;
}

IdOp op_compose(const IdOp& a, const IdOp& b) {
    IdOp r;
    for (const auto& [k, f] : a.diff_part()) r += left_mul(f, left_diff_n(b, k));
    for (const auto& [q, f] : by_right_power(a.int_part()))
        r += left_mul(f, left_int(left_mul(Poly::monomial(Rational(1), q), b)));
    for (const auto& [key, f] : a.eval_diff_part()) r += left_mul(f, left_eval(key.first, left_diff_n(b, key.second)));
    for (const auto& [pt, fg] : a.eval_int_part())
        for (const auto& [q, f] : by_right_power(fg))
            r += left_mul(f, left_eval(pt, left_int(left_mul(Poly::monomial(Rational(1), q), b))));
    return r;
}

IdOp op_power(const IdOp& a, int k) {
    if (k < 0) throw DomainError("negative operator power");
    IdOp r = IdOp::identity();
    for (int i = 0; i < k; ++i) r = op_compose(a, r);
    return r;
}

Poly act(const IdOp& a, const Poly& f) {
    Poly r;
    for (const auto& [k, c] : a.diff_part()) r += c * derive(f, k);
    for (const auto& [q, c] : by_right_power(a.int_part())) r += c * integrate(Poly::monomial(Rational(1), q) * f);
    for (const auto& [key, c] : a.eval_diff_part()) r += c * evaluate(derive(f, key.second), key.first);
    for (const auto& [pt, fg] : a.eval_int_part())
        for (const auto& [q, c] : by_right_power(fg))
            r += c * evaluate(integrate(Poly::monomial(Rational(1), q) * f), pt);
    return r;
}

Piecewise act_pw(const IdOp& a, const Piecewise& p) {
    if (a.diff_order() > 0 || a.eval_diff_order() > 0)
        throw UnsupportedOperator(
            "derivatives do not act on piecewise functions through the operator ring (strong axiom fails)");
    Piecewise r;
    if (auto it = a.diff_part().find(0); it != a.diff_part().end()) r += pw_mul(Piecewise(it->second), p);
    for (const auto& [q, c] : by_right_power(a.int_part()))
        r += pw_mul(Piecewise(c), pw_integrate(pw_mul(Piecewise(Poly::monomial(Rational(1), q)), p)));
    for (const auto& [key, c] : a.eval_diff_part()) r += Piecewise(c * pw_evaluate(p, key.first));
    for (const auto& [pt, fg] : a.eval_int_part())
        for (const auto& [q, c] : by_right_power(fg))
            r += Piecewise(c * pw_evaluate(pw_integrate(pw_mul(Piecewise(Poly::monomial(Rational(1), q)), p)), pt));
    return r;
}

Dist act_dist(const IdOp& a, const Dist& phi) {
    auto derive_n = [](Dist d, int k) {
        for (int i = 0; i < k; ++i) d = dist_derive(d);
        return d;
    };
    Dist r;
    for (const auto& [k, c] : a.diff_part()) r += module_scalar_mul(c, derive_n(phi, k));
    for (const auto& [q, c] : by_right_power(a.int_part()))
        r += module_scalar_mul(c, dist_integrate(module_scalar_mul(Poly::monomial(Rational(1), q), phi)));
    for (const auto& [key, c] : a.eval_diff_part())
        r += Dist(c * dist_evaluate(derive_n(phi, key.second), key.first));
    for (const auto& [pt, fg] : a.eval_int_part())
        for (const auto& [q, c] : by_right_power(fg))
            r += Dist(c * dist_evaluate(dist_integrate(module_scalar_mul(Poly::monomial(Rational(1), q), phi)), pt));
    return r;
}

BivDist act_axis(const IdOp& a, const BivDist& phi, Axis axis) {
    auto lift = [axis](const Poly& f) {
        return BivDist(axis == Axis::X ? BivPoly::in_x(f) : BivPoly::in_xi(f));
    };
    auto times = [&](const Poly& f, const BivDist& d) { return biv_mul(lift(f), d); };
    auto derive_n = [axis](BivDist d, int k) {
        for (int i = 0; i < k; ++i) d = biv_derive(d, axis);
        return d;
    };
    BivDist r;
    for (const auto& [k, c] : a.diff_part()) r += times(c, derive_n(phi, k));
    for (const auto& [q, c] : by_right_power(a.int_part()))
        r += times(c, biv_integrate(times(Poly::monomial(Rational(1), q), phi), axis));
    for (const auto& [key, c] : a.eval_diff_part())
        r += times(c, biv_evaluate(derive_n(phi, key.second), axis, key.first));
    for (const auto& [pt, fg] : a.eval_int_part())
        for (const auto& [q, c] : by_right_power(fg))
            r += times(c, biv_evaluate(biv_integrate(times(Poly::monomial(Rational(1), q), phi), axis), axis, pt));
    return r;
}

StieltjesCond::StieltjesCond(IdOp op) : op_(std::move(op)) {
    if (!op_.diff_part().empty() || !op_.int_part().is_zero())
        throw DomainError("a boundary condition may only contain evaluation terms");
    for (const auto& [key, c] : op_.eval_diff_part())
        if (!c.is_constant()) throw DomainError("a boundary condition needs constant coefficients");
    for (const auto& [pt, fg] : op_.eval_int_part())
        if (fg.depends_on_x()) throw DomainError("a boundary condition needs constant coefficients");
}

Rational apply_cond(const StieltjesCond& beta, const Poly& f) { return act(beta.op(), f).constant_value(); }

}  // namespace dirac
