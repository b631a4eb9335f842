#include "dirac/piecewise.hpp"

namespace dirac {

namespace {
const Poly kZeroPoly;
}

Piecewise Piecewise::step(const Rational& a, const Poly& f) {
    Piecewise p;
    p.add_step(a, f);
    return p;
}

Piecewise Piecewise::co_step(const Rational& a) {
    Piecewise p(1);
    p.add_step(a, Poly(-1));
    return p;
}

const Poly& Piecewise::step_coeff(const Rational& a) const {
    auto it = steps_.find(a);
    return it == steps_.end() ? kZeroPoly : it->second;
}

std::set<Rational> Piecewise::jump_points() const {
    std::set<Rational> s;
    for (const auto& [a, f] : steps_) s.insert(a);
    return s;
}

void Piecewise::add_step(const Rational& a, const Poly& f) {
    if (f.is_zero()) return;
    auto [it, fresh] = steps_.try_emplace(a, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) steps_.erase(it);
    }
}

Piecewise Piecewise::operator-() const {
    Piecewise r;
    r.base_ = -base_;
    for (const auto& [a, f] : steps_) r.steps_.emplace(a, -f);
    return r;
}

Piecewise& Piecewise::operator+=(const Piecewise& o) {
    base_ += o.base_;
    for (const auto& [a, f] : o.steps_) add_step(a, f);
    return *this;
}

Piecewise& Piecewise::operator-=(const Piecewise& o) {
    base_ -= o.base_;
    for (const auto& [a, f] : o.steps_) add_step(a, -f);
    return *this;
}

Piecewise& Piecewise::operator*=(const Rational& c) {
    if (c.is_zero()) return *this = Piecewise();
    base_ *= c;
    for (auto& [a, f] : steps_) f *= c;
    return *this;
}

Piecewise pw_mul(const Piecewise& p, const Piecewise& q) {
    Piecewise r(p.base() * q.base());
    for (const auto& [b, g] : q.steps()) r.add_step(b, p.base() * g);
    for (const auto& [a, f] : p.steps()) {
        r.add_step(a, f * q.base());
        for (const auto& [b, g] : q.steps()) r.add_step(join(a, b), f * g);
    }
    return r;
}

Piecewise pw_integrate(const Piecewise& p) {
    Piecewise r(integrate(p.base()));
    for (const auto& [a, f] : p.steps()) {
        Poly F = integrate(f);
        Rational Fa = evaluate(F, a);
        r.add_step(a, F - Poly(Fa));
        r += Piecewise(co_heaviside(a).as_rational() * Fa);
    }
    return r;
}

Piecewise pw_derive(const Piecewise& p) {
    Piecewise r(derive(p.base()));
    for (const auto& [a, f] : p.steps()) r.add_step(a, derive(f));
    return r;
}

Piecewise pw_shift(const Piecewise& p, const Rational& c) {
    Piecewise r(shift(p.base(), c));
    for (const auto& [a, f] : p.steps()) r.add_step(a - c, shift(f, c));
    return r;
}

Rational pw_evaluate(const Piecewise& p, const Rational& c) {
    Rational v = evaluate(p.base(), c);
    for (const auto& [a, f] : p.steps())
        if (co_heaviside(a - c).value() == 1) v += evaluate(f, c);
    return v;
}

Piecewise pw_pseudo_eval(const Piecewise& p) { return p - pw_integrate(pw_derive(p)); }

Rational eval_at(const Piecewise& p, const Rational& t) {
    Rational v = evaluate(p.base(), t);
    for (const auto& [a, f] : p.steps())
        if (heaviside(t - a).value() == 1) v += evaluate(f, t);
    return v;
}

Piecewise pw_integrate_from(const Piecewise& p, const Rational& b) {
    Piecewise I = pw_integrate(p);
    return I - Piecewise(pw_evaluate(I, b));
}

Piecewise pw_reduce_mod(const Piecewise& p, const Rational& alpha, const Rational& beta) {
    Piecewise r(p.base());
    for (const auto& [a, f] : p.steps()) {
        if (a >= beta) continue;
        if (a <= alpha)
            r += Piecewise(f);
        else
            r.add_step(a, f);
    }
    return r;
}

}  // namespace dirac
