#include "dirac/distribution.hpp"

#include "dirac/error.hpp"

#include <algorithm>

namespace dirac {

Dist Dist::dirac(const Rational& a, int k, const Rational& c) {
    if (k < 0) throw DomainError("negative Dirac derivative order");
    Dist d;
    d.add_dirac(a, k, c);
    return d;
}

void Dist::add_dirac(const Rational& a, int k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = diracs_.try_emplace(DiracKey{a, k}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) diracs_.erase(it);
    }
}

Dist Dist::operator-() const {
    Dist r(-pw_);
    for (const auto& [key, c] : diracs_) r.diracs_.emplace(key, -c);
    return r;
}

Dist& Dist::operator+=(const Dist& o) {
    pw_ += o.pw_;
    for (const auto& [key, c] : o.diracs_) add_dirac(key.first, key.second, c);
    return *this;
}

Dist& Dist::operator-=(const Dist& o) {
    pw_ -= o.pw_;
    for (const auto& [key, c] : o.diracs_) add_dirac(key.first, key.second, -c);
    return *this;
}

Dist& Dist::operator*=(const Rational& c) {
    if (c.is_zero()) return *this = Dist();
    pw_ *= c;
    for (auto& [key, v] : diracs_) v *= c;
    return *this;
}

Dist reduce_product(const Poly& f, const Rational& a, int k) {
    Dist r;
    Poly fi = f;
    for (int i = 0; i <= k && !fi.is_zero(); ++i) {
        Rational c = binomial(k, i) * evaluate(fi, a);
        if (i % 2 == 1) c = -c;
        r.add_dirac(a, k - i, c);
        fi = derive(fi);
    }
    return r;
}

Dist module_scalar_mul(const Poly& f, const Dist& phi) {
    Dist r(pw_mul(Piecewise(f), phi.pw()));
    for (const auto& [key, c] : phi.diracs()) r += reduce_product(f, key.first, key.second) * c;
    return r;
}

Dist dist_mul(const Piecewise& p, const Dist& phi) {
    if (!phi.has_diracs()) return Dist(pw_mul(p, phi.pw()));
    if (!p.is_ground())
        throw ForbiddenProduct(
            "product of distributions is undefined: a Heaviside factor cannot multiply Dirac terms");
    return module_scalar_mul(p.base(), phi);
}

Dist dist_derive(const Dist& phi) {
    Dist r(pw_derive(phi.pw()));
    for (const auto& [a, f] : phi.pw().steps()) r.add_dirac(a, 0, evaluate(f, a));
    for (const auto& [key, c] : phi.diracs()) r.add_dirac(key.first, key.second + 1, c);
    return r;
}

Dist dist_integrate(const Dist& phi) {
    Dist r(pw_integrate(phi.pw()));
    for (const auto& [key, c] : phi.diracs()) {
        const auto& [a, k] = key;
        if (k > 0) {
            r.add_dirac(a, k - 1, c);
        } else {
            Piecewise base = Piecewise::step(a) - Piecewise(co_heaviside(a).as_rational());
            r += Dist(base * c);
        }
    }
    return r;
}

Dist dist_shift(const Dist& phi, const Rational& c) {
    Dist r(pw_shift(phi.pw(), c));
    for (const auto& [key, v] : phi.diracs()) r.add_dirac(key.first - c, key.second, v);
    return r;
}

Rational dist_evaluate(const Dist& phi, const Rational& c) { return pw_evaluate(phi.pw(), c); }

Dist dist_integrate_from(const Dist& phi, const Rational& b) {
    Dist I = dist_integrate(phi);
    return I - Dist(dist_evaluate(I, b));
}

Dist dist_pseudo_eval(const Dist& phi) { return phi - dist_integrate(dist_derive(phi)); }

std::map<Rational, int> filtration_level(const Dist& phi) {
    std::map<Rational, int> lv;
    for (const auto& [a, f] : phi.pw().steps()) lv.try_emplace(a, 0);
    for (const auto& [key, c] : phi.diracs()) {
        int& l = lv.try_emplace(key.first, 0).first->second;
        l = std::max(l, key.second + 1);
    }
    return lv;
}

std::set<Rational> support_points(const Dist& phi) {
    std::set<Rational> s;
    for (const auto& [a, l] : filtration_level(phi)) s.insert(a);
    return s;
}

}  // namespace dirac
