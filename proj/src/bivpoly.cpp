#include "dirac/bivpoly.hpp"

#include "dirac/error.hpp"

#include <algorithm>

namespace dirac {

BivPoly::BivPoly(const Rational& c) { add_term(0, 0, c); }

BivPoly BivPoly::monomial(const Rational& c, int px, int pxi) {
    BivPoly r;
    r.add_term(px, pxi, c);
    return r;
}

BivPoly BivPoly::in_x(const Poly& f) {
    BivPoly r;
    for (int k = 0; k <= f.degree(); ++k) r.add_term(k, 0, f.coeff(k));
    return r;
}

BivPoly BivPoly::in_xi(const Poly& f) {
    BivPoly r;
    for (int k = 0; k <= f.degree(); ++k) r.add_term(0, k, f.coeff(k));
    return r;
}

bool BivPoly::depends_on_x() const {
    return std::any_of(t_.begin(), t_.end(), [](const auto& e) { return e.first.first > 0; });
}

bool BivPoly::depends_on_xi() const {
    return std::any_of(t_.begin(), t_.end(), [](const auto& e) { return e.first.second > 0; });
}

int BivPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
}

int BivPoly::degree_xi() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
}

Poly BivPoly::as_x_poly() const {
    if (depends_on_xi()) throw DomainError("bivariate polynomial depends on xi");
    return subst_xi(*this, Rational(0));
}

Poly BivPoly::as_xi_poly() const {
    if (depends_on_x()) throw DomainError("bivariate polynomial depends on x");
    return subst_x(*this, Rational(0));
}

void BivPoly::add_term(int px, int pxi, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(Exp{px, pxi}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

BivPoly BivPoly::operator-() const {
    BivPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

BivPoly& BivPoly::operator+=(const BivPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, c);
    return *this;
}

BivPoly& BivPoly::operator-=(const BivPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.first, e.second, -c);
    return *this;
}

BivPoly& BivPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, v] : t_) v *= c;
    return *this;
}

BivPoly operator*(const BivPoly& a, const BivPoly& b) {
    BivPoly r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BivPoly swap_vars(const BivPoly& u) {
    BivPoly r;
    for (const auto& [e, c] : u.terms()) r.add_term(e.second, e.first, c);
    return r;
}

BivPoly derive_x(const BivPoly& u) {
    BivPoly r;
    for (const auto& [e, c] : u.terms())
        if (e.first > 0) r.add_term(e.first - 1, e.second, c * Rational(e.first));
    return r;
}

BivPoly derive_xi(const BivPoly& u) {
    BivPoly r;
    for (const auto& [e, c] : u.terms())
        if (e.second > 0) r.add_term(e.first, e.second - 1, c * Rational(e.second));
    return r;
}

BivPoly derive_x(const BivPoly& u, int times) {
    BivPoly r = u;
    for (int i = 0; i < times && !r.is_zero(); ++i) r = derive_x(r);
    return r;
}

BivPoly integrate_x(const BivPoly& u) {
    BivPoly r;
    for (const auto& [e, c] : u.terms()) r.add_term(e.first + 1, e.second, c / Rational(e.first + 1));
    return r;
}

BivPoly integrate_xi(const BivPoly& u) {
    BivPoly r;
    for (const auto& [e, c] : u.terms()) r.add_term(e.first, e.second + 1, c / Rational(e.second + 1));
    return r;
}

Poly subst_x(const BivPoly& u, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(u.degree_xi(), -1) + 1));
    for (const auto& [e, k] : u.terms()) v[static_cast<std::size_t>(e.second)] += k * power(c, e.first);
    return Poly(std::move(v));
}

Poly subst_xi(const BivPoly& u, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(u.degree_x(), -1) + 1));
    for (const auto& [e, k] : u.terms()) v[static_cast<std::size_t>(e.first)] += k * power(c, e.second);
    return Poly(std::move(v));
}

Poly on_diagonal(const BivPoly& u) {
    int d = 0;
    for (const auto& [e, c] : u.terms()) d = std::max(d, e.first + e.second);
    std::vector<Rational> v(static_cast<std::size_t>(d) + 1);
    for (const auto& [e, c] : u.terms()) v[static_cast<std::size_t>(e.first + e.second)] += c;
    return Poly(std::move(v));
}

Rational evaluate(const BivPoly& u, const Rational& x0, const Rational& xi0) {
    Rational r;
    for (const auto& [e, c] : u.terms()) r += c * power(x0, e.first) * power(xi0, e.second);
    return r;
}

}  // namespace dirac
