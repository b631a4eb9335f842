#include "dirac/poly.hpp"

#include <algorithm>

namespace dirac {

namespace {
const Rational kZero;
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, int k) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

const Rational& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Poly derive(const Poly& f) {
    std::vector<Rational> r;
    for (int k = 1; k <= f.degree(); ++k) r.push_back(f.coeff(k) * Rational(k));
    return Poly(std::move(r));
}

Poly derive(const Poly& f, int times) {
    Poly r = f;
    for (int i = 0; i < times && !r.is_zero(); ++i) r = derive(r);
    return r;
}

Poly integrate(const Poly& f) {
    std::vector<Rational> r(static_cast<std::size_t>(f.degree()) + 2);
    for (int k = 0; k <= f.degree(); ++k) r[static_cast<std::size_t>(k) + 1] = f.coeff(k) / Rational(k + 1);
    return Poly(std::move(r));
}

Poly compose(const Poly& f, const Poly& g) {
    Poly r;
    for (int k = f.degree(); k >= 0; --k) r = r * g + Poly(f.coeff(k));
    return r;
}

Poly shift(const Poly& f, const Rational& a) {
    std::vector<Rational> lin{a, Rational(1)};
    return compose(f, Poly(std::move(lin)));
}

Rational evaluate(const Poly& f, const Rational& c) {
    Rational r;
    for (int k = f.degree(); k >= 0; --k) r = r * c + f.coeff(k);
    return r;
}

Poly integrate_from(const Poly& f, const Rational& c) {
    Poly F = integrate(f);
    return F - Poly(evaluate(F, c));
}

Rational definite_integral(const Poly& f, const Rational& c, const Rational& d) {
    Poly F = integrate(f);
    return evaluate(F, d) - evaluate(F, c);
}

}  // namespace dirac
