#pragma once

#include "dirac/rational.hpp"

#include <vector>

namespace dirac {

/// Element of the ground algebra Q[x]; coefficient i belongs to x^i and the
/// vector never ends in a zero.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x() { return monomial(Rational(1), 1); }
    static Poly monomial(const Rational& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational constant_value() const { return c_.empty() ? Rational(0) : c_[0]; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { Poly r = a; r *= b; return r; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

Poly derive(const Poly& f);
Poly derive(const Poly& f, int times);
/// Antiderivative vanishing at the initialization point 0.
Poly integrate(const Poly& f);
/// f(x + a).
Poly shift(const Poly& f, const Rational& a);
Rational evaluate(const Poly& f, const Rational& c);
/// Antiderivative vanishing at c.
Poly integrate_from(const Poly& f, const Rational& c);
/// F(d) - F(c) for any antiderivative F.
Rational definite_integral(const Poly& f, const Rational& c, const Rational& d);
/// Substitutes g for x.
Poly compose(const Poly& f, const Poly& g);

}  // namespace dirac
