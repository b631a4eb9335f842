#pragma once

#include "dirac/poly.hpp"

#include <map>
#include <utility>

namespace dirac {

/// Sparse element of Q[x, xi]; keys are (x-power, xi-power).
class BivPoly {
public:
    using Exp = std::pair<int, int>;

    BivPoly() = default;
    BivPoly(const Rational& c);
    BivPoly(long c) : BivPoly(Rational(c)) {}

    static BivPoly monomial(const Rational& c, int px, int pxi);
    static BivPoly in_x(const Poly& f);
    static BivPoly in_xi(const Poly& f);
    static BivPoly x() { return monomial(Rational(1), 1, 0); }
    static BivPoly xi() { return monomial(Rational(1), 0, 1); }

    const std::map<Exp, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool depends_on_x() const;
    bool depends_on_xi() const;
    int degree_x() const;
    int degree_xi() const;
    bool is_monomial() const { return t_.size() == 1; }

    /// Requires !depends_on_xi().
    Poly as_x_poly() const;
    /// Requires !depends_on_x().
    Poly as_xi_poly() const;

    void add_term(int px, int pxi, const Rational& c);

    BivPoly operator-() const;
    BivPoly& operator+=(const BivPoly& o);
    BivPoly& operator-=(const BivPoly& o);
    BivPoly& operator*=(const Rational& c);

    friend BivPoly operator+(BivPoly a, const BivPoly& b) { return a += b; }
    friend BivPoly operator-(BivPoly a, const BivPoly& b) { return a -= b; }
    friend BivPoly operator*(BivPoly a, const Rational& c) { return a *= c; }
    friend BivPoly operator*(const Rational& c, BivPoly a) { return a *= c; }
    friend BivPoly operator*(const BivPoly& a, const BivPoly& b);
    friend bool operator==(const BivPoly&, const BivPoly&) = default;

private:
    std::map<Exp, Rational> t_;
};

/// The exchange x <-> xi.
BivPoly swap_vars(const BivPoly& u);
BivPoly derive_x(const BivPoly& u);
BivPoly derive_xi(const BivPoly& u);
BivPoly derive_x(const BivPoly& u, int times);
/// Integral from 0 in x (resp. xi) with the other variable held constant.
BivPoly integrate_x(const BivPoly& u);
BivPoly integrate_xi(const BivPoly& u);
/// u(c, xi) as a polynomial in xi.
Poly subst_x(const BivPoly& u, const Rational& c);
/// u(x, c) as a polynomial in x.
Poly subst_xi(const BivPoly& u, const Rational& c);
/// u(t, t) as a polynomial in t.
Poly on_diagonal(const BivPoly& u);
Rational evaluate(const BivPoly& u, const Rational& x0, const Rational& xi0);

}  // namespace dirac
