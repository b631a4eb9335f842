#pragma once

// Random instances of the four basic operator shapes u D^i, u I v,
// u ev(a) D^i and u ev(a) I v, with their kernels written out by hand, and
// the kernel route of applying a kernel to a forcing term.

#include "dirac/boundary.hpp"
#include "support/gen.hpp"

#include <string>

namespace dirac::testkit {

/// ∮ g(x,xi) f(xi) dxi over [alpha, beta], reduced on the interval.
inline Piecewise kernel_apply(const BivDist& g, const Piecewise& f, const Rational& alpha, const Rational& beta) {
    BivDist prod = biv_mul(g, BivDist::embed(Dist(f), Axis::XI));
    Dist d = to_univariate(biv_definite_integral(prod, Axis::XI, alpha, beta), Axis::X);
    if (d.has_diracs()) throw Error("kernel application left Dirac terms");
    return pw_reduce_mod(d.pw(), alpha, beta);
}

struct RowInstance {
    int row = 0;       // 1..4
    IdOp op;           // the operator
    BivDist kernel;    // its kernel, built term by term
    Piecewise force;   // argument; piecewise only for the integral rows
    Rational alpha, beta;
    std::string label;
};

inline BivDist times_x(const Poly& u, const BivDist& phi) { return biv_mul(BivDist(BivPoly::in_x(u)), phi); }
inline BivDist times_xi(const Poly& v, const BivDist& phi) { return biv_mul(BivDist(BivPoly::in_xi(v)), phi); }

inline RowInstance random_row(Gen& g, int row) {
    RowInstance r;
    r.row = row;
    r.alpha = -Rational(g.integer(1, 4), g.integer(1, 2));
    r.beta = Rational(g.integer(1, 4), g.integer(1, 2));
    Poly u = g.poly(2), v = g.poly(2);
    if (u.is_zero()) u = Poly(1);
    if (v.is_zero()) v = Poly(1);
    int i = g.integer(0, 3);
    // a strictly inside the interval
    Rational a = r.alpha + (r.beta - r.alpha) * Rational(g.integer(1, 11), 12);
    Rational one(1);
    BivDist H0xi, Haxi;
    H0xi.add_pw2(BivPoly(one), std::nullopt, Rational(0));
    Haxi.add_pw2(BivPoly(one), std::nullopt, a);

    switch (row) {
        case 1:
            r.op = IdOp::mul(u) * IdOp::D(i);
            r.kernel = times_x(u, BivDist::diag_dirac(i));
            r.force = Piecewise(g.poly(5));
            break;
        case 2:
            r.op = IdOp::mul(u) * IdOp::I() * IdOp::mul(v);
            // [0 <= xi <= x]_± = H(x-xi) + H(xi) - 1
            r.kernel = times_x(u, times_xi(v, BivDist::diag_heaviside() + H0xi - BivDist(one)));
            r.force = g.coin() ? Piecewise(g.poly(4)) : g.piecewise(2, 2);
            break;
        case 3: {
            r.op = IdOp::mul(u) * IdOp::ev(a) * IdOp::D(i);
            BivDist t;
            t.add_txi(a, i, BivPoly::in_x(u), Piecewise(i % 2 ? Rational(-1) : one));
            r.kernel = t;
            r.force = Piecewise(g.poly(5));
            break;
        }
        default:
            r.op = IdOp::mul(u) * IdOp::ev(a) * IdOp::I() * IdOp::mul(v);
            // [0 <= xi <= a]_± = H(xi) - H(xi-a)
            r.kernel = times_x(u, times_xi(v, H0xi - Haxi));
            r.force = g.coin() ? Piecewise(g.poly(4)) : g.piecewise(2, 2);
            break;
    }
    r.label = "row " + std::to_string(row) + " a=" + a.str() + " i=" + std::to_string(i) + " on [" + r.alpha.str() +
              "," + r.beta.str() + "]";
    return r;
}

/// Operator route of the same instance, reduced on the interval.
inline Piecewise operator_apply(const RowInstance& r) {
    Piecewise direct = r.force.is_ground() ? Piecewise(act(r.op, r.force.base())) : act_pw(r.op, r.force);
    return pw_reduce_mod(direct, r.alpha, r.beta);
}

}  // namespace dirac::testkit
