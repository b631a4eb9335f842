#pragma once

#include "dirac/poly.hpp"

#include <map>
#include <set>

namespace dirac {

/// Canonical element f + sum_a f_a H_a of the piecewise extension, where H_a
/// stands for H(x - a). Steps are keyed by jump point; no stored coefficient is zero.
class Piecewise {
public:
    Piecewise() = default;
    Piecewise(const Poly& f) : base_(f) {}
    Piecewise(const Rational& c) : base_(c) {}
    Piecewise(long c) : base_(c) {}
    Piecewise(int c) : base_(c) {}

    /// f * H(x - a).
    static Piecewise step(const Rational& a, const Poly& f = Poly(1));
    /// 1 - H(x - a), i.e. H(a - x).
    static Piecewise co_step(const Rational& a);

    const Poly& base() const { return base_; }
    const std::map<Rational, Poly>& steps() const { return steps_; }
    const Poly& step_coeff(const Rational& a) const;
    bool is_ground() const { return steps_.empty(); }
    bool is_zero() const { return base_.is_zero() && steps_.empty(); }
    std::set<Rational> jump_points() const;

    void add_step(const Rational& a, const Poly& f);

    Piecewise operator-() const;
    Piecewise& operator+=(const Piecewise& o);
    Piecewise& operator-=(const Piecewise& o);
    Piecewise& operator*=(const Rational& c);

    friend Piecewise operator+(Piecewise a, const Piecewise& b) { return a += b; }
    friend Piecewise operator-(Piecewise a, const Piecewise& b) { return a -= b; }
    friend Piecewise operator*(Piecewise a, const Rational& c) { return a *= c; }
    friend Piecewise operator*(const Rational& c, Piecewise a) { return a *= c; }
    friend bool operator==(const Piecewise&, const Piecewise&) = default;

private:
    Poly base_;
    std::map<Rational, Poly> steps_;
};

/// Ring product under H_a H_b = H_max(a,b).
Piecewise pw_mul(const Piecewise& p, const Piecewise& q);
inline Piecewise operator*(const Piecewise& p, const Piecewise& q) { return pw_mul(p, q); }

Piecewise pw_integrate(const Piecewise& p);
/// Derivation extended by zero on the Heaviside generators.
Piecewise pw_derive(const Piecewise& p);
Piecewise pw_shift(const Piecewise& p, const Rational& c);
/// The character e_c, with e_c(H_a) = co_heaviside(a - c).
Rational pw_evaluate(const Piecewise& p, const Rational& c);
/// id - integral o derivative.
Piecewise pw_pseudo_eval(const Piecewise& p);
/// Pointwise value with H_a(t) = heaviside(t - a).
Rational eval_at(const Piecewise& p, const Rational& t);
/// Antiderivative vanishing at b.
Piecewise pw_integrate_from(const Piecewise& p, const Rational& b);

/// Reduction modulo the ideal generated by 1 - H_alpha and H_beta: steps at
/// a >= beta vanish, steps at a <= alpha become their coefficient.
Piecewise pw_reduce_mod(const Piecewise& p, const Rational& alpha, const Rational& beta);

}  // namespace dirac
