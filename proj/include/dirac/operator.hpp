#pragma once

#include "dirac/bivariate.hpp"

#include <map>
#include <utility>

namespace dirac {

/// Integro-differential operator in normal form
///
///   sum f_i D^i  +  sum f I g  +  sum f ev(a) D^i  +  sum f ev(a) I g
///
/// with D = d/dx, I = integral from 0, ev(a) = evaluation at a. The integral
/// part is stored as a bivariate polynomial: x^p xi^q stands for x^p I x^q.
/// ev(0) I is zero and never stored.
class IdOp {
public:
    using EvalDiffKey = std::pair<Rational, int>;

    IdOp() = default;

    static IdOp identity() { return mul(Poly(1)); }
    static IdOp mul(const Poly& f);
    static IdOp D(int k = 1);
    static IdOp I();
    static IdOp ev(const Rational& a);

    const std::map<int, Poly>& diff_part() const { return diff_; }
    const BivPoly& int_part() const { return integ_; }
    const std::map<EvalDiffKey, Poly>& eval_diff_part() const { return ediff_; }
    const std::map<Rational, BivPoly>& eval_int_part() const { return eint_; }

    bool is_zero() const { return diff_.empty() && integ_.is_zero() && ediff_.empty() && eint_.empty(); }
    /// Highest derivative order in the differential part, -1 if there is none.
    int diff_order() const;
    /// Highest derivative order among the evaluation terms, -1 if there is none.
    int eval_diff_order() const;
    bool is_differential() const { return integ_.is_zero() && ediff_.empty() && eint_.empty(); }

    void add_diff(int k, const Poly& f);
    void add_int(const BivPoly& fg);
    void add_eval_diff(const Rational& a, int k, const Poly& f);
    void add_eval_int(const Rational& a, const BivPoly& fg);

    IdOp operator-() const;
    IdOp& operator+=(const IdOp& o);
    IdOp& operator-=(const IdOp& o);
    IdOp& operator*=(const Rational& c);

    friend IdOp operator+(IdOp a, const IdOp& b) { return a += b; }
    friend IdOp operator-(IdOp a, const IdOp& b) { return a -= b; }
    friend IdOp operator*(IdOp a, const Rational& c) { return a *= c; }
    friend IdOp operator*(const Rational& c, IdOp a) { return a *= c; }
    friend bool operator==(const IdOp&, const IdOp&) = default;

private:
    std::map<int, Poly> diff_;
    BivPoly integ_;
    std::map<EvalDiffKey, Poly> ediff_;
    std::map<Rational, BivPoly> eint_;
};

/// A o B, i.e. B is applied first.
IdOp op_compose(const IdOp& a, const IdOp& b);
inline IdOp operator*(const IdOp& a, const IdOp& b) { return op_compose(a, b); }
IdOp op_power(const IdOp& a, int k);

Poly act(const IdOp& a, const Poly& f);
/// Requires an operator without derivatives (D^k or ev(a) D^k with k >= 1):
/// derivatives of piecewise functions would need the strong axiom, which
/// fails there. Throws UnsupportedOperator otherwise.
Piecewise act_pw(const IdOp& a, const Piecewise& p);
Dist act_dist(const IdOp& a, const Dist& phi);
/// Action on one variable of a bivariate element.
BivDist act_axis(const IdOp& a, const BivDist& phi, Axis axis);

/// Boundary functional: a combination of c ev(a) D^k and ev(a) I v.
class StieltjesCond {
public:
    /// Throws DomainError unless the operator only has evaluation terms with
    /// constant left coefficients.
    explicit StieltjesCond(IdOp op);

    const IdOp& op() const { return op_; }
    /// Highest derivative order among the local terms, -1 for purely global ones.
    int local_order() const { return op_.eval_diff_order(); }

    friend bool operator==(const StieltjesCond&, const StieltjesCond&) = default;

private:
    IdOp op_;
};

Rational apply_cond(const StieltjesCond& beta, const Poly& f);

}  // namespace dirac
