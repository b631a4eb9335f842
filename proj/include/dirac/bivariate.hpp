#pragma once

#include "dirac/bivpoly.hpp"
#include "dirac/distribution.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dirac {

enum class Axis { X, XI };

/// Optional Heaviside factor H(v - a) in one variable; nullopt means no factor.
using Step = std::optional<Rational>;

/// H_a H_b = H_max(a,b), with an absent factor acting as 1.
Step join_steps(const Step& a, const Step& b);

/// A Heaviside-level term u * [H(x-a)] * [H(xi-b)] * [H(x-xi)] before the
/// diagonal relation has been applied.
struct RawTerm {
    BivPoly coeff;
    Step x_step;
    Step xi_step;
    bool diagonal = false;
};

/// Element of the bivariate distribution module in canonical form.
///
/// Parts:
///   pw2      u(x,xi) [H(x-a)] [H(xi-b)]
///   diag     u(x,xi) [H(xi-b)] H(x-xi)           (H(x-a) H(x-xi) never stored)
///   ddirac   c(xi) [H_b] delta^{(k)}(x-xi)       (sifted: coefficient free of x)
///   tx       p(xi) delta^{(k)}(x-a),  p piecewise in xi
///   txi      p(x) delta^{(k)}(xi-a),  p piecewise in x
///
/// On the diagonal Dirac terms the label H_b is read as H(xi-b) by operations
/// in x and as H(x-b) by operations in xi; the two agree on the support.
class BivDist {
public:
    using StepPair = std::pair<Step, Step>;
    using DiracKey = std::pair<Rational, int>;
    using DiagDiracKey = std::pair<int, Step>;

    BivDist() = default;
    BivDist(const BivPoly& u) { add_pw2(u, std::nullopt, std::nullopt); }
    BivDist(const Rational& c) : BivDist(BivPoly(c)) {}

    /// The diagonal Heaviside H(x - xi).
    static BivDist diag_heaviside();
    /// delta^{(k)}(x - xi).
    static BivDist diag_dirac(int k = 0);
    /// Embeds a univariate element in the given variable.
    static BivDist embed(const Dist& phi, Axis axis);

    const std::map<StepPair, BivPoly>& pw2() const { return pw2_; }
    const std::map<Step, BivPoly>& diag() const { return diag_; }
    const std::map<DiagDiracKey, Poly>& diag_diracs() const { return ddirac_; }
    const std::map<DiracKey, Piecewise>& tensorial_x() const { return tx_; }
    const std::map<DiracKey, Piecewise>& tensorial_xi() const { return txi_; }

    bool is_zero() const;
    bool has_diracs() const { return !ddirac_.empty() || !tx_.empty() || !txi_.empty(); }
    bool has_diagonal() const { return !diag_.empty() || !ddirac_.empty(); }
    /// True when no term mentions the variable of the given axis.
    bool free_of(Axis axis) const;

    void add_pw2(const BivPoly& u, const Step& hx, const Step& hxi);
    /// Adds any Heaviside-level term, rewriting H(x-a) H(x-xi) onto the
    /// right-focused basis.
    void add_term(const RawTerm& t);
    /// Adds u(x,xi) [H_b] delta^{(k)}(x-xi), sifting u to a coefficient in xi.
    void add_diag_dirac(int k, const Step& label, const BivPoly& u);
    /// Adds u(x,xi) p(xi) delta^{(k)}(x-a), sifting u at x = a.
    void add_tx(const Rational& a, int k, const BivPoly& u, const Piecewise& p);
    /// Adds u(x,xi) p(x) delta^{(k)}(xi-a), sifting u at xi = a.
    void add_txi(const Rational& a, int k, const BivPoly& u, const Piecewise& p);

    BivDist operator-() const;
    BivDist& operator+=(const BivDist& o);
    BivDist& operator-=(const BivDist& o);
    BivDist& operator*=(const Rational& c);

    friend BivDist operator+(BivDist a, const BivDist& b) { return a += b; }
    friend BivDist operator-(BivDist a, const BivDist& b) { return a -= b; }
    friend BivDist operator*(BivDist a, const Rational& c) { return a *= c; }
    friend BivDist operator*(const Rational& c, BivDist a) { return a *= c; }
    friend bool operator==(const BivDist&, const BivDist&) = default;

private:
    std::map<StepPair, BivPoly> pw2_;
    std::map<Step, BivPoly> diag_;
    std::map<DiagDiracKey, Poly> ddirac_;
    std::map<DiracKey, Piecewise> tx_;
    std::map<DiracKey, Piecewise> txi_;
};

/// Product in the bivariate module. Throws ForbiddenProduct for Dirac times
/// Dirac and for a Heaviside in one variable times a Dirac in the same variable.
BivDist biv_mul(const BivDist& a, const BivDist& b);

BivDist exchange(const BivDist& phi);
BivDist biv_derive(const BivDist& phi, Axis axis);
BivDist biv_integrate(const BivDist& phi, Axis axis);
/// Evaluation at a in the given variable; the result is free of that variable.
BivDist biv_evaluate(const BivDist& phi, Axis axis, const Rational& a);
/// (e_beta - e_alpha) o integral along the axis.
BivDist biv_definite_integral(const BivDist& phi, Axis axis, const Rational& alpha, const Rational& beta);

/// Normal form of a list of raw Heaviside-level terms.
BivDist diagonal_normalize(const std::vector<RawTerm>& raw);
BivDist diagonal_normalize(const BivDist& phi);

/// Reduction of every Heaviside factor modulo the interval ideal.
BivDist biv_reduce_mod(const BivDist& phi, const Rational& alpha, const Rational& beta);

/// Pointwise value of a Dirac-free element, left-continuous in each variable.
Rational eval2(const BivDist& phi, const Rational& x0, const Rational& xi0);

/// The univariate element in the remaining variable; requires free_of(other axis).
Dist to_univariate(const BivDist& phi, Axis axis);

/// Shifts are not defined along the diagonal; this always throws DomainError
/// for elements with diagonal terms.
BivDist biv_shift(const BivDist& phi, Axis axis, const Rational& c);

}  // namespace dirac
