#pragma once

#include "dirac/piecewise.hpp"

#include <map>
#include <set>
#include <utility>

namespace dirac {

/// Canonical element f + sum f_a H_a + sum lambda_{a,k} delta_a^{(k)} of the
/// distribution module. Dirac coefficients are scalars: any polynomial factor
/// is sifted away on entry.
class Dist {
public:
    using DiracKey = std::pair<Rational, int>;  // (point, derivative order)

    Dist() = default;
    Dist(const Piecewise& p) : pw_(p) {}
    Dist(const Poly& f) : pw_(f) {}
    Dist(const Rational& c) : pw_(c) {}

    /// c * delta_a^{(k)}.
    static Dist dirac(const Rational& a, int k = 0, const Rational& c = Rational(1));

    const Piecewise& pw() const { return pw_; }
    const std::map<DiracKey, Rational>& diracs() const { return diracs_; }
    bool has_diracs() const { return !diracs_.empty(); }
    bool is_zero() const { return pw_.is_zero() && diracs_.empty(); }

    void add_dirac(const Rational& a, int k, const Rational& c);

    Dist operator-() const;
    Dist& operator+=(const Dist& o);
    Dist& operator-=(const Dist& o);
    Dist& operator*=(const Rational& c);

    friend Dist operator+(Dist a, const Dist& b) { return a += b; }
    friend Dist operator-(Dist a, const Dist& b) { return a -= b; }
    friend Dist operator*(Dist a, const Rational& c) { return a *= c; }
    friend Dist operator*(const Rational& c, Dist a) { return a *= c; }
    friend bool operator==(const Dist&, const Dist&) = default;

private:
    Piecewise pw_;
    std::map<DiracKey, Rational> diracs_;
};

/// Normal form of f * delta_a^{(k)}: sum_i C(k,i) (-1)^i f^{(i)}(a) delta_a^{(k-i)}.
Dist reduce_product(const Poly& f, const Rational& a, int k);

/// Action of the ground algebra on the module.
Dist module_scalar_mul(const Poly& f, const Dist& phi);

/// Product with a piecewise factor. Throws ForbiddenProduct when the factor
/// carries Heaviside terms and phi carries Dirac terms.
Dist dist_mul(const Piecewise& p, const Dist& phi);

Dist dist_derive(const Dist& phi);
Dist dist_integrate(const Dist& phi);
Dist dist_shift(const Dist& phi, const Rational& c);
Rational dist_evaluate(const Dist& phi, const Rational& c);
/// (1 - e_b) o integral.
Dist dist_integrate_from(const Dist& phi, const Rational& b);
/// id - integral o derivative.
Dist dist_pseudo_eval(const Dist& phi);

/// Per support point, the least filtration level containing the component at
/// that point: 0 for a Heaviside, k + 1 for delta^{(k)}.
std::map<Rational, int> filtration_level(const Dist& phi);
std::set<Rational> support_points(const Dist& phi);

}  // namespace dirac
