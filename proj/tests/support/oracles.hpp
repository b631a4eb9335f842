#pragma once

// Reference computations used to check the library. They work from the
// definitions (pointwise values, piece-by-piece integration, single-step
// rewriting) and share no code with the implementations under test beyond
// Rational arithmetic and read access to canonical forms.

#include "dirac/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace dirac::oracle {

inline Rational horner(const std::vector<Rational>& c, const Rational& t) {
    Rational r;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
    return r;
}

inline Rational value(const Poly& f, const Rational& t) { return horner(f.coeffs(), t); }

inline Rational value(const BivPoly& u, const Rational& x0, const Rational& xi0) {
    Rational r;
    for (const auto& [e, c] : u.terms()) r += c * power(x0, e.first) * power(xi0, e.second);
    return r;
}

inline Rational indicator(bool b) { return Rational(b ? 1 : 0); }

/// Pointwise value of a piecewise function, H(t-a) = [t > a].
inline Rational value(const Piecewise& p, const Rational& t) {
    Rational r = value(p.base(), t);
    for (const auto& [a, f] : p.steps())
        if (t > a) r += value(f, t);
    return r;
}

/// Exact integral of sum c_k s^k over [l, r].
inline Rational poly_integral(const std::vector<Rational>& c, const Rational& l, const Rational& r) {
    Rational s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        int n = static_cast<int>(k) + 1;
        s += c[k] * (power(r, n) - power(l, n)) / Rational(n);
    }
    return s;
}

/// Polynomial active on the open interval (l, r) that contains no jump.
inline std::vector<Rational> active_piece(const Piecewise& p, const Rational& l, const Rational& r) {
    Rational mid = (l + r) / Rational(2);
    std::vector<Rational> c = p.base().coeffs();
    for (const auto& [a, f] : p.steps()) {
        if (!(mid > a)) continue;
        if (c.size() < f.coeffs().size()) c.resize(f.coeffs().size());
        for (std::size_t k = 0; k < f.coeffs().size(); ++k) c[k] += f.coeffs()[k];
    }
    return c;
}

/// Integral from 0 to t, piece by piece.
inline Rational integral_from_zero(const Piecewise& p, const Rational& t) {
    Rational lo = meet(Rational(0), t), hi = join(Rational(0), t);
    std::vector<Rational> cuts{lo};
    for (const auto& [a, f] : p.steps())
        if (lo < a && a < hi) cuts.push_back(a);
    cuts.push_back(hi);
    Rational s;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i] < cuts[i + 1]) s += poly_integral(active_piece(p, cuts[i], cuts[i + 1]), cuts[i], cuts[i + 1]);
    return t < Rational(0) ? -s : s;
}

/// Composite midpoint rule with Richardson extrapolation, refined until two
/// successive extrapolated values agree. Every subinterval between cuts is
/// treated separately, so jumps only ever sit at subinterval ends.
inline double midpoint_quadrature(const std::function<Rational(const Rational&)>& f, const Rational& l,
                                  const Rational& r, std::vector<Rational> cuts = {}) {
    if (l == r) return 0.0;
    bool flip = r < l;
    Rational lo = flip ? r : l, hi = flip ? l : r;
    std::vector<Rational> pts{lo};
    std::sort(cuts.begin(), cuts.end());
    for (const auto& c : cuts)
        if (lo < c && c < hi && c != pts.back()) pts.push_back(c);
    pts.push_back(hi);

    auto midpoint = [&](const Rational& a, const Rational& b, int n) {
        Rational h = (b - a) / Rational(n);
        double s = 0;
        for (int k = 0; k < n; ++k) s += f(a + h * Rational(2 * k + 1, 2)).to_double();
        return s * h.to_double();
    };
    double total = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        int n = 4;
        double coarse = midpoint(pts[i], pts[i + 1], n);
        double prev = NAN;
        for (; n <= 4096; n *= 2) {
            double fine = midpoint(pts[i], pts[i + 1], 2 * n);
            double rich = (4 * fine - coarse) / 3;
            if (!std::isnan(prev) && std::abs(rich - prev) < 1e-12) {
                prev = rich;
                break;
            }
            prev = rich;
            coarse = fine;
        }
        total += prev;
    }
    return flip ? -total : total;
}

/// f delta_a^{(k)} by one Leibniz step at a time:
///   f delta^{(k)} = (f delta^{(k-1)})' - f' delta^{(k-1)},   f delta = f(a) delta.
/// Returns derivative order -> coefficient.
inline std::map<int, Rational> iterated_leibniz(const std::vector<Rational>& f, const Rational& a, int k) {
    std::map<int, Rational> out;
    if (f.empty()) return out;
    if (k == 0) {
        Rational v = horner(f, a);
        if (!v.is_zero()) out[0] = v;
        return out;
    }
    for (const auto& [j, c] : iterated_leibniz(f, a, k - 1)) out[j + 1] += c;
    std::vector<Rational> df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Rational(static_cast<long>(i)));
    for (const auto& [j, c] : iterated_leibniz(df, a, k - 1)) out[j] -= c;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

/// Pointwise value of u [H(x-a)] [H(xi-b)] [H(x-xi)] straight from the definition.
inline Rational value(const RawTerm& t, const Rational& x0, const Rational& xi0) {
    Rational r = value(t.coeff, x0, xi0);
    if (t.x_step) r *= indicator(x0 > *t.x_step);
    if (t.xi_step) r *= indicator(xi0 > *t.xi_step);
    if (t.diagonal) r *= indicator(x0 > xi0);
    return r;
}

/// Green's function of u'' = f, u(0) = u(1) = 0.
inline Rational dirichlet_kernel(const Rational& x, const Rational& xi) {
    return xi <= x ? xi * (x - Rational(1)) : x * (xi - Rational(1));
}

}  // namespace dirac::oracle
