#include "dirac/boundary.hpp"

#include <algorithm>

namespace dirac {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

Poly determinant(const PolyMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return Poly(1);
    if (n == 1) return m[0][0];
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][c] * determinant(minor);
        det += c % 2 == 0 ? term : -term;
    }
    return det;
}

PolyMatrix wronski_matrix(const std::vector<Poly>& u) {
    PolyMatrix m;
    for (std::size_t j = 0; j < u.size(); ++j) {
        std::vector<Poly> row;
        for (const Poly& f : u) row.push_back(derive(f, static_cast<int>(j)));
        m.push_back(std::move(row));
    }
    return m;
}

/// Reduced row echelon form in place; returns the rank.
int row_reduce(Matrix& m, std::size_t cols) {
    std::size_t rows = m.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

void collect_points(const IdOp& op, std::vector<Rational>& pts) {
    for (const auto& [key, c] : op.eval_diff_part()) pts.push_back(key.first);
    for (const auto& [a, fg] : op.eval_int_part()) pts.push_back(a);
}

Rational falling_factorial(int d, int j) {
    Rational r(1);
    for (int i = 0; i < j; ++i) r *= Rational(d - i);
    return r;
}

}  // namespace

int matrix_rank(Matrix m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    return row_reduce(m, cols);
}

Matrix matrix_inverse(const Matrix& m) {
    std::size_t n = m.size();
    Matrix aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw DomainError("matrix is not square");
        aug[i].resize(2 * n);
        aug[i][n + i] = Rational(1);
    }
    int rank = row_reduce(aug, n);
    if (rank < static_cast<int>(n))
        throw SingularError("singular evaluation matrix: rank " + std::to_string(rank) + " of " + std::to_string(n),
                            rank, static_cast<int>(n));
    Matrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
    return inv;
}

Poly wronskian(const std::vector<Poly>& u) { return determinant(wronski_matrix(u)); }

BoundaryProblem::BoundaryProblem(IdOp T, std::vector<StieltjesCond> conds, std::vector<Poly> fundamental)
    : T_(std::move(T)), conds_(std::move(conds)), fundamental_(std::move(fundamental)) {
    int n = static_cast<int>(fundamental_.size());
    if (!T_.is_differential() || T_.diff_order() < 1)
        throw DomainError("the operator must be a differential operator of positive order");
    if (!(T_.diff_part().rbegin()->second == Poly(1))) throw DomainError("the operator must be monic");
    if (T_.diff_order() != n)
        throw DomainError("the fundamental system has " + std::to_string(n) + " elements but the operator has order " +
                          std::to_string(T_.diff_order()));
    if (static_cast<int>(conds_.size()) != n)
        throw DomainError("expected " + std::to_string(n) + " boundary conditions, got " +
                          std::to_string(conds_.size()));
    for (const Poly& u : fundamental_)
        if (!act(T_, u).is_zero()) throw DomainError("a member of the fundamental system is not annihilated by T");
    Poly W = wronskian(fundamental_);
    if (W.is_zero()) throw DomainError("the fundamental system is linearly dependent");
    if (!W.is_constant()) throw DomainError("the Wronskian of the fundamental system must be constant");
}

bool BoundaryProblem::well_posed() const {
    return std::all_of(conds_.begin(), conds_.end(),
                       [n = order()](const StieltjesCond& c) { return c.local_order() < n; });
}

std::pair<Rational, Rational> BoundaryProblem::eval_range() const {
    std::vector<Rational> pts;
    for (const auto& c : conds_) collect_points(c.op(), pts);
    if (pts.empty()) return {Rational(0), Rational(0)};
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
    return {*lo, *hi};
}

EvalMatrix check_regular(const BoundaryProblem& bp) {
    EvalMatrix em;
    for (const auto& c : bp.conds()) {
        std::vector<Rational> row;
        for (const auto& u : bp.fundamental()) row.push_back(apply_cond(c, u));
        em.entries.push_back(std::move(row));
    }
    em.inverse = matrix_inverse(em.entries);
    return em;
}

IdOp right_inverse(const BoundaryProblem& bp) {
    const auto& u = bp.fundamental();
    std::size_t n = u.size();
    PolyMatrix m = wronski_matrix(u);
    Rational W = determinant(m).constant_value();
    IdOp r;
    for (std::size_t i = 0; i < n; ++i) {
        // cofactor of the last row
        PolyMatrix minor;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) row.push_back(m[j][k]);
            minor.push_back(std::move(row));
        }
        Poly Wi = determinant(minor) * ((n - 1 + i) % 2 == 0 ? Rational(1) : Rational(-1));
        r.add_int(BivPoly::in_x(u[i]) * BivPoly::in_xi(Wi * (Rational(1) / W)));
    }
    return r;
}

IdOp kernel_projector(const BoundaryProblem& bp) {
    EvalMatrix em = check_regular(bp);
    IdOp P;
    const auto& u = bp.fundamental();
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < bp.conds().size(); ++j)
            if (!em.inverse[i][j].is_zero()) P += op_compose(IdOp::mul(u[i]), bp.conds()[j].op()) * em.inverse[i][j];
    return P;
}

IdOp greens_operator(const BoundaryProblem& bp) {
    IdOp R = right_inverse(bp);
    return R - op_compose(kernel_projector(bp), R);
}

GreensFn extract_greens_fn(const IdOp& G, const Rational& alpha, const Rational& beta) {
    if (!(alpha < beta)) throw DomainError("interval needs alpha < beta");
    if (alpha > Rational(0) || beta < Rational(0)) throw DomainError("interval must contain the initialization point 0");
    for (const auto& [key, c] : G.eval_diff_part())
        if (!(alpha < key.first && key.first <= beta))
            throw DomainError("derivative evaluation at " + key.first.str() + " lies outside (alpha, beta]");
    for (const auto& [a, fg] : G.eval_int_part())
        if (a < alpha || a > beta) throw DomainError("integral evaluation at " + a.str() + " lies outside the interval");

    BivDist g;
    for (const auto& [k, u] : G.diff_part()) g.add_diag_dirac(k, std::nullopt, BivPoly::in_x(u));
    // u(x) v(xi) (H(x-xi) + H(xi-0) - 1)
    const BivPoly& w = G.int_part();
    g.add_term(RawTerm{w, std::nullopt, std::nullopt, true});
    g.add_pw2(w, std::nullopt, Rational(0));
    g.add_pw2(-w, std::nullopt, std::nullopt);
    for (const auto& [key, u] : G.eval_diff_part()) {
        Rational sign = key.second % 2 == 0 ? Rational(1) : Rational(-1);
        g.add_txi(key.first, key.second, BivPoly(sign), Piecewise(u));
    }
    // u(x) v(xi) (H(xi-0) - H(xi-a))
    for (const auto& [a, fg] : G.eval_int_part()) {
        g.add_pw2(fg, std::nullopt, Rational(0));
        g.add_pw2(-fg, std::nullopt, a);
    }
    return GreensFn{g, alpha, beta};
}

bool VerificationReport::conds_ok() const {
    return std::all_of(cond_residuals.begin(), cond_residuals.end(), [](const BivDist& r) { return r.is_zero(); });
}

VerificationReport verify_distributional(const BoundaryProblem& bp, const GreensFn& gf) {
    VerificationReport rep;
    BivDist Tg = act_axis(bp.op(), gf.g, Axis::X);
    rep.operator_residual = biv_reduce_mod(Tg - BivDist::diag_dirac(0), gf.alpha, gf.beta);
    for (const auto& c : bp.conds())
        rep.cond_residuals.push_back(biv_reduce_mod(act_axis(c.op(), gf.g, Axis::X), gf.alpha, gf.beta));
    return rep;
}

Solution apply_greens(const BoundaryProblem& bp, const Piecewise& f, const Rational& alpha, const Rational& beta) {
    if (!f.is_ground() && !bp.well_posed())
        throw IllPosedError("piecewise forcing needs boundary conditions of order below the operator order");
    IdOp G = greens_operator(bp);
    Solution s;
    Piecewise direct = f.is_ground() ? Piecewise(act(G, f.base())) : act_pw(G, f);
    s.by_operator = pw_reduce_mod(direct, alpha, beta);

    GreensFn gf = extract_greens_fn(G, alpha, beta);
    BivDist kernel = biv_mul(gf.g, BivDist::embed(Dist(f), Axis::XI));
    Dist d = to_univariate(biv_definite_integral(kernel, Axis::XI, alpha, beta), Axis::X);
    if (d.has_diracs()) throw Error("kernel integration produced Dirac terms");
    s.by_kernel = pw_reduce_mod(d.pw(), alpha, beta);
    return s;
}

UniquenessResult check_uniqueness(const BivDist& k, const Rational& alpha, const Rational& beta,
                                  const UniquenessOptions& opts) {
    if (!(alpha < beta)) throw DomainError("interval needs alpha < beta");
    BivDist residual = k - BivDist::diag_dirac(0);

    std::map<Rational, int> mult;  // point -> number of Hermite conditions
    int max_order = 0;
    for (const auto& [key, p] : residual.tensorial_xi()) {
        int& m = mult[key.first];
        m = std::max(m, key.second + 1);
        max_order = std::max(max_order, key.second);
    }
    for (const auto& [key, p] : residual.tensorial_x()) max_order = std::max(max_order, key.second);
    for (const auto& [key, c] : residual.diag_diracs()) max_order = std::max(max_order, key.first);

    std::vector<Poly> probes;
    std::vector<std::pair<Rational, int>> conds;
    for (const auto& [a, m] : mult)
        for (int j = 0; j < m; ++j) conds.emplace_back(a, j);
    std::size_t N = conds.size();
    if (N > 0) {
        // confluent Vandermonde system: row (a, j) holds the j-th derivative of x^d at a
        Matrix V(N, std::vector<Rational>(N));
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t d = 0; d < N; ++d) {
                int dd = static_cast<int>(d);
                int j = conds[r].second;
                if (dd >= j) V[r][d] = falling_factorial(dd, j) * power(conds[r].first, dd - j);
            }
        Matrix inv = matrix_inverse(V);
        for (std::size_t c = 0; c < N; ++c) {
            std::vector<Rational> coeffs(N);
            for (std::size_t d = 0; d < N; ++d) coeffs[d] = inv[d][c];
            probes.emplace_back(std::move(coeffs));
        }
    }
    Poly omega(1);
    for (const auto& [a, m] : mult)
        for (int j = 0; j < m; ++j) omega = omega * (Poly::x() - Poly(a));
    for (int j = 0; j < opts.extra_parameters; ++j) probes.push_back(omega * Poly::monomial(Rational(1), j));
    int top = max_order + static_cast<int>(mult.size()) + opts.extra_degree;
    for (int j = 0; j <= top; ++j) probes.push_back(Poly::monomial(Rational(1), j));

    UniquenessResult res;
    for (const Poly& p : probes) {
        ++res.probes;
        BivDist prod = biv_mul(residual, BivDist(BivPoly::in_xi(p)));
        BivDist val = biv_reduce_mod(biv_definite_integral(prod, Axis::XI, alpha, beta), alpha, beta);
        if (!val.is_zero()) {
            res.witness = p;
            res.witness_residual = val;
            return res;
        }
    }
    res.unique = true;
    return res;
}

}  // namespace dirac
