#pragma once

#include "dirac/error.hpp"
#include "dirac/operator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dirac {

/// The evaluation matrix of a boundary problem is not invertible.
class SingularError : public Error {
public:
    SingularError(const std::string& msg, int rank, int size)
        : Error(msg), rank_(rank), size_(size) {}
    int rank() const { return rank_; }
    int defect() const { return size_ - rank_; }

private:
    int rank_;
    int size_;
};

/// Piecewise forcing on a problem whose Green's function carries Dirac terms.
class IllPosedError : public Error {
public:
    using Error::Error;
};

using Matrix = std::vector<std::vector<Rational>>;

/// Rank of a rational matrix (Gauss-Jordan).
int matrix_rank(Matrix m);
/// Exact inverse; throws SingularError when the matrix is not invertible.
Matrix matrix_inverse(const Matrix& m);

/// Linear boundary problem T u = f, beta_i u = 0 over Q[x], with a caller
/// supplied fundamental system of T.
class BoundaryProblem {
public:
    /// Validates: T monic and purely differential, order n = number of
    /// conditions = size of the fundamental system, T u_i = 0, and a nonzero
    /// constant Wronskian. Throws DomainError otherwise.
    BoundaryProblem(IdOp T, std::vector<StieltjesCond> conds, std::vector<Poly> fundamental);

    const IdOp& op() const { return T_; }
    const std::vector<StieltjesCond>& conds() const { return conds_; }
    const std::vector<Poly>& fundamental() const { return fundamental_; }
    int order() const { return static_cast<int>(fundamental_.size()); }
    /// Every local condition has derivative order below the operator order.
    bool well_posed() const;
    /// Smallest and largest evaluation point among the conditions.
    std::pair<Rational, Rational> eval_range() const;

private:
    IdOp T_;
    std::vector<StieltjesCond> conds_;
    std::vector<Poly> fundamental_;
};

/// Wronskian determinant of a list of polynomials.
Poly wronskian(const std::vector<Poly>& u);

struct EvalMatrix {
    Matrix entries;  // entries[i][j] = beta_i(u_j)
    Matrix inverse;
};

/// Throws SingularError for irregular problems.
EvalMatrix check_regular(const BoundaryProblem& bp);

/// Variation-of-constants right inverse sum u_i I (W_i / W).
IdOp right_inverse(const BoundaryProblem& bp);
/// Projector onto ker T along the solution space of the conditions.
IdOp kernel_projector(const BoundaryProblem& bp);
/// The Green's operator (1 - P) o right_inverse.
IdOp greens_operator(const BoundaryProblem& bp);

struct GreensFn {
    BivDist g;
    Rational alpha;
    Rational beta;
};

/// Kernel of an integro-differential operator on [alpha, beta]. The interval
/// must satisfy alpha <= 0 <= beta with alpha < beta; integral evaluations
/// need alpha <= a <= beta and derivative evaluations alpha < a <= beta.
GreensFn extract_greens_fn(const IdOp& G, const Rational& alpha, const Rational& beta);

struct VerificationReport {
    BivDist operator_residual;           // T_x g - delta(x-xi), reduced on the interval
    std::vector<BivDist> cond_residuals;  // beta_x g, reduced on the interval
    bool operator_ok() const { return operator_residual.is_zero(); }
    bool conds_ok() const;
    bool ok() const { return operator_ok() && conds_ok(); }
};

VerificationReport verify_distributional(const BoundaryProblem& bp, const GreensFn& gf);

struct Solution {
    Piecewise by_operator;  // G acting on f
    Piecewise by_kernel;    // definite integral of g(x,xi) f(xi)
    bool routes_agree() const { return by_operator == by_kernel; }
};

/// Both results are reduced modulo the interval. Throws IllPosedError when f
/// has jumps and some local condition has order >= the operator order.
Solution apply_greens(const BoundaryProblem& bp, const Piecewise& f, const Rational& alpha, const Rational& beta);

struct UniquenessOptions {
    int extra_parameters = 3;
    int extra_degree = 5;
};

struct UniquenessResult {
    bool unique = false;
    std::optional<Poly> witness;  // a probe on which the kernel differs from delta(x-xi)
    BivDist witness_residual;
    int probes = 0;
};

/// Tests whether k acts as delta(x-xi) on [alpha, beta] against a finite
/// family of probe polynomials.
UniquenessResult check_uniqueness(const BivDist& k, const Rational& alpha, const Rational& beta,
                                  const UniquenessOptions& opts = {});

}  // namespace dirac
