#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace dipspec {

// Error taxonomy shared by every module. The CLI maps these to exit codes.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoConvergence : NumericsError {
    using NumericsError::NumericsError;
};
struct NoSignChange : NumericsError {
    using NumericsError::NumericsError;
};
struct UnderflowError : NumericsError {
    using NumericsError::NumericsError;
};
struct GridInadequate : NumericsError {
    using NumericsError::NumericsError;
};
struct DimensionMismatch : NumericsError {
    using NumericsError::NumericsError;
};

/// Real symmetric tridiagonal matrix; offdiag holds size()-1 couplings.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }
    bool valid() const { return !diag.empty() && offdiag.size() + 1 == diag.size(); }
};

struct Tolerances {
    double eig_tol = 1e-10;   // absolute eigenvalue tolerance
    double root_tol = 1e-12;  // relative root tolerance
    double quad_tol = 1e-12;  // relative quadrature tolerance
};

/// Number of eigenvalues of T strictly below threshold, from the sign count
/// of the shifted LDL^T pivot recurrence (Sylvester inertia). Exact integer
/// output; pivots are clamped away from zero so degenerate shifts cannot
/// stall the recurrence.
int sturm_count(const Tridiagonal& T, double threshold);

/// k-th smallest eigenvalue (k zero-based) by Sturm bisection inside the
/// Gershgorin bounds, to absolute accuracy tol.eig_tol.
double tridiag_eigenvalue(const Tridiagonal& T, int k, const Tolerances& tol = {});

/// Root of f inside [lo, hi]; the endpoints may be given in either order.
/// Secant steps alternate with bisection, so the bracket provably shrinks.
/// Throws NoSignChange when f(lo) and f(hi) have the same sign.
double bracket_root(const std::function<double(double)>& f, double lo, double hi,
                    const Tolerances& tol = {});

/// Integral of g over [0, inf) for continuous g decaying at least
/// exponentially. Composite Simpson on [0, T]; T doubles until the appended
/// tail is negligible, then the step halves until the value settles (with a
/// roundoff floor tied to the accumulated L1 mass). Throws NoConvergence when
/// the tail refuses to die out or the refinement stalls.
double quad_semiinf(const std::function<double(double)>& g, const Tolerances& tol = {});

}  // namespace dipspec
