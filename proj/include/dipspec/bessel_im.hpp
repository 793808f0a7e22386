#pragma once

#include <optional>
#include <vector>

#include "dipspec/core.hpp"

namespace dipspec::bessel {

/// Phase constant arg Gamma(1 + i nu) on the continuous branch fixed by the
/// Weierstrass series  -gamma_E nu + sum_{k>=1} (nu/k - atan(nu/k)).
/// Negative for small nu (leading term -gamma_E nu), minimal near nu ~ 0.85,
/// and positive again beyond nu ~ 1.8.
double phase(double nu);

/// K_{i nu}(x) for nu >= 0, x > 0, from the integral representation
/// int_0^inf exp(-x cosh t) cos(nu t) dt. For nu = 0 this is the standard
/// second-kind modified Bessel function. Throws UnderflowError once exp(-x)
/// is below the representable range (callers treat the value as 0).
double eval_K(double nu, double x, const Tolerances& tol = {});

/// n-th zero of K_{i nu} counted from the largest (n >= 1):
/// 2 exp(-(n pi - phase)/nu) times its first correction term. Throws
/// UnderflowError when the zero itself is below the representable range.
double zero_asymptotic(double nu, int n);

/// Zero refined by bracketed root finding on eval_K around the asymptotic
/// guess. Throws UnderflowError when the correction term is already below
/// the root-finding resolution (the asymptotic value is then exact to
/// working precision and refinement would only chase roundoff), or when the
/// zero itself is unrepresentable.
double zero_refined(double nu, int n, const Tolerances& tol = {});

struct ZeroTable {
    struct Entry {
        int n = 0;
        double asymptotic = 0.0;
        std::optional<double> refined;  // absent on the underflow/guard path
    };
    double nu = 0.0;
    std::vector<Entry> entries;  // strictly decreasing in n
};

/// Entries n = 1..n_max; stops early if the asymptotic value underflows.
ZeroTable make_zero_table(double nu, int n_max, const Tolerances& tol = {});

/// #{n >= 1 : k_{nu,n} >= s}: floor of the oscillation phase
/// (nu ln(2/s) + phase)/pi, then corrected by at most +-1 using the refined
/// zeros at the two boundary indices when those are representable.
/// Returns 0 for nu <= 0 (closed channels).
int count_zeros_above(double nu, double s, const Tolerances& tol = {});

/// Floor-formula value alone, without the boundary-index correction.
int count_zeros_above_floor(double nu, double s);

}  // namespace dipspec::bessel
