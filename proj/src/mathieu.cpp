#include "dipspec/mathieu.hpp"

#include <algorithm>
#include <cmath>

namespace dipspec::mathieu {

Tridiagonal build_matrix(double b, int modes) {
    if (modes < 1) throw std::invalid_argument("mathieu::build_matrix: need modes >= 1");
    const int n = 2 * modes + 1;
    Tridiagonal T;
    T.diag.resize(n);
    T.offdiag.assign(n - 1, -0.5 * b);
    for (int i = 0; i < n; ++i) {
        const double m = static_cast<double>(i - modes);
        T.diag[i] = m * m;
    }
    return T;
}

MathieuSpectrum spectrum(double b, int n_eigs, const Tolerances& tol) {
    if (n_eigs < 1) throw std::invalid_argument("mathieu::spectrum: need n_eigs >= 1");
    constexpr int kCap = 4096;

    int M = 16;
    while (2 * M + 1 < n_eigs + 8) M *= 2;

    std::vector<double> prev;
    for (; M <= kCap; M *= 2) {
        const Tridiagonal T = build_matrix(b, M);
        std::vector<double> cur(n_eigs);
        for (int k = 0; k < n_eigs; ++k) cur[k] = tridiag_eigenvalue(T, k, tol);
        if (!prev.empty()) {
            double drift = 0.0;
            for (int k = 0; k < n_eigs; ++k) drift = std::max(drift, std::abs(cur[k] - prev[k]));
            if (drift < tol.eig_tol) {
                MathieuSpectrum out;
                out.b = b;
                out.truncation = M;
                out.eigenvalues = std::move(cur);
                out.converged = true;
                return out;
            }
        }
        prev = std::move(cur);
    }
    throw NoConvergence("mathieu::spectrum: truncation cap reached without convergence");
}

namespace {

// Lowest characteristic value a_0(q) of y'' + (a - 2q cos 2x) y = 0 from the
// even period-pi recurrences: a = 2q^2 / (a - 4 - q v_2) with
// v_r = q / (a - 4 r^2 - q v_{r+1}), evaluated backward. A damped fixed
// point from the deep-well seed converges for every q tried up to ~40.
double cf_ground_standard(double q, const Tolerances& tol) {
    if (q == 0.0) return 0.0;
    const int depth = 60 + static_cast<int>(q);
    auto next_value = [&](double a) {
        double v = 0.0;
        for (int r = depth; r >= 2; --r) v = q / (a - 4.0 * r * r - q * v);
        return 2.0 * q * q / (a - 4.0 - q * v);
    };

    double a = (q >= 1.0) ? std::min(-0.5 * q * q, -2.0 * q + 2.0 * std::sqrt(q) - 0.25)
                          : -0.5 * q * q;
    for (int it = 0; it < 800; ++it) {
        const double na = a + 0.5 * (next_value(a) - a);
        if (!std::isfinite(na))
            throw NoConvergence("mathieu: continued-fraction iteration diverged");
        if (std::abs(na - a) < 0.1 * tol.eig_tol) {
            if (na >= 0.0) throw NoConvergence("mathieu: continued fraction left the ground branch");
            return na;
        }
        a = na;
    }
    throw NoConvergence("mathieu: continued-fraction iteration did not settle");
}

}  // namespace

McLachlanGroundState ground_state_mclachlan(double b, const Tolerances& tol) {
    if (b < 0.0) throw std::invalid_argument("ground_state_mclachlan: need b >= 0");
    McLachlanGroundState out;
    if (b == 0.0) return out;

    // three-term form, iterated as printed and seeded at zero
    {
        const double c = (b / 4.0) * (b / 4.0);
        double x = 0.0;
        bool settled = false;
        for (int it = 0; it < 400; ++it) {
            const double nx = 0.25 * (-(0.5 * c) / (1.0 - 0.25 * (x / 4.0)) -
                                      (c / 64.0) / (1.0 - (x / 4.0) / 16.0) -
                                      (c / 576.0) / (1.0 - (x / 4.0) / 36.0));
            if (!std::isfinite(nx))
                throw NoConvergence("ground_state_mclachlan: three-term iteration diverged");
            const bool done = std::abs(nx - x) < tol.eig_tol;
            x = nx;
            if (done) {
                settled = true;
                break;
            }
        }
        if (!settled)
            throw NoConvergence("ground_state_mclachlan: three-term iteration did not settle");
        out.three_term_value = x;
    }

    out.continued_fraction_value = cf_ground_standard(2.0 * b, tol) / 4.0;
    return out;
}

double trace_sqrt_neg(double b, double a, const Tolerances& tol) {
    if (b < 0.0) throw std::invalid_argument("trace_sqrt_neg: need b >= 0");
    int n = 8;
    MathieuSpectrum sp = spectrum(b, n, tol);
    while (sp.eigenvalues.back() <= a) {
        n *= 2;
        if (n > 4096) throw NoConvergence("trace_sqrt_neg: spectrum did not clear the shift");
        sp = spectrum(b, n, tol);
    }
    double sum = 0.0;
    for (double m : sp.eigenvalues) {
        if (m > a) break;
        sum += std::sqrt(a - m);
    }
    return sum;
}

}  // namespace dipspec::mathieu
