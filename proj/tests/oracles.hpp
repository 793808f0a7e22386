// Test-only oracles, independent of the library's computational paths:
// a cyclic Jacobi dense eigensolver, the power series for the zero-order
// modified Bessel function of the second kind, and a Lanczos complex
// log-gamma. Expected values in the suites are frozen from these.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "dipspec/core.hpp"

namespace oracles {

using Dense = std::vector<std::vector<double>>;

inline Dense dense_from_tridiagonal(const dipspec::Tridiagonal& T) {
    const std::size_t n = T.size();
    Dense A(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        A[i][i] = T.diag[i];
        if (i + 1 < n) {
            A[i][i + 1] = T.offdiag[i];
            A[i + 1][i] = T.offdiag[i];
        }
    }
    return A;
}

/// Cyclic Jacobi rotations; returns the eigenvalues sorted ascending.
inline std::vector<double> jacobi_eigenvalues(Dense A) {
    const std::size_t n = A.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += A[p][q] * A[p][q];
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (A[p][q] == 0.0) continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = A[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline int count_below(const std::vector<double>& eigenvalues, double threshold) {
    int c = 0;
    for (double e : eigenvalues) c += (e < threshold) ? 1 : 0;
    return c;
}

/// K_0(x) for 0 < x <= 2 from the ascending series
/// K_0 = -(log(x/2) + gamma) I_0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 H_k.
inline double k0_series(double x) {
    const double gamma_e = 0.57721566490153286060651209;
    const double z = 0.25 * x * x;
    double term = 1.0;       // (x^2/4)^k / (k!)^2
    double i0 = 1.0;
    double sum = 0.0;
    double harmonic = 0.0;
    for (int k = 1; k <= 60; ++k) {
        term *= z / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        sum += term * harmonic;
    }
    return -(std::log(0.5 * x) + gamma_e) * i0 + sum;
}

/// arg Gamma(1 + i nu) via a Lanczos approximation in complex arithmetic;
/// valid (principal branch equals the continuous branch) for 0 <= nu <= 3.5.
inline double arg_gamma_1p_i(double nu) {
    static const double g = 7.0;
    static const double coeff[9] = {0.99999999999980993,  676.5203681218851,
                                    -1259.1392167224028,  771.32342877765313,
                                    -176.61502916214059,  12.507343278686905,
                                    -0.13857109526572012, 9.9843695780195716e-6,
                                    1.5056327351493116e-7};
    std::complex<double> z(1.0, nu);
    z -= 1.0;
    std::complex<double> x(coeff[0], 0.0);
    for (int i = 1; i < 9; ++i) x += coeff[i] / (z + std::complex<double>(i, 0.0));
    const std::complex<double> t = z + std::complex<double>(g + 0.5, 0.0);
    const std::complex<double> log_gamma =
        0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
    return log_gamma.imag();
}

/// Deterministic canonical uniform in [0, 1).
inline double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline dipspec::Tridiagonal random_tridiagonal(std::mt19937_64& rng, int n, double scale = 2.0) {
    dipspec::Tridiagonal T;
    T.diag.resize(n);
    T.offdiag.resize(n - 1);
    for (int i = 0; i < n; ++i) T.diag[i] = scale * (2.0 * uniform(rng) - 1.0);
    for (int i = 0; i + 1 < n; ++i) T.offdiag[i] = scale * (2.0 * uniform(rng) - 1.0);
    return T;
}

/// Slope of the least-squares line through (x_i, y_i).
inline double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

}  // namespace oracles
