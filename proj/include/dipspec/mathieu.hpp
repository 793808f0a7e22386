#pragma once

#include <vector>

#include "dipspec/core.hpp"

namespace dipspec::mathieu {

/// Converged low-lying spectrum of the periodic angular operator
/// M_b = -d^2/dphi^2 - b cos(phi) on the circle. The spectrum is even in b
/// (phi -> phi + pi conjugates b to -b), and the ground state is strictly
/// negative for every b != 0.
struct MathieuSpectrum {
    double b = 0.0;
    int truncation = 0;                // Fourier modes -M..M of the final pass
    std::vector<double> eigenvalues;   // ascending
    bool converged = false;            // doubling M moved nothing beyond eig_tol
};

/// Two independent evaluations of the lowest characteristic value.
///
/// three_term_value iterates the three-term transcendental equation in the
/// form it is commonly quoted for this rescaled operator; its leading order
/// is -b^2/128, which disagrees with both perturbation theory (-b^2/2) and
/// the matrix spectrum, so it is reported for comparison rather than used.
/// continued_fraction_value runs the full McLachlan recursion in standard
/// Mathieu normalization (a = 4 mu, q = 2 b) and maps back by mu = a/4; it
/// matches the matrix route to solver accuracy.
struct McLachlanGroundState {
    double three_term_value = 0.0;
    double continued_fraction_value = 0.0;
};

/// Fourier-basis matrix of M_b with modes m = -M..M: diagonal m^2, nearest
/// neighbour coupling -b/2 from the cosine.
Tridiagonal build_matrix(double b, int modes);

/// Lowest n_eigs eigenvalues, with the truncation auto-doubled from M = 16
/// until successive passes agree to eig_tol. Throws NoConvergence if the
/// truncation cap (4096) is exceeded.
MathieuSpectrum spectrum(double b, int n_eigs, const Tolerances& tol = {});

McLachlanGroundState ground_state_mclachlan(double b, const Tolerances& tol = {});

/// tr sqrt((M_b - a)_-) = sum_k sqrt(max(a - m_k, 0)); the sum truncates on
/// its own because the eigenvalues increase.
double trace_sqrt_neg(double b, double a, const Tolerances& tol = {});

}  // namespace dipspec::mathieu
