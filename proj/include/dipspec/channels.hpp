#pragma once

#include <vector>

#include "dipspec/core.hpp"

namespace dipspec::channels {

enum class Boundary { Dirichlet, Neumann };

/// Problem instance: H_{a,b} = -Laplace - (a + b x_1/|x|)/|x|^2 on the
/// exterior of the unit disk, with the chosen condition on |x| = 1.
struct DipoleSpec {
    double a = 0.0;  // isotropic inverse-square strength
    double b = 0.0;  // dipole strength, >= 0 (moment fixed along the first axis)
    Boundary boundary = Boundary::Dirichlet;
};

/// One angular channel: the k-th Mathieu eigenvalue m_k opens a radial
/// channel with effective order nu = sqrt(a - m_k) when a - m_k > 0.
struct Channel {
    int index = 0;
    double mathieu_eigenvalue = 0.0;
    bool open = false;
    double nu = 0.0;  // meaningful only when open
};

struct ChannelSet {
    DipoleSpec spec;
    std::vector<Channel> channels;

    int open_count() const {
        int c = 0;
        for (const auto& ch : channels) c += ch.open ? 1 : 0;
        return c;
    }
    double max_nu() const {
        double m = 0.0;
        for (const auto& ch : channels)
            if (ch.open && ch.nu > m) m = ch.nu;
        return m;
    }
};

struct ChannelCount {
    int total = 0;
    std::vector<int> per_channel;  // aligned with ChannelSet::channels
};

/// (E, N(E)) samples with per-channel breakdown and the fitted accumulation
/// slope of N against |log(-E)|.
struct CountingCurve {
    DipoleSpec spec;
    struct Sample {
        double E = 0.0;
        int total = 0;
        std::vector<int> per_channel;
    };
    std::vector<Sample> samples;       // ascending E (magnitude shrinking to 0)
    double fitted_slope = 0.0;         // least squares of N vs |log(-E)|
    double theoretical_slope = 0.0;    // tr sqrt((M_b - a)_-) / (2 pi)
    double residual = 0.0;             // |fitted - theoretical|
    double slope_stderr = 0.0;         // least-squares diagnostic
};

/// Mathieu decomposition, listed through the first closed channel plus a
/// safety margin of two (eigenvalues ascend, so closure is permanent).
ChannelSet decompose(const DipoleSpec& spec, const Tolerances& tol = {});

/// N_{(-inf,E)}(H_{a,b}) for E < 0. Dirichlet counts analytically per channel
/// (eigenvalues are -k_{nu,n}^2, zeros of K_{i nu} at the boundary); Neumann
/// is delegated to the finite-difference oracle, which realizes that boundary
/// condition exactly.
ChannelCount count_eigenvalues(const ChannelSet& set, double E, const Tolerances& tol = {});
ChannelCount count_eigenvalues(const DipoleSpec& spec, double E, const Tolerances& tol = {});

/// Log-spaced E grid between E_lo and E_hi (E_lo < E_hi < 0) with the least
/// squares slope extraction; the fit averages out the +-1 staircase noise of
/// the integer counts.
CountingCurve counting_curve(const DipoleSpec& spec, double E_lo, double E_hi, int points,
                             const Tolerances& tol = {});

/// Band-edge accumulation rate of the two-component gap problem:
/// tr sqrt((M_{2b})_-) / pi, i.e. twice the slope of the scalar problem with
/// doubled dipole strength (one copy per spin component).
double dirac_slope(double b, const Tolerances& tol = {});

}  // namespace dipspec::channels
