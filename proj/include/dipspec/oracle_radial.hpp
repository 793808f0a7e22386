#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "dipspec/channels.hpp"
#include "dipspec/core.hpp"

namespace dipspec::oracle {

/// Uniform grid in the logarithmic radial variable t = ln r covering
/// r in (1, e^T), with n interior nodes and spacing h = T/(n+1). Near the
/// spectral threshold the radial oscillation is equispaced in ln r, so a
/// uniform t-grid keeps a fixed number of points per wavelength.
struct RadialGrid {
    double T = 0.0;
    int n = 0;

    double spacing() const { return T / (n + 1); }
    /// Truncation must clear the classical turning point ln(1/sqrt(-E)) by
    /// the margin; the tail beyond decays like exp(-sqrt(-E) r).
    bool adequate_for(double E, double margin = 6.0) const {
        return T >= std::log(1.0 / std::sqrt(-E)) + margin;
    }
};

struct DiscretizedChannel {
    Tridiagonal matrix;           // A
    std::vector<double> weight;   // diagonal of W (positive)
};

// Transformation chain used by the discretization
// -------------------------------------------------
// The radial channel operator on r > 1,
//     -f'' - f'/r - (nu^2/r^2) f = -lambda f,
// is flattened in two steps. First f(r) = r^{-1/2} u(r) removes the first
// derivative:
//     -u'' - (nu^2 + 1/4)/r^2 u = -lambda u.
// Then r = e^t, u = e^{t/2} v(t) turns the eigenproblem into
//     (-d^2/dt^2 - nu^2) v = -lambda e^{2t} v      on (0, T).
//
// Boundary dictionary at r = 1 (t = 0):
//   Dirichlet:  f(1) = 0  <=>  v(0) = 0.
//   Neumann:    f'(1) = 0. Carrying the chain rule through both substitutions:
//     f' = r^{-1/2} u' - (1/2) r^{-3/2} u, so f'(1) = 0 gives u'(1) = u(1)/2;
//     u'(r) = e^{-t/2} (v' + v/2), so u'(1) = v'(0) + v(0)/2, and u(1) = v(0).
//     The two half terms cancel, v'(0) = v(0) (1/2 - 1/2) = 0: the induced
//     Robin coefficient vanishes and the condition is pure Neumann in t.
// The outer truncation at t = T is always Dirichlet.
//
// A is the second-difference matrix plus the diagonal channel term; W is the
// diagonal of e^{2t} at the nodes (with the half trapezoid weight on the
// Neumann boundary node). Counting negative eigenvalues of A - E W equals
// counting generalized eigenvalues below E because W is positive definite.

DiscretizedChannel discretize_channel(double nu_sq, const RadialGrid& grid,
                                      channels::Boundary bc);

/// General log-variable radial operator -v'' + c v + e^{2t} V(e^t) v on
/// (t0, t1): inner boundary Neumann (natural, half-weight node) or Dirichlet,
/// outer always Dirichlet. Exterior channels use c = -nu^2 and V = 0; whole
/// plane angular-momentum channels use c = m^2 with a potential term.
DiscretizedChannel log_radial_operator(double c, const std::function<double(double)>& V,
                                       double t0, double t1, int n, bool inner_neumann);

/// Sturm count of negative eigenvalues of A - E W per open channel. Throws
/// GridInadequate when the truncation does not cover the turning point of E.
channels::ChannelCount count_below(const channels::ChannelSet& set, double E,
                                   const RadialGrid& grid);

/// Counting with the same E across a list of grids; the result is trusted
/// once the finest two agree, otherwise NoConvergence.
struct ConvergenceRow {
    RadialGrid grid;
    int count = 0;
};
std::vector<ConvergenceRow> convergence_study(double nu_sq, channels::Boundary bc, double E,
                                              const std::vector<RadialGrid>& grids);

/// Grid with the default margin and a resolution that tracks the largest
/// open channel order.
RadialGrid auto_grid(double E, double nu_max);

}  // namespace dipspec::oracle
