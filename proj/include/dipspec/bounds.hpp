#pragma once

#include <functional>
#include <vector>

#include "dipspec/core.hpp"

namespace dipspec::bounds {

/// Cell-sampled potential on the plane. Radial kind stores annular rings
/// (edges kept for point lookup); polar-grid kind stores ring x sector cells.
/// Every cell carries its value, area, and a representative radius.
struct SampledPotential {
    enum class Kind { Radial, PolarGrid };

    struct Cell {
        double value = 0.0;
        double area = 0.0;
        double radius = 0.0;
    };

    Kind kind = Kind::Radial;
    std::vector<Cell> cells;
    std::vector<double> ring_edges;  // radial kind: cell i covers [e_i, e_{i+1})
    double support_radius = 0.0;

    /// Uniform radial sampling of V(r) on [0, r_max] with the given ring count.
    static SampledPotential radial(const std::function<double(double)>& V, double r_max,
                                   int rings);
    /// Geometric (log-spaced) radial sampling on [r_min, r_max]; suited to
    /// slowly decaying tails.
    static SampledPotential radial_log(const std::function<double(double)>& V, double r_min,
                                       double r_max, int rings);
    /// Polar grid sampling of V(r, phi).
    static SampledPotential polar(const std::function<double(double, double)>& V, double r_max,
                                  int n_r, int n_phi);

    /// Point lookup for radial potentials (0 outside the sampled support).
    double value_at(double r) const;
};

/// Decreasing rearrangement of the negative part, as a right-continuous step
/// function of the area variable A: value_at_area(A) is the largest level s
/// with area{V_- > s} > A.
struct RearrangedProfile {
    struct Step {
        double value = 0.0;     // step height, descending
        double cum_area = 0.0;  // area covered once this step ends
    };
    std::vector<Step> steps;

    double value_at_area(double A) const;
    double total_area() const;
};

RearrangedProfile decreasing_rearrangement(const SampledPotential& V);

/// Which variable the rearrangement is evaluated at inside the bound's
/// weighted integral: the area variable (default) or the radius of the
/// symmetric-decreasing profile. Exposed for sensitivity checks.
enum class RearrangementArg { Area, Radius };

struct ShargorodskyTerms {
    double I1 = 0.0;  // integral of V_-(x) log(2 + |x|)
    double I2 = 0.0;  // integral over (0,1) of the rearrangement with |log t| weight
};

/// Both terms of the two-dimensional eigenvalue-count bound. I1 sums the
/// cells; I2 integrates the step profile against |log t| exactly per step
/// (antiderivative t - t log t), which the tests cross-check by quadrature.
ShargorodskyTerms shargorodsky_functional(const SampledPotential& V,
                                          RearrangementArg arg = RearrangementArg::Area);

struct HypothesisReport {
    double J_minus = 0.0;   // weighted-integral pair on the negative part
    double J_square = 0.0;  // same pair on the squared potential
    bool admissible = false;
};

HypothesisReport hypothesis_check(const SampledPotential& s,
                                  RearrangementArg arg = RearrangementArg::Area);

/// Grid in t = ln r covering (e^{t_min}, e^{t_max}) with n interior nodes:
/// the whole-plane analogue of the exterior grid.
struct LineGrid {
    double t_min = -12.0;
    double t_max = 40.0;
    int n = 10000;
};

/// Number of negative eigenvalues of -Laplace + V on the plane for radial V:
/// angular-momentum channels m = 0, 1, 2, ... counted by Sturm sequences on
/// the log-variable discretization, stopping at the first empty channel
/// (counts are monotone in m^2); +-m degeneracy included.
int count_negative_radial(const SampledPotential& V, const LineGrid& grid = {});

/// Same machinery at a general threshold E and arbitrary radial profile.
int count_radial_below(const std::function<double(double)>& V, double support_radius, double E,
                       const LineGrid& grid = {});

/// Dense symmetric matrix, row major.
struct SymmetricMatrix {
    int n = 0;
    std::vector<double> a;

    explicit SymmetricMatrix(int dim = 0) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Orthogonal reduction to tridiagonal form (Householder); eigenvalue counts
/// are preserved exactly, so dense counting reduces to sturm_count.
Tridiagonal householder_tridiagonalize(const SymmetricMatrix& A);

int count_below(const SymmetricMatrix& A, double E);
int count_below(const Tridiagonal& A, double E);

struct SumRuleReport {
    int count_sum = 0;  // N_{(-inf,E)}(A + B)
    int count_a = 0;
    int count_b = 0;
    bool holds = false;  // count_sum <= count_a + count_b
};

SumRuleReport sum_rule_check(const SymmetricMatrix& A, const SymmetricMatrix& B, double E);
SumRuleReport sum_rule_check(const Tridiagonal& A, const Tridiagonal& B, double E);

/// The two potential-splitting count inequalities at energy E < 0 for
/// -Laplace + V + W with radial V, W and parameter eps in (0, 1):
///   upper: N(V + W) <= N(V/(1-eps)) + N(W/eps)
///   lower: N(V + W) >= N((1-eps) V) - N(-(1-eps)/eps W)
struct SplitRuleReport {
    int n_sum = 0;
    int n_v_up = 0;
    int n_w_up = 0;
    int n_v_down = 0;
    int n_w_flip = 0;
    bool upper_holds = false;
    bool lower_holds = false;
};

SplitRuleReport split_rule_check(const std::function<double(double)>& V,
                                 const std::function<double(double)>& W, double support_radius,
                                 double eps, double E, const LineGrid& grid = {});

}  // namespace dipspec::bounds
