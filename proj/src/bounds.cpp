#include "dipspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dipspec/oracle_radial.hpp"

namespace dipspec::bounds {

namespace {
constexpr double kPi = std::numbers::pi;
}

SampledPotential SampledPotential::radial(const std::function<double(double)>& V, double r_max,
                                          int rings) {
    if (!(r_max > 0.0) || rings < 1)
        throw std::invalid_argument("SampledPotential::radial: bad arguments");
    SampledPotential out;
    out.kind = Kind::Radial;
    out.support_radius = r_max;
    out.ring_edges.resize(rings + 1);
    out.cells.resize(rings);
    const double dr = r_max / rings;
    for (int i = 0; i <= rings; ++i) out.ring_edges[i] = dr * i;
    for (int i = 0; i < rings; ++i) {
        const double r0 = out.ring_edges[i];
        const double r1 = out.ring_edges[i + 1];
        const double rm = 0.5 * (r0 + r1);
        out.cells[i] = {V(rm), kPi * (r1 * r1 - r0 * r0), rm};
    }
    return out;
}

SampledPotential SampledPotential::radial_log(const std::function<double(double)>& V,
                                              double r_min, double r_max, int rings) {
    if (!(0.0 < r_min && r_min < r_max) || rings < 1)
        throw std::invalid_argument("SampledPotential::radial_log: bad arguments");
    SampledPotential out;
    out.kind = Kind::Radial;
    out.support_radius = r_max;
    out.ring_edges.resize(rings + 1);
    out.cells.resize(rings);
    const double ratio = std::pow(r_max / r_min, 1.0 / rings);
    out.ring_edges[0] = r_min;
    for (int i = 1; i <= rings; ++i) out.ring_edges[i] = out.ring_edges[i - 1] * ratio;
    out.ring_edges[rings] = r_max;
    for (int i = 0; i < rings; ++i) {
        const double r0 = out.ring_edges[i];
        const double r1 = out.ring_edges[i + 1];
        const double rm = std::sqrt(r0 * r1);
        out.cells[i] = {V(rm), kPi * (r1 * r1 - r0 * r0), rm};
    }
    return out;
}

SampledPotential SampledPotential::polar(const std::function<double(double, double)>& V,
                                         double r_max, int n_r, int n_phi) {
    if (!(r_max > 0.0) || n_r < 1 || n_phi < 1)
        throw std::invalid_argument("SampledPotential::polar: bad arguments");
    SampledPotential out;
    out.kind = Kind::PolarGrid;
    out.support_radius = r_max;
    out.cells.reserve(static_cast<std::size_t>(n_r) * n_phi);
    const double dr = r_max / n_r;
    const double dphi = 2.0 * kPi / n_phi;
    for (int i = 0; i < n_r; ++i) {
        const double r0 = dr * i;
        const double r1 = dr * (i + 1);
        const double rm = 0.5 * (r0 + r1);
        const double ring_area = kPi * (r1 * r1 - r0 * r0) / n_phi;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = dphi * (j + 0.5);
            out.cells.push_back({V(rm, phi), ring_area, rm});
        }
    }
    return out;
}

double SampledPotential::value_at(double r) const {
    if (kind != Kind::Radial)
        throw std::invalid_argument("SampledPotential::value_at: radial potentials only");
    if (r < ring_edges.front() || r >= ring_edges.back()) return 0.0;
    const auto it = std::upper_bound(ring_edges.begin(), ring_edges.end(), r);
    const std::size_t idx = static_cast<std::size_t>(it - ring_edges.begin()) - 1;
    return cells[std::min(idx, cells.size() - 1)].value;
}

RearrangedProfile decreasing_rearrangement(const SampledPotential& V) {
    std::vector<std::pair<double, double>> neg;  // (V_- value, area)
    neg.reserve(V.cells.size());
    for (const auto& c : V.cells) {
        const double vm = std::max(-c.value, 0.0);
        if (vm > 0.0 && c.area > 0.0) neg.emplace_back(vm, c.area);
    }
    std::sort(neg.begin(), neg.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });

    RearrangedProfile out;
    double cum = 0.0;
    for (const auto& [v, area] : neg) {
        cum += area;
        if (!out.steps.empty() && out.steps.back().value == v)
            out.steps.back().cum_area = cum;  // merge equal levels
        else
            out.steps.push_back({v, cum});
    }
    return out;
}

double RearrangedProfile::value_at_area(double A) const {
    if (A < 0.0) A = 0.0;
    for (const auto& s : steps)
        if (A < s.cum_area) return s.value;
    return 0.0;
}

double RearrangedProfile::total_area() const {
    return steps.empty() ? 0.0 : steps.back().cum_area;
}

namespace {

// Exact integral over (0,1) of profile(arg(t)) |log t| dt for a step profile.
// Area mode: arg(t) = pi t, so the step ending at area A ends at t = A/pi.
// Radius mode: the symmetric-decreasing profile at radius pi t, i.e. area
// argument pi (pi t)^2, so the step ends at t = sqrt(A/pi)/pi.
// Antiderivative of |log t| on (0,1] is F(t) = t - t log t, F(0) = 0.
double log_weighted_profile_integral(const RearrangedProfile& profile, RearrangementArg arg) {
    auto F = [](double t) { return (t <= 0.0) ? 0.0 : t - t * std::log(t); };
    auto breakpoint = [&](double area) {
        return (arg == RearrangementArg::Area) ? area / kPi : std::sqrt(area / kPi) / kPi;
    };
    double total = 0.0;
    double t_lo = 0.0;
    for (const auto& s : profile.steps) {
        const double t_hi = std::min(breakpoint(s.cum_area), 1.0);
        if (t_hi > t_lo) total += s.value * (F(t_hi) - F(t_lo));
        t_lo = t_hi;
        if (t_lo >= 1.0) break;
    }
    return total;
}

ShargorodskyTerms functional_of_negative_part(const SampledPotential& V, RearrangementArg arg) {
    ShargorodskyTerms out;
    for (const auto& c : V.cells) {
        const double vm = std::max(-c.value, 0.0);
        if (vm > 0.0) out.I1 += vm * std::log(2.0 + c.radius) * c.area;
    }
    out.I2 = log_weighted_profile_integral(decreasing_rearrangement(V), arg);
    return out;
}

}  // namespace

ShargorodskyTerms shargorodsky_functional(const SampledPotential& V, RearrangementArg arg) {
    return functional_of_negative_part(V, arg);
}

HypothesisReport hypothesis_check(const SampledPotential& s, RearrangementArg arg) {
    HypothesisReport out;
    const ShargorodskyTerms neg = functional_of_negative_part(s, arg);
    out.J_minus = neg.I1 + neg.I2;

    SampledPotential squared = s;
    for (auto& c : squared.cells) c.value = -c.value * c.value;  // negative part is s^2
    const ShargorodskyTerms sq = functional_of_negative_part(squared, arg);
    out.J_square = sq.I1 + sq.I2;

    out.admissible = std::isfinite(out.J_minus) && std::isfinite(out.J_square);
    return out;
}

int count_radial_below(const std::function<double(double)>& V, double support_radius, double E,
                       const LineGrid& grid) {
    if (grid.t_max < std::log(std::max(support_radius, 1.0)) + 2.0)
        throw GridInadequate("count_radial_below: grid does not cover the sampled support");
    if (!(grid.t_max > grid.t_min) || grid.n < 16)
        throw std::invalid_argument("count_radial_below: bad grid");

    int total = 0;
    for (int m = 0; m < 512; ++m) {
        // inner boundary Neumann: the bounded solution tends to a constant as
        // r -> 0 in the m = 0 channel, which a Dirichlet cut would suppress
        oracle::DiscretizedChannel d = oracle::log_radial_operator(
            static_cast<double>(m) * m, V, grid.t_min, grid.t_max, grid.n, true);
        Tridiagonal shifted = std::move(d.matrix);
        if (E != 0.0)
            for (std::size_t i = 0; i < shifted.diag.size(); ++i)
                shifted.diag[i] -= E * d.weight[i];
        const int c = sturm_count(shifted, 0.0);
        if (c == 0) break;  // counts are monotone in m^2: later channels stay empty
        total += (m == 0) ? c : 2 * c;
    }
    return total;
}

int count_negative_radial(const SampledPotential& V, const LineGrid& grid) {
    if (V.kind != SampledPotential::Kind::Radial)
        throw std::invalid_argument("count_negative_radial: radial potentials only");
    return count_radial_below([&V](double r) { return V.value_at(r); }, V.support_radius, 0.0,
                              grid);
}

Tridiagonal householder_tridiagonalize(const SymmetricMatrix& A) {
    const int n = A.n;
    if (n < 1 || static_cast<int>(A.a.size()) != n * n)
        throw std::invalid_argument("householder_tridiagonalize: malformed matrix");

    std::vector<double> w(A.a);
    auto at = [&](int i, int j) -> double& { return w[static_cast<std::size_t>(i) * n + j]; };

    Tridiagonal T;
    T.diag.resize(n);
    T.offdiag.assign(std::max(0, n - 1), 0.0);

    std::vector<double> u(n), p(n);
    for (int k = 0; k < n - 2; ++k) {
        double sigma = 0.0;
        for (int i = k + 1; i < n; ++i) sigma += at(i, k) * at(i, k);
        const double f = at(k + 1, k);
        if (sigma == 0.0) {
            T.offdiag[k] = f;
            continue;
        }
        const double g = (f >= 0.0) ? -std::sqrt(sigma) : std::sqrt(sigma);
        const double h = sigma - f * g;
        T.offdiag[k] = g;

        std::fill(u.begin(), u.end(), 0.0);
        u[k + 1] = f - g;
        for (int i = k + 2; i < n; ++i) u[i] = at(i, k);

        // p = A u / h, then the rank-two symmetric update
        for (int i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += at(i, j) * u[j];
            p[i] = s / h;
        }
        double K = 0.0;
        for (int i = k + 1; i < n; ++i) K += u[i] * p[i];
        K /= 2.0 * h;
        for (int i = k + 1; i < n; ++i) p[i] -= K * u[i];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) at(i, j) -= u[i] * p[j] + p[i] * u[j];
    }
    if (n >= 2) T.offdiag[n - 2] = at(n - 1, n - 2);
    for (int i = 0; i < n; ++i) T.diag[i] = at(i, i);
    return T;
}

int count_below(const SymmetricMatrix& A, double E) {
    return sturm_count(householder_tridiagonalize(A), E);
}

int count_below(const Tridiagonal& A, double E) { return sturm_count(A, E); }

SumRuleReport sum_rule_check(const SymmetricMatrix& A, const SymmetricMatrix& B, double E) {
    if (A.n != B.n) throw DimensionMismatch("sum_rule_check: matrix sizes differ");
    SymmetricMatrix S(A.n);
    for (std::size_t i = 0; i < S.a.size(); ++i) S.a[i] = A.a[i] + B.a[i];
    SumRuleReport r;
    r.count_sum = count_below(S, E);
    r.count_a = count_below(A, E);
    r.count_b = count_below(B, E);
    r.holds = r.count_sum <= r.count_a + r.count_b;
    return r;
}

SumRuleReport sum_rule_check(const Tridiagonal& A, const Tridiagonal& B, double E) {
    if (A.size() != B.size() || !A.valid() || !B.valid())
        throw DimensionMismatch("sum_rule_check: matrix sizes differ");
    Tridiagonal S;
    S.diag.resize(A.size());
    S.offdiag.resize(A.offdiag.size());
    for (std::size_t i = 0; i < S.diag.size(); ++i) S.diag[i] = A.diag[i] + B.diag[i];
    for (std::size_t i = 0; i < S.offdiag.size(); ++i) S.offdiag[i] = A.offdiag[i] + B.offdiag[i];
    SumRuleReport r;
    r.count_sum = sturm_count(S, E);
    r.count_a = sturm_count(A, E);
    r.count_b = sturm_count(B, E);
    r.holds = r.count_sum <= r.count_a + r.count_b;
    return r;
}

SplitRuleReport split_rule_check(const std::function<double(double)>& V,
                                 const std::function<double(double)>& W, double support_radius,
                                 double eps, double E, const LineGrid& grid) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("split_rule_check: need eps in (0,1)");
    if (!(E < 0.0)) throw std::invalid_argument("split_rule_check: need E < 0");

    auto count = [&](const std::function<double(double)>& U) {
        return count_radial_below(U, support_radius, E, grid);
    };
    SplitRuleReport r;
    r.n_sum = count([&](double x) { return V(x) + W(x); });
    r.n_v_up = count([&](double x) { return V(x) / (1.0 - eps); });
    r.n_w_up = count([&](double x) { return W(x) / eps; });
    r.n_v_down = count([&](double x) { return (1.0 - eps) * V(x); });
    r.n_w_flip = count([&](double x) { return -(1.0 - eps) / eps * W(x); });
    r.upper_holds = r.n_sum <= r.n_v_up + r.n_w_up;
    r.lower_holds = r.n_sum >= r.n_v_down - r.n_w_flip;
    return r;
}

}  // namespace dipspec::bounds
