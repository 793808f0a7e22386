#include "dipspec/oracle_radial.hpp"

#include <algorithm>
#include <cmath>

namespace dipspec::oracle {

DiscretizedChannel log_radial_operator(double c, const std::function<double(double)>& V,
                                       double t0, double t1, int n, bool inner_neumann) {
    if (!(t1 > t0)) throw std::invalid_argument("log_radial_operator: need t1 > t0");
    if (n < 16) throw std::invalid_argument("log_radial_operator: need n >= 16");

    const double h = (t1 - t0) / static_cast<double>(n + 1);
    const int m = inner_neumann ? n + 1 : n;
    const int j0 = inner_neumann ? 0 : 1;

    DiscretizedChannel out;
    out.matrix.diag.resize(m);
    out.matrix.offdiag.assign(m - 1, -1.0 / (h * h));
    out.weight.resize(m);

    for (int i = 0; i < m; ++i) {
        const int j = j0 + i;
        const double t = t0 + h * static_cast<double>(j);
        // half trapezoid weight on the free boundary node
        const double w = (inner_neumann && i == 0) ? 0.5 : 1.0;
        const double stiff = (inner_neumann && i == 0) ? 1.0 / (h * h) : 2.0 / (h * h);
        const double pot = V ? V(std::exp(t)) : 0.0;
        const double e2t = std::exp(2.0 * t);
        out.matrix.diag[i] = stiff + w * (c + e2t * pot);
        out.weight[i] = w * e2t;
    }
    return out;
}

DiscretizedChannel discretize_channel(double nu_sq, const RadialGrid& grid,
                                      channels::Boundary bc) {
    return log_radial_operator(-nu_sq, nullptr, 0.0, grid.T, grid.n,
                               bc == channels::Boundary::Neumann);
}

namespace {

int channel_count_below(double nu_sq, channels::Boundary bc, double E, const RadialGrid& grid) {
    DiscretizedChannel d = discretize_channel(nu_sq, grid, bc);
    Tridiagonal shifted = std::move(d.matrix);
    for (std::size_t i = 0; i < shifted.diag.size(); ++i) shifted.diag[i] -= E * d.weight[i];
    return sturm_count(shifted, 0.0);
}

}  // namespace

channels::ChannelCount count_below(const channels::ChannelSet& set, double E,
                                   const RadialGrid& grid) {
    if (!(E < 0.0)) throw std::invalid_argument("oracle::count_below: need E < 0");
    if (!grid.adequate_for(E))
        throw GridInadequate("oracle::count_below: truncation too small for this E; enlarge T");

    channels::ChannelCount out;
    out.per_channel.assign(set.channels.size(), 0);
    for (std::size_t i = 0; i < set.channels.size(); ++i) {
        const auto& ch = set.channels[i];
        if (!ch.open) continue;
        const int c = channel_count_below(ch.nu * ch.nu, set.spec.boundary, E, grid);
        out.per_channel[i] = c;
        out.total += c;
    }
    return out;
}

std::vector<ConvergenceRow> convergence_study(double nu_sq, channels::Boundary bc, double E,
                                              const std::vector<RadialGrid>& grids) {
    if (grids.size() < 2)
        throw std::invalid_argument("convergence_study: need at least two grids");
    if (!(E < 0.0)) throw std::invalid_argument("convergence_study: need E < 0");

    std::vector<ConvergenceRow> rows;
    rows.reserve(grids.size());
    for (const auto& g : grids) {
        if (!g.adequate_for(E))
            throw GridInadequate("convergence_study: truncation too small for this E");
        rows.push_back({g, channel_count_below(nu_sq, bc, E, g)});
    }
    const int last = rows.back().count;
    if (rows[rows.size() - 2].count != last)
        throw NoConvergence("convergence_study: counts still moving at the finest grid");
    return rows;
}

RadialGrid auto_grid(double E, double nu_max) {
    RadialGrid g;
    g.T = std::log(1.0 / std::sqrt(-E)) + 6.0;
    const double per_length = 200.0 * std::max(1.0, nu_max);
    g.n = std::max(3000, static_cast<int>(per_length * std::ceil(g.T)));
    return g;
}

}  // namespace dipspec::oracle
