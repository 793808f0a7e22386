#include "dipspec/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dipspec/bessel_im.hpp"
#include "dipspec/mathieu.hpp"
#include "dipspec/oracle_radial.hpp"

namespace dipspec::channels {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ChannelSet decompose(const DipoleSpec& spec, const Tolerances& tol) {
    if (spec.b < 0.0) throw std::invalid_argument("channels::decompose: need b >= 0");

    int want = 8;
    mathieu::MathieuSpectrum sp = mathieu::spectrum(spec.b, want, tol);
    auto first_closed = [&]() -> int {
        for (std::size_t i = 0; i < sp.eigenvalues.size(); ++i)
            if (sp.eigenvalues[i] >= spec.a) return static_cast<int>(i);
        return -1;
    };
    // list through the first closed index plus a safety margin of two; the
    // eigenvalues ascend, so every later channel stays closed
    while (first_closed() < 0 || first_closed() + 3 > static_cast<int>(sp.eigenvalues.size())) {
        want *= 2;
        if (want > 4096) throw NoConvergence("channels::decompose: open channels did not close");
        sp = mathieu::spectrum(spec.b, want, tol);
    }

    ChannelSet set;
    set.spec = spec;
    const int n_channels = first_closed() + 3;
    set.channels.reserve(n_channels);
    for (int k = 0; k < n_channels; ++k) {
        Channel ch;
        ch.index = k;
        ch.mathieu_eigenvalue = sp.eigenvalues[k];
        const double gap = spec.a - ch.mathieu_eigenvalue;
        ch.open = gap > 0.0;
        ch.nu = ch.open ? std::sqrt(gap) : 0.0;
        set.channels.push_back(ch);
    }
    return set;
}

ChannelCount count_eigenvalues(const ChannelSet& set, double E, const Tolerances& tol) {
    if (!(E < 0.0)) throw std::invalid_argument("channels::count_eigenvalues: need E < 0");

    if (set.spec.boundary == Boundary::Neumann)
        return oracle::count_below(set, E, oracle::auto_grid(E, set.max_nu()));

    ChannelCount out;
    out.per_channel.assign(set.channels.size(), 0);
    const double s = std::sqrt(-E);
    for (std::size_t i = 0; i < set.channels.size(); ++i) {
        const auto& ch = set.channels[i];
        if (!ch.open) continue;
        const int c = bessel::count_zeros_above(ch.nu, s, tol);
        out.per_channel[i] = c;
        out.total += c;
    }
    return out;
}

ChannelCount count_eigenvalues(const DipoleSpec& spec, double E, const Tolerances& tol) {
    return count_eigenvalues(decompose(spec, tol), E, tol);
}

CountingCurve counting_curve(const DipoleSpec& spec, double E_lo, double E_hi, int points,
                             const Tolerances& tol) {
    if (!(E_lo < E_hi && E_hi < 0.0))
        throw std::invalid_argument("channels::counting_curve: need E_lo < E_hi < 0");
    if (points < 2) throw std::invalid_argument("channels::counting_curve: need points >= 2");

    const ChannelSet set = decompose(spec, tol);

    CountingCurve curve;
    curve.spec = spec;
    curve.samples.reserve(points);
    const double la = std::log(-E_lo);
    const double lb = std::log(-E_hi);
    for (int i = 0; i < points; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(points - 1);
        const double E = -std::exp(la + (lb - la) * frac);
        ChannelCount c = count_eigenvalues(set, E, tol);
        curve.samples.push_back({E, c.total, std::move(c.per_channel)});
    }

    // least squares of N against |log(-E)|
    const int n = points;
    double sum_x = 0.0, sum_y = 0.0;
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = std::abs(std::log(-curve.samples[i].E));
        ys[i] = static_cast<double>(curve.samples[i].total);
        sum_x += xs[i];
        sum_y += ys[i];
    }
    const double mean_x = sum_x / n;
    const double mean_y = sum_y / n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    curve.fitted_slope = (sxx > 0.0) ? sxy / sxx : 0.0;
    const double intercept = mean_y - curve.fitted_slope * mean_x;
    double ss_res = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = ys[i] - (curve.fitted_slope * xs[i] + intercept);
        ss_res += r * r;
    }
    curve.slope_stderr = (n > 2 && sxx > 0.0) ? std::sqrt(ss_res / (n - 2) / sxx) : 0.0;

    curve.theoretical_slope = mathieu::trace_sqrt_neg(spec.b, spec.a, tol) / kTwoPi;
    curve.residual = std::abs(curve.fitted_slope - curve.theoretical_slope);
    return curve;
}

double dirac_slope(double b, const Tolerances& tol) {
    if (b < 0.0) throw std::invalid_argument("channels::dirac_slope: need b >= 0");
    return mathieu::trace_sqrt_neg(2.0 * b, 0.0, tol) / std::numbers::pi;
}

}  // namespace dipspec::channels
