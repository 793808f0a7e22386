#include "dipspec/bessel_im.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dipspec::bessel {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;
// ln of the smallest normal double, with a little headroom
constexpr double kLogTiny = -700.0;
}  // namespace

double phase(double nu) {
    if (nu < 0.0) throw std::invalid_argument("bessel::phase: need nu >= 0");
    if (nu == 0.0) return 0.0;

    constexpr int N = 1000;
    double s = -kEulerGamma * nu;
    for (int k = 1; k <= N; ++k) {
        const double x = nu / static_cast<double>(k);
        s += x - std::atan(x);
    }
    // closed-form tail: int_{N+1/2}^inf (nu/k - atan(nu/k)) dk plus the
    // midpoint Euler-Maclaurin correction f'(N+1/2)/24
    const double m = N + 0.5;
    const double tail =
        -nu - (nu * std::log(m) - m * std::atan(nu / m) - 0.5 * nu * std::log(m * m + nu * nu));
    const double fprime = -nu / (m * m) + (nu / (m * m)) / (1.0 + (nu / m) * (nu / m));
    return s + tail + fprime / 24.0;
}

double eval_K(double nu, double x, const Tolerances& tol) {
    if (nu < 0.0) throw std::invalid_argument("bessel::eval_K: need nu >= 0");
    if (!(x > 0.0)) throw std::invalid_argument("bessel::eval_K: need x > 0");
    if (x > -kLogTiny)
        throw UnderflowError("bessel::eval_K: result below representable range");
    // past x ~ 1e-290 the decay point ln(2/x) collides with cosh overflow and
    // the integrand would silently truncate
    if (x < 1e-290)
        throw UnderflowError("bessel::eval_K: argument below the evaluation range");
    return quad_semiinf([nu, x](double t) { return std::exp(-x * std::cosh(t)) * std::cos(nu * t); },
                        tol);
}

double zero_asymptotic(double nu, int n) {
    if (!(nu > 0.0)) throw std::invalid_argument("bessel::zero_asymptotic: need nu > 0");
    if (n < 1) throw std::invalid_argument("bessel::zero_asymptotic: need n >= 1");
    const double expo = -(n * kPi - phase(nu)) / nu;
    if (expo < kLogTiny)
        throw UnderflowError("bessel::zero_asymptotic: zero below representable range");
    const double u = std::exp(expo);
    return 2.0 * u * (1.0 + u * u / (1.0 + nu * nu));
}

double zero_refined(double nu, int n, const Tolerances& tol) {
    const double guess = zero_asymptotic(nu, n);  // propagates UnderflowError
    const double expo = -(n * kPi - phase(nu)) / nu;
    const double correction = std::exp(2.0 * expo) / (1.0 + nu * nu);
    if (correction < 100.0 * tol.root_tol)
        throw UnderflowError("bessel::zero_refined: zero too deep to refine beyond asymptotics");

    auto f = [&](double x) { return eval_K(nu, x, tol); };

    // Bracket around the guess; shrink when the window catches a neighbour.
    double lo = 0.5 * guess;
    double hi = 2.0 * guess;
    for (int attempt = 0; attempt < 8; ++attempt) {
        constexpr int kSamples = 24;
        const double ratio = std::pow(hi / lo, 1.0 / kSamples);
        double xa = lo;
        double fa = f(xa);
        int changes = 0;
        double best_a = 0.0, best_b = 0.0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= kSamples; ++i) {
            const double xb = (i == kSamples) ? hi : lo * std::pow(ratio, i);
            const double fb = f(xb);
            if ((fa < 0.0) != (fb < 0.0)) {
                ++changes;
                const double mid = std::sqrt(xa * xb);
                const double dist = std::abs(std::log(mid / guess));
                if (dist < best_dist) {
                    best_dist = dist;
                    best_a = xa;
                    best_b = xb;
                }
            }
            xa = xb;
            fa = fb;
        }
        if (changes == 1) return bracket_root(f, best_a, best_b, tol);
        if (changes > 1) {
            // more than one zero in the window: tighten toward the guess
            lo = std::sqrt(lo * guess);
            hi = std::sqrt(hi * guess);
            continue;
        }
        throw NoSignChange("bessel::zero_refined: no sign change near the asymptotic guess");
    }
    throw NoSignChange("bessel::zero_refined: could not isolate a single sign change");
}

ZeroTable make_zero_table(double nu, int n_max, const Tolerances& tol) {
    ZeroTable table;
    table.nu = nu;
    for (int n = 1; n <= n_max; ++n) {
        ZeroTable::Entry e;
        e.n = n;
        try {
            e.asymptotic = zero_asymptotic(nu, n);
        } catch (const UnderflowError&) {
            break;  // deeper zeros collapse below the representable range
        }
        try {
            e.refined = zero_refined(nu, n, tol);
        } catch (const UnderflowError&) {
        } catch (const NoSignChange&) {
        }
        table.entries.push_back(e);
    }
    return table;
}

int count_zeros_above_floor(double nu, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("bessel::count_zeros_above: need s > 0");
    if (nu <= 0.0) return 0;
    const double t = (nu * std::log(2.0 / s) + phase(nu)) / kPi;
    if (t < 1.0) return 0;
    return static_cast<int>(std::floor(t));
}

int count_zeros_above(double nu, double s, const Tolerances& tol) {
    const int n0 = count_zeros_above_floor(nu, s);
    if (nu <= 0.0) return 0;

    auto zero_at = [&](int n) -> double {
        try {
            return zero_refined(nu, n, tol);
        } catch (const UnderflowError&) {
        } catch (const NoSignChange&) {
        }
        try {
            return zero_asymptotic(nu, n);
        } catch (const UnderflowError&) {
            return 0.0;  // deeper than representable: below any positive s
        }
    };

    if (n0 >= 1 && zero_at(n0) < s) return n0 - 1;
    if (zero_at(n0 + 1) >= s) return n0 + 1;
    return n0;
}

}  // namespace dipspec::bessel
