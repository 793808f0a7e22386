#include "dipspec/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dipspec {

int sturm_count(const Tridiagonal& T, double threshold) {
    if (!T.valid()) throw std::invalid_argument("sturm_count: malformed tridiagonal");
    double emax2 = 1.0;
    for (double e : T.offdiag) emax2 = std::max(emax2, e * e);
    // pivmin as in the classic bisection codes: the smallest pivot magnitude
    // that keeps e^2 / pivot representable
    const double pivmin = std::numeric_limits<double>::min() * emax2;

    int count = 0;
    double q = 1.0;
    const std::size_t n = T.size();
    for (std::size_t i = 0; i < n; ++i) {
        double d = T.diag[i] - threshold;
        if (i > 0) d -= T.offdiag[i - 1] * T.offdiag[i - 1] / q;
        // ties resolve upward: an eigenvalue exactly at the shift is not
        // strictly below it
        if (std::abs(d) <= pivmin) d = pivmin;
        if (d < 0.0) ++count;
        q = d;
    }
    return count;
}

double tridiag_eigenvalue(const Tridiagonal& T, int k, const Tolerances& tol) {
    if (!T.valid()) throw std::invalid_argument("tridiag_eigenvalue: malformed tridiagonal");
    if (k < 0 || k >= static_cast<int>(T.size()))
        throw std::invalid_argument("tridiag_eigenvalue: index out of range");

    // Gershgorin enclosure
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = T.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(T.offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    lo -= 1e-12;
    hi += 1e-12;

    const double eps = std::numeric_limits<double>::epsilon();
    while (hi - lo > std::max(0.5 * tol.eig_tol, 4.0 * eps * std::max(std::abs(lo), std::abs(hi)))) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(T, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double bracket_root(const std::function<double(double)>& f, double lo, double hi,
                    const Tolerances& tol) {
    double a = lo;
    double b = hi;
    if (a > b) std::swap(a, b);
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) == (fb < 0.0))
        throw NoSignChange("bracket_root: f(lo) and f(hi) have the same sign");

    for (int iter = 0; iter < 240; ++iter) {
        const double width = b - a;
        const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
        if (width <= tol.root_tol * scale) break;

        double x = 0.5 * (a + b);
        if (iter % 2 == 0 && fb != fa) {
            // secant through the bracket endpoints, kept off the edges
            const double s = b - fb * (b - a) / (fb - fa);
            if (s > a + 0.01 * width && s < b - 0.01 * width) x = s;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (fa < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

namespace {

struct PanelSum {
    double integral = 0.0;
    double l1 = 0.0;  // integral of |g|, used as the roundoff scale
};

// Composite Simpson over [t0, t0+len] with step <= target_step, Kahan
// compensated so half-million-point sums stay at the roundoff floor.
PanelSum simpson(const std::function<double(double)>& g, double t0, double len,
                 double target_step) {
    long n = std::lround(std::ceil(len / target_step));
    n = std::max<long>(n, 2);
    if (n % 2 != 0) ++n;
    const double h = len / static_cast<double>(n);

    double sum = 0.0, sc = 0.0, asum = 0.0, ac = 0.0;
    auto add = [](double& s, double& c, double term) {
        const double y = term - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    };
    for (long i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double v = g(t0 + h * static_cast<double>(i));
        add(sum, sc, w * v);
        add(asum, ac, w * std::abs(v));
    }
    return {sum * h / 3.0, asum * h / 3.0};
}

}  // namespace

double quad_semiinf(const std::function<double(double)>& g, const Tolerances& tol) {
    const double eps = std::numeric_limits<double>::epsilon();
    double step = 1.0 / 16.0;
    double T = 4.0;

    PanelSum acc = simpson(g, 0.0, T, step);
    double integral = acc.integral;
    double l1 = acc.l1;

    // Phase 1: extend the truncation until the appended tail is negligible.
    // An exponentially decaying integrand always gets there within the
    // doubling budget; anything else exhausts it and fails.
    bool tail_done = false;
    for (int k = 0; k < 11; ++k) {
        const PanelSum tail = simpson(g, T, T, step);
        T *= 2.0;
        integral += tail.integral;
        l1 += tail.l1;
        const double floor_ =
            0.1 * tol.quad_tol * std::abs(integral) + 8.0 * eps * l1 + 1e-305;
        if (tail.l1 <= floor_) {
            tail_done = true;
            break;
        }
    }
    if (!tail_done) throw NoConvergence("quad_semiinf: tail does not decay");

    // Phase 2: refine the step on the fixed interval [0, T].
    double prev = integral;
    for (int k = 0; k < 14; ++k) {
        step *= 0.5;
        const PanelSum ref = simpson(g, 0.0, T, step);
        l1 = ref.l1;
        const double bound = tol.quad_tol * std::abs(ref.integral) + 48.0 * eps * l1 + 1e-305;
        if (std::abs(ref.integral - prev) <= bound) return ref.integral;
        prev = ref.integral;
    }
    throw NoConvergence("quad_semiinf: step refinement stalled");
}

}  // namespace dipspec
