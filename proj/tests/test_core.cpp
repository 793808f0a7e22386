#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dipspec/core.hpp"
#include "oracles.hpp"

using namespace dipspec;

TEST_CASE("sturm_count handles tiny and degenerate matrices") {
    CHECK(sturm_count({{0.0}, {}}, -1.0) == 0);
    CHECK(sturm_count({{0.0}, {}}, 1.0) == 1);
    // eigenvalues +-1 by symmetry
    CHECK(sturm_count({{0.0, 0.0}, {1.0}}, 0.0) == 1);
    CHECK(sturm_count({{0.0, 0.0}, {1.0}}, 1.5) == 2);
}

TEST_CASE("sturm_count matches a dense eigensolver on random instances") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const Tridiagonal T = oracles::random_tridiagonal(rng, 8);
        const auto ev = oracles::jacobi_eigenvalues(oracles::dense_from_tridiagonal(T));
        const double thr = 4.0 * (2.0 * oracles::uniform(rng) - 1.0);
        CHECK(sturm_count(T, thr) == oracles::count_below(ev, thr));
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(oracles::uniform(rng) * 19.0);
        const Tridiagonal T = oracles::random_tridiagonal(rng, n);
        const auto ev = oracles::jacobi_eigenvalues(oracles::dense_from_tridiagonal(T));
        const double thr = 4.0 * (2.0 * oracles::uniform(rng) - 1.0);
        CHECK(sturm_count(T, thr) == oracles::count_below(ev, thr));
    }
}

TEST_CASE("sturm_count is monotone in the threshold") {
    std::mt19937_64 rng(7);
    const Tridiagonal T = oracles::random_tridiagonal(rng, 12);
    int prev = 0;
    for (double thr = -5.0; thr <= 5.0; thr += 0.25) {
        const int c = sturm_count(T, thr);
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(prev == 12);
}

TEST_CASE("tridiag_eigenvalue agrees with the dense oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(oracles::uniform(rng) * 10.0);
        const Tridiagonal T = oracles::random_tridiagonal(rng, n);
        const auto ev = oracles::jacobi_eigenvalues(oracles::dense_from_tridiagonal(T));
        for (int k = 0; k < n; ++k)
            CHECK(tridiag_eigenvalue(T, k) == doctest::Approx(ev[k]).epsilon(1e-8));
    }
}

TEST_CASE("bracket_root basics") {
    const Tolerances tol;
    CHECK(bracket_root([](double x) { return x - 1.0; }, 0.0, 2.0, tol) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bracket_root([](double x) { return std::cos(x); }, 1.0, 2.0, tol) ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
}

TEST_CASE("bracket_root is invariant under swapping the endpoints") {
    auto f = [](double x) { return std::sin(x) - 0.4; };
    const double a = bracket_root(f, 0.0, 1.0);
    const double b = bracket_root(f, 1.0, 0.0);
    CHECK(a == b);
}

TEST_CASE("bracket_root rejects same-sign endpoints") {
    CHECK_THROWS_AS(bracket_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    NoSignChange);
}

TEST_CASE("quad_semiinf on standard integrands") {
    CHECK(quad_semiinf([](double t) { return std::exp(-t); }) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(quad_semiinf([](double t) { return t * std::exp(-t * t); }) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // equals the zero-order modified Bessel value at argument 1
    CHECK(quad_semiinf([](double t) { return std::exp(-std::cosh(t)); }) ==
          doctest::Approx(oracles::k0_series(1.0)).epsilon(1e-11));
}

TEST_CASE("quad_semiinf rejects non-decaying integrands") {
    CHECK_THROWS_AS(quad_semiinf([](double) { return 1.0; }), NoConvergence);
}
