#include <doctest.h>

#include <cmath>

#include "widom/quadrature.hpp"

using namespace widom;

TEST_CASE("adaptive integration of log endpoint weights") {
    // int_0^1 log(1-t) dt = -1  (the universal constant of the V parts form)
    auto f = [](double t) { return std::log(1.0 - t); };
    ValueWithError v = integrate_adaptive(f, 0.0, 1.0, 1e-12);
    CHECK(std::abs(v.value + 1.0) < 1e-10);

    // int_0^1 (t log t + (1-t) log(1-t)) dt = -1/2
    auto g = [](double t) { return t * std::log(t) + (1.0 - t) * std::log(1.0 - t); };
    ValueWithError w = integrate_adaptive(g, 0.0, 1.0, 1e-12, {0.5});
    CHECK(std::abs(w.value + 0.5) < 1e-10);
}

TEST_CASE("adaptive integration with an algebraic endpoint singularity") {
    // int_0^1 t^{-1/2} dt = 2
    auto f = [](double t) { return 1.0 / std::sqrt(t); };
    ValueWithError v = integrate_adaptive(f, 0.0, 1.0, 1e-10);
    CHECK(std::abs(v.value - 2.0) < 1e-8);
    CHECK(v.error < 1e-6);
}

TEST_CASE("error estimate tracks refinement") {
    auto f = [](double t) { return std::exp(-t * t); };
    ValueWithError v = integrate_adaptive(f, -6.0, 6.0, 1e-12);
    CHECK(std::abs(v.value - std::sqrt(M_PI)) < 1e-11);
}

TEST_CASE("pv_hilbert of the cauchy bump") {
    // residue calculus: H[1/(1+x^2)](xi) = -xi/(1+xi^2) in this convention
    auto u = [](double x) { return 1.0 / (1.0 + x * x); };
    for (double xi : {0.0, 0.5, -0.5, 1.0, -1.0, 3.0, -3.0}) {
        PVResult r = pv_hilbert(u, xi, default_eps_schedule(), 2e5, 1e-10, {0.0});
        double expect = -xi / (1.0 + xi * xi);
        CHECK(std::abs(r.value - expect) < 1e-6);
    }
}

TEST_CASE("pv_hilbert of an even function at the origin vanishes") {
    auto u = [](double x) { return std::exp(-x * x); };
    PVResult r = pv_hilbert(u, 0.0, default_eps_schedule(), 50.0, 1e-11);
    CHECK(std::abs(r.value) < 1e-12);
}

TEST_CASE("pv_hilbert with an odd kernel factor") {
    // u(eta) = eta/(1+eta^2)^2 at xi = 0: (1/pi) int u(eta)/eta = 1/2
    auto u = [](double x) { return x / sqr(1.0 + x * x); };
    PVResult r = pv_hilbert(u, 0.0, default_eps_schedule(), 2e4, 1e-10);
    CHECK(std::abs(r.value - 0.5) < 1e-6);
}

TEST_CASE("pv extrapolation is internally consistent") {
    auto u = [](double x) { return 1.0 / (1.0 + x * x); };
    PVResult r = pv_hilbert(u, 1.0, default_eps_schedule(), 2e5, 1e-10);
    REQUIRE(r.values.size() >= 2);
    for (std::size_t i = 1; i < r.epsilons.size(); ++i) CHECK(r.epsilons[i] < r.epsilons[i - 1]);
    // per-eps values converge with observable order >= 1
    CHECK(r.order >= 0.9);
}

TEST_CASE("pv_double_rings: zero and antisymmetric kernels") {
    auto zero = [](double, double, double) { return 0.0; };
    RingValues rv = pv_double_rings(zero, {0.5, 0.25}, 4.0, -2.0, 2.0, {}, {}, 1e-10);
    CHECK(rv.values[0] == 0.0);
    CHECK(rv.values[1] == 0.0);

    // kernel antisymmetric under exchange of the two points integrates to ~0
    auto anti = [](double xo, double xi, double) { return (xi - xo) * std::exp(-xo * xo - xi * xi); };
    RingValues ra = pv_double_rings(anti, {0.125}, 30.0, -15.0, 15.0, {}, {}, 1e-10);
    CHECK(std::abs(ra.values[0]) < 1e-8);
}

TEST_CASE("geometric extrapolation recovers the limit") {
    std::vector<double> eps, vals;
    for (int k = 3; k <= 10; ++k) {
        double e = std::ldexp(1.0, -k);
        eps.push_back(e);
        vals.push_back(2.5 + 0.7 * e);  // first order in eps
    }
    Extrapolation ex = extrapolate_geometric(eps, vals);
    CHECK(std::abs(ex.value - 2.5) < 1e-12);
    CHECK(std::abs(ex.order - 1.0) < 0.05);
}
