#include <doctest.h>

#include <cmath>

#include <limits>
#include "widom/polytools.hpp"

using namespace widom;

TEST_CASE("critical points") {
    CHECK(poly_critical_points(RealPolynomial({0, 0, 1}), -1, 1) == std::vector<double>{0.0});
    auto cp = poly_critical_points(RealPolynomial({0, -3, 0, 1}), -2, 2);  // xi^3 - 3 xi
    REQUIRE(cp.size() == 2);
    CHECK(cp[0] == doctest::Approx(-1.0));
    CHECK(cp[1] == doctest::Approx(1.0));
    CHECK(poly_critical_points(RealPolynomial({1, 2}), -5, 5).empty());
}

TEST_CASE("variation of |p|^gamma") {
    CHECK(variation_abs_power(RealPolynomial({0, 1}), 0.5, -1, 1) == doctest::Approx(2.0));
    CHECK(variation_abs_power(RealPolynomial({-1, 0, 1}), 1.0, -2, 2) == doctest::Approx(8.0));
    // homogeneity |c p|^gamma
    RealPolynomial p({0.3, -1.0, 0.0, 0.5});
    double v1 = variation_abs_power(p, 0.5, -2, 2);
    RealPolynomial p4({4 * 0.3, -4.0, 0.0, 4 * 0.5});
    CHECK(variation_abs_power(p4, 0.5, -2, 2) == doctest::Approx(2.0 * v1).epsilon(1e-12));
}

TEST_CASE("variation is additive over splits") {
    RealPolynomial p({0.1, -0.7, -0.5, 1.0});
    double whole = variation_abs_power(p, 0.7, -2, 2);
    double split = variation_abs_power(p, 0.7, -2, 0.3) + variation_abs_power(p, 0.7, 0.3, 2);
    CHECK(whole == doctest::Approx(split).epsilon(1e-12));
}

TEST_CASE("weighted derivative integral") {
    // int_{-1}^{1} |xi|^{-1/2} dxi = 4
    CHECK(weighted_derivative_integral(RealPolynomial({0, 1}), 0.5, -1, 1) ==
          doctest::Approx(4.0));
    // no roots in I, gamma = 1: reduces to Var[p; I]
    RealPolynomial q({5.0, 1.0, 1.0});  // positive on [0, 1]
    CHECK(weighted_derivative_integral(q, 1.0, 0, 1) ==
          doctest::Approx(variation_abs_power(q, 1.0, 0, 1)).epsilon(1e-12));
}

TEST_CASE("chord bound through critical point counting") {
    // ||a(e1)|^g - |a(e2)|^g| <= ||a^{(N)}||_p^g |I|^{g(N-1/p)} when I holds
    // at least N-1 critical points
    Rng rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        int N = 2 + (trial % 2);  // 2 or 3
        double lo = rng.uniform(-2.0, 0.0), hi = lo + rng.uniform(0.5, 2.5);
        // build p' with N-1 roots inside the interval, then integrate
        std::vector<double> pd{rng.uniform(-2.0, 2.0)};
        if (pd[0] == 0.0) pd[0] = 1.0;
        for (int r = 0; r < N - 1; ++r) {
            double root = rng.uniform(lo, hi);
            std::vector<double> next(pd.size() + 1, 0.0);
            for (std::size_t i = 0; i < pd.size(); ++i) {
                next[i + 1] += pd[i];
                next[i] -= root * pd[i];
            }
            pd = next;
        }
        std::vector<double> pc(pd.size() + 1, 0.0);
        pc[0] = rng.uniform(-1.0, 1.0);
        for (std::size_t i = 0; i < pd.size(); ++i) pc[i + 1] = pd[i] / (i + 1.0);
        RealPolynomial p(pc);
        double gamma = rng.uniform(0.2, 1.0);
        for (double pp : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
            double nrm = p.derivative(N).lp_norm(pp, lo, hi);
            double rhs = std::pow(nrm, gamma) *
                         std::pow(hi - lo, gamma * (N - (std::isinf(pp) ? 0.0 : 1.0 / pp)));
            double e1 = rng.uniform(lo, hi), e2 = rng.uniform(lo, hi);
            double lhs = std::abs(std::pow(std::abs(p.eval(e1)), gamma) -
                                  std::pow(std::abs(p.eval(e2)), gamma));
            CHECK(lhs <= rhs * (1.0 + 1e-9) + 1e-12);
            // variation bound with the (N+1)^2 prefactor on the same interval
            double var = variation_abs_power(p, gamma, lo, hi);
            CHECK(var <= (N + 1.0) * (N + 1.0) * rhs * (1.0 + 1e-9) + 1e-12);
        }
    }
}
