#include "widom/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "widom/quadrature.hpp"

namespace widom {

namespace {

constexpr double kMachineRel = 4e-16;

// E(x) = sum_{k>=1} x^k / (k * k!), entire; V(s1,s2;exp) = e^{s2} E(s1-s2).
double ein_series(double x) {
    double term = x;  // k = 1
    double sum = x;
    for (int k = 2; k <= 60; ++k) {
        term *= x / k;
        double add = term / k;
        sum += add;
        if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-30)) break;
    }
    return sum;
}

// cusp preimage t* of x0 on the chord (1-t)s1 + t s2, or -1 if outside (0,1)
double cusp_preimage(const TestFunction& g, double s1, double s2) {
    if (g.cls() == TestFunction::Class::Analytic) return -1.0;
    if (s1 == s2) return -1.0;
    double t = (g.x0() - s1) / (s2 - s1);
    return (t > 0.0 && t < 1.0) ? t : -1.0;
}

double quad_tol(double s1, double s2) { return 1e-11 * (1.0 + std::abs(s1) + std::abs(s2)); }

FunctionalValue closed_U(const TestFunction& g, double s1, double s2, bool& ok) {
    ok = true;
    double d = s1 - s2;
    if (g.cls() == TestFunction::Class::Analytic) {
        if (g.is_exp())
            return {std::exp(s1) * ein_series(-d) + std::exp(s2) * ein_series(d),
                    EvalMethod::ClosedForm, kMachineRel * (std::exp(std::max(s1, s2)) + 1.0)};
        const auto& c = g.poly_coeffs();
        if (c.size() <= 3) {
            double c2 = c.size() == 3 ? c[2] : 0.0;
            double v = -c2 * d * d;
            return {v, EvalMethod::ClosedForm, kMachineRel * std::abs(v)};
        }
    }
    if (g.is_abs_cusp()) {
        double a1 = s1 - g.x0(), a2 = s2 - g.x0();
        if (a1 * a2 >= 0.0) return {0.0, EvalMethod::ClosedForm, 0.0};
        double A = std::abs(a1), B = std::abs(a2), D = A + B;
        double v = g.amplitude() * 2.0 * (A * std::log(A / D) + B * std::log(B / D));
        return {v, EvalMethod::ClosedForm, kMachineRel * (std::abs(v) + D)};
    }
    ok = false;
    return {};
}

FunctionalValue closed_V(const TestFunction& g, double s1, double s2, bool& ok) {
    ok = true;
    double d = s1 - s2;
    if (g.cls() == TestFunction::Class::Analytic) {
        if (g.is_exp())
            return {std::exp(s2) * ein_series(d), EvalMethod::ClosedForm,
                    kMachineRel * std::exp(s2) * (1.0 + std::abs(d))};
        const auto& c = g.poly_coeffs();
        if (c.size() <= 3) {
            double c1 = c.size() >= 2 ? c[1] : 0.0;
            double c2 = c.size() == 3 ? c[2] : 0.0;
            double v = c1 * d + c2 * (0.5 * d * d + 2.0 * s2 * d);
            return {v, EvalMethod::ClosedForm, kMachineRel * (std::abs(v) + d * d)};
        }
    }
    if (g.is_abs_cusp()) {
        double a1 = s1 - g.x0(), a2 = s2 - g.x0();
        if (a1 * a2 >= 0.0) {
            double sgn = (a1 + a2 >= 0.0) ? 1.0 : -1.0;
            if (a1 == 0.0 && a2 == 0.0) sgn = 0.0;
            double v = g.amplitude() * sgn * d;
            return {v, EvalMethod::ClosedForm, kMachineRel * std::abs(v)};
        }
        double A = std::abs(a1), B = std::abs(a2), D = A + B;
        double v = g.amplitude() * (A - B + 2.0 * B * std::log(B / D));
        return {v, EvalMethod::ClosedForm, kMachineRel * (std::abs(v) + D)};
    }
    ok = false;
    return {};
}

}  // namespace

FunctionalValue eval_U(const TestFunction& g, double s1, double s2, EvalMethod force) {
    if (s1 == s2) return {0.0, EvalMethod::ClosedForm, 0.0};
    if (force == EvalMethod::Auto || force == EvalMethod::ClosedForm) {
        bool ok = false;
        FunctionalValue v = closed_U(g, s1, s2, ok);
        if (ok) return v;
        if (force == EvalMethod::ClosedForm)
            throw Error("no-closed-form", "U has no closed form for " + g.describe());
    }
    bool analytic = g.cls() == TestFunction::Class::Analytic;
    bool want_parts = force == EvalMethod::PartsForm || (force == EvalMethod::Auto && analytic);
    if (want_parts) {
        if (!analytic && cusp_preimage(g, s1, s2) >= 0.0)
            throw Error("nonintegrable-singularity",
                        "parts form needs integrable g'' on the chord");
        double d = s1 - s2;
        auto f = [&](double t) {
            if (t <= 0.0 || t >= 1.0) return 0.0;  // the weight vanishes there
            double w = (1.0 - t) * s1 + t * s2;
            return g.eval(w, 2) * (t * std::log(t) + (1.0 - t) * std::log(1.0 - t));
        };
        std::vector<double> edges;
        double ts = cusp_preimage(g, s1, s2);
        if (ts >= 0.0) edges.push_back(ts);
        ValueWithError q = integrate_adaptive(f, 0.0, 1.0, quad_tol(s1, s2), edges);
        return {d * d * q.value, EvalMethod::PartsForm, d * d * q.error};
    }
    // direct graded quadrature; integrand ~ t^{gamma-1} when the cusp sits
    // at an endpoint value, so panels refine geometrically toward 0 and 1
    double gs1 = g(s1), gs2 = g(s2);
    auto f = [&](double t) {
        if (t <= 0.0 || t >= 1.0) return 0.0;
        double w = (1.0 - t) * s1 + t * s2;
        return (g(w) - ((1.0 - t) * gs1 + t * gs2)) / (t * (1.0 - t));
    };
    std::vector<double> edges;
    double ts = cusp_preimage(g, s1, s2);
    if (ts >= 0.0) edges.push_back(ts);
    edges.push_back(0.5);
    ValueWithError q = integrate_adaptive(f, 0.0, 1.0, quad_tol(s1, s2), edges);
    return {q.value, EvalMethod::GradedQuadrature, q.error};
}

FunctionalValue eval_V(const TestFunction& g, double s1, double s2, EvalMethod force) {
    if (s1 == s2) return {0.0, EvalMethod::ClosedForm, 0.0};
    if (force == EvalMethod::Auto || force == EvalMethod::ClosedForm) {
        bool ok = false;
        FunctionalValue v = closed_V(g, s1, s2, ok);
        if (ok) return v;
        if (force == EvalMethod::ClosedForm)
            throw Error("no-closed-form", "V has no closed form for " + g.describe());
    }
    bool smooth1 = g.cls() == TestFunction::Class::Analytic ||
                   g.cls() == TestFunction::Class::C1Holder;
    bool want_parts = force == EvalMethod::PartsForm || (force == EvalMethod::Auto && smooth1);
    if (want_parts) {
        if (!smooth1)
            throw Error("nonintegrable-singularity", "parts form needs bounded g' on the chord");
        auto f = [&](double t) {
            if (t >= 1.0) return 0.0;
            double w = (1.0 - t) * s1 + t * s2;
            return std::log(1.0 - t) * g.eval(w, 1);
        };
        std::vector<double> edges;
        double ts = cusp_preimage(g, s1, s2);
        if (ts >= 0.0) edges.push_back(ts);
        ValueWithError q = integrate_adaptive(f, 0.0, 1.0, quad_tol(s1, s2), edges);
        return {(s2 - s1) * q.value, EvalMethod::PartsForm, std::abs(s2 - s1) * q.error};
    }
    double gs2 = g(s2);
    auto f = [&](double t) {
        if (t >= 1.0) return 0.0;
        double w = (1.0 - t) * s1 + t * s2;
        return (g(w) - gs2) / (1.0 - t);
    };
    std::vector<double> edges;
    double ts = cusp_preimage(g, s1, s2);
    if (ts >= 0.0) edges.push_back(ts);
    edges.push_back(0.5);
    ValueWithError q = integrate_adaptive(f, 0.0, 1.0, quad_tol(s1, s2), edges);
    return {q.value, EvalMethod::GradedQuadrature, q.error};
}

FunctionalValue eval_Y(const TestFunction& g, double s1, double s2) {
    double scale = 1.0 + std::abs(s1) + std::abs(s2);
    if (std::abs(s1 - s2) > 1e-6 * scale) {
        double v = (g(s1) - g(s2)) / (s1 - s2);
        double err = kMachineRel * (std::abs(g(s1)) + std::abs(g(s2))) / std::abs(s1 - s2);
        return {v, EvalMethod::ClosedForm, err};
    }
    if (s1 == s2) return {g.eval(s1, 1), EvalMethod::ClosedForm, 0.0};
    double ts = cusp_preimage(g, s1, s2);
    auto f = [&](double t) { return g.eval((1.0 - t) * s1 + t * s2, 1); };
    if (ts >= 0.0) {
        // cusp on the segment: graded quadrature around the preimage
        ValueWithError q = integrate_adaptive(f, 0.0, 1.0, 1e-12, {ts});
        return {q.value, EvalMethod::GradedQuadrature, q.error};
    }
    // midpoint rule with doubling, never sampling the endpoints
    double prev = 0.0;
    for (int n = 16;; n *= 2) {
        KahanSum s;
        for (int i = 0; i < n; ++i) s.add(f((i + 0.5) / n));
        double v = s.value() / n;
        if (n > 16 && std::abs(v - prev) < 1e-13 * (std::abs(v) + 1.0))
            return {v, EvalMethod::GradedQuadrature, std::abs(v - prev)};
        if (n >= 4096) return {v, EvalMethod::GradedQuadrature, std::abs(v - prev)};
        prev = v;
    }
}

FunctionalValue eval_X(const TestFunction& f, double s1, double s2) {
    if (f.cls() == TestFunction::Class::Cusp && std::abs(s1 - f.x0()) < 1e-300)
        throw Error("evaluation-at-cusp", "X requires s1 != x0");
    FunctionalValue y = eval_Y(f, s1, s2);
    double fp = f.eval(s1, 1);
    return {y.value - fp, y.method, y.error + kMachineRel * std::abs(fp)};
}

}  // namespace widom
