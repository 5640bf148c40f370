#include "widom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace widom {

namespace {

GaussRule make_gauss_rule(int n) {
    // Newton iteration on Legendre polynomials; standard initial guesses.
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                // one extra polish step after convergence
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_rule(n)).first;
    return it->second;
}

double integrate_gauss(const Integrand& f, double a, double b, int n) {
    const GaussRule& r = gauss_rule(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    KahanSum s;
    for (int i = 0; i < n; ++i) s.add(r.weights[i] * f(c + h * r.nodes[i]));
    return h * s.value();
}

std::vector<double> Panel::subdivide(double scale) const {
    std::vector<double> edges;
    double w = hi - lo;
    switch (grading) {
        case Grading::Uniform: {
            int n = std::max(1, node_count);
            for (int i = 0; i <= n; ++i) edges.push_back(lo + w * i / n);
            break;
        }
        case Grading::GeometricLeft: {
            edges.push_back(lo);
            double t = scale;
            while (t < 1.0) {
                edges.push_back(lo + w * t);
                t *= 2.0;
            }
            edges.push_back(hi);
            break;
        }
        case Grading::GeometricRight: {
            edges.push_back(lo);
            std::vector<double> rev;
            double t = scale;
            while (t < 1.0) {
                rev.push_back(hi - w * t);
                t *= 2.0;
            }
            std::reverse(rev.begin(), rev.end());
            for (double e : rev) edges.push_back(e);
            edges.push_back(hi);
            break;
        }
    }
    return edges;
}

namespace {

struct AdaptiveState {
    const Integrand* f;
    double tol;
    double total_width;
    int max_depth;
    double noise_density;
    KahanSum value;
    KahanSum error;
    double stalled_error = 0.0;
    long evals = 0;
    static constexpr long kEvalBudget = 6000000;

    void recurse(double a, double b, double whole, int depth) {
        double m = 0.5 * (a + b);
        double left = integrate_gauss(*f, a, m);
        double right = integrate_gauss(*f, m, b);
        evals += 30;
        double refined = left + right;
        double defect = std::abs(whole - refined);
        double share = tol * (b - a) / total_width;
        // machine-noise floor of the two 15-point rules plus the caller's
        // declared evaluation noise; below it the defect is not signal
        double floor = 1e-15 * (std::abs(left) + std::abs(right)) +
                       noise_density * (b - a) + 1e-300;
        if (defect <= share + floor || depth >= max_depth || evals > kEvalBudget) {
            value.add(refined);
            error.add(defect);
            if ((depth >= max_depth || evals > kEvalBudget) && defect > 100.0 * (share + floor)) {
                stalled_error += defect;
#ifdef WIDOM_DEBUG_STALL
                fprintf(stderr, "STALL depth=%d evals=%ld [%.17g,%.17g] defect=%.3g share=%.3g\n",
                        depth, evals, a, b, defect, share);
#endif
            }
            return;
        }
        recurse(a, m, left, depth + 1);
        recurse(m, b, right, depth + 1);
    }
};

}  // namespace

ValueWithError integrate_adaptive(const Integrand& f, double a, double b, double tol,
                                  const std::vector<double>& interior_edges, int max_depth) {
    if (!(b > a)) return {0.0, 0.0};
    std::vector<double> edges;
    edges.push_back(a);
    for (double e : interior_edges)
        if (e > a && e < b) edges.push_back(e);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    AdaptiveState st;
    st.f = &f;
    st.tol = tol;
    st.total_width = b - a;
    st.max_depth = max_depth;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double whole = integrate_gauss(f, edges[i], edges[i + 1]);
        st.recurse(edges[i], edges[i + 1], whole, 0);
    }
    double err = st.error.value();
    if (st.stalled_error > std::max(1e3 * tol, 1e-9 * std::abs(st.value.value())))
        throw Error("max-depth-exceeded",
                    "adaptive refinement stalled; residual defect " + std::to_string(err));
    return {st.value.value(), err};
}

std::vector<double> default_eps_schedule() {
    std::vector<double> eps;
    for (int k = 3; k <= 12; ++k) eps.push_back(std::ldexp(1.0, -k));
    return eps;
}

Extrapolation extrapolate_geometric(const std::vector<double>& params,
                                    const std::vector<double>& values) {
    Extrapolation ex;
    std::size_t n = values.size();
    if (n == 0) return ex;
    ex.value = values.back();
    if (n == 1) {
        ex.error = std::abs(values.back());
        return ex;
    }
    if (n == 2) {
        ex.value = values[1];
        ex.error = std::abs(values[1] - values[0]);
        return ex;
    }
    auto aitken = [&](std::size_t last) -> double {
        double d0 = values[last - 1] - values[last - 2];
        double d1 = values[last] - values[last - 1];
        double den = d1 - d0;
        if (den == 0.0) return values[last];
        double corr = d1 * d1 / den;
        // Guard against noise-dominated differences producing wild jumps.
        if (std::abs(corr) > 10.0 * std::abs(d1) + 1e-300) return values[last];
        return values[last] - corr;
    };
    double e1 = aitken(n - 1);
    double e0 = (n >= 4) ? aitken(n - 2) : values[n - 1];
    ex.value = e1;
    ex.error = std::abs(e1 - e0) + 1e-16 * std::abs(e1);
    double d0 = values[n - 2] - values[n - 3];
    double d1 = values[n - 1] - values[n - 2];
    if (d0 != 0.0 && d1 != 0.0 && params.size() == values.size()) {
        double r = params[n - 1] / params[n - 2];
        if (r > 0.0 && r != 1.0) ex.order = std::log(std::abs(d1 / d0)) / std::log(r);
    }
    return ex;
}

PVResult pv_hilbert(const Integrand& u, double xi, const std::vector<double>& eps_schedule,
                    double s_max, double tol, const std::vector<double>& features) {
    if (eps_schedule.empty()) throw Error("invalid-argument", "empty eps schedule");
    for (std::size_t i = 1; i < eps_schedule.size(); ++i)
        if (!(eps_schedule[i] < eps_schedule[i - 1]))
            throw Error("invalid-argument", "eps schedule must be strictly decreasing");

    auto paired = [&](double s) { return (u(xi + s) - u(xi - s)) / s; };

    // Segment edges: every eps in the schedule, then geometric doubling up
    // to s_max, with seeds at |feature - xi| distances.
    std::vector<double> edges(eps_schedule.rbegin(), eps_schedule.rend());
    double top = eps_schedule.front();
    while (top < s_max) {
        top = std::min(top * 2.0, s_max);
        edges.push_back(top);
    }
    std::vector<double> seeds;
    for (double fp : features) {
        double d = std::abs(fp - xi);
        if (d > edges.front() && d < s_max) seeds.push_back(d);
    }

    PVResult res;
    res.epsilons = eps_schedule;
    KahanSum running;
    double quad_err = 0.0;
    double seg_tol = tol / static_cast<double>(edges.size());
    std::vector<double> cumulative(edges.size(), 0.0);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        std::vector<double> inner;
        for (double sd : seeds)
            if (sd > edges[i] && sd < edges[i + 1]) inner.push_back(sd);
        ValueWithError seg = integrate_adaptive(paired, edges[i], edges[i + 1], seg_tol, inner);
        running.add(seg.value);
        quad_err += seg.error;
        cumulative[i + 1] = running.value();
    }
    // I(eps_k) = total - cumulative part below eps_k
    double total = running.value();
    res.values.resize(eps_schedule.size());
    for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
        double eps = eps_schedule[k];
        // find index of eps in edges (edges are ascending, first entries are schedule)
        auto it = std::lower_bound(edges.begin(), edges.end(), eps * (1.0 - 1e-14));
        std::size_t idx = static_cast<std::size_t>(it - edges.begin());
        res.values[k] = (total - cumulative[idx]) / M_PI;
    }

    std::vector<double> params(eps_schedule.begin(), eps_schedule.end());
    Extrapolation ex = extrapolate_geometric(params, res.values);
    res.value = ex.value;
    res.order = ex.order;
    res.error = ex.error + quad_err / M_PI;
    return res;
}

RingValues pv_double_rings(const std::function<double(double, double, double)>& kernel,
                           const std::vector<double>& eps_schedule, double s_hi, double outer_lo,
                           double outer_hi, const std::vector<double>& outer_seeds,
                           const std::vector<double>& inner_features, double tol, int threads,
                           const std::function<void(double, std::vector<double>&)>& per_s_seeds) {
    if (eps_schedule.empty()) throw Error("invalid-argument", "empty eps schedule");
    for (std::size_t i = 1; i < eps_schedule.size(); ++i)
        if (!(eps_schedule[i] < eps_schedule[i - 1]))
            throw Error("invalid-argument", "eps schedule must be strictly decreasing");

    // s-edges: schedule values ascending, then geometric up to s_hi.
    std::vector<double> edges(eps_schedule.rbegin(), eps_schedule.rend());
    double top = eps_schedule.front();
    while (top < s_hi) {
        top = std::min(top * std::sqrt(2.0), s_hi);
        if (top > edges.back() * (1.0 + 1e-12)) edges.push_back(top);
    }
    if (edges.back() < s_hi) edges.push_back(s_hi);

    auto inner_integral = [&](double s) -> ValueWithError {
        std::vector<double> seeds = outer_seeds;
        for (double fp : inner_features) {
            seeds.push_back(fp - s);
            seeds.push_back(fp + s);
        }
        if (per_s_seeds) per_s_seeds(s, seeds);
        auto f = [&](double xi) { return kernel(xi, xi + s, s) + kernel(xi, xi - s, -s); };
        // the s-integration carries total weight ~ s_hi, so each inner
        // integral must be accurate to tol / s_hi
        return integrate_adaptive(f, outer_lo, outer_hi, tol / s_hi, seeds);
    };

    // Adaptive bisection per s-segment; segments are independent tasks.
    struct SegResult {
        double value = 0.0;
        double error = 0.0;
    };
    std::function<SegResult(double, double, double, int)> seg_recurse =
        [&](double a, double b, double whole_est, int depth) -> SegResult {
        const GaussRule& r = gauss_rule(7);
        auto rule_on = [&](double lo, double hi) {
            double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
            KahanSum acc;
            double errs = 0.0;
            for (int i = 0; i < 7; ++i) {
                ValueWithError v = inner_integral(c + h * r.nodes[i]);
                acc.add(r.weights[i] * v.value);
                errs += std::abs(r.weights[i]) * v.error;
            }
            return ValueWithError{h * acc.value(), h * errs};
        };
        double m = 0.5 * (a + b);
        ValueWithError left = rule_on(a, m);
        ValueWithError right = rule_on(m, b);
        double refined = left.value + right.value;
        double defect = std::abs(whole_est - refined);
        double share = tol * (b - a) / s_hi;
        if (defect <= share + 1e-15 * std::abs(refined) || depth >= 28) {
            return {refined, defect + left.error + right.error};
        }
        SegResult l = seg_recurse(a, m, left.value, depth + 1);
        SegResult rr = seg_recurse(m, b, right.value, depth + 1);
        return {l.value + rr.value, l.error + rr.error};
    };

    std::size_t nseg = edges.size() - 1;
    std::vector<SegResult> segs(nseg);
    std::function<SegResult(std::size_t)> task = [&](std::size_t i) -> SegResult {
        const GaussRule& r = gauss_rule(7);
        double a = edges[i], b = edges[i + 1];
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        KahanSum acc;
        for (int q = 0; q < 7; ++q) acc.add(r.weights[q] * inner_integral(c + h * r.nodes[q]).value);
        return seg_recurse(a, b, h * acc.value(), 0);
    };
    segs = parallel_map<SegResult>(nseg, threads, task);

    RingValues rv;
    rv.epsilons = eps_schedule;
    // cumulative from the top down: I(eps) = sum of segments above eps
    std::vector<double> cum(edges.size(), 0.0);
    KahanSum run;
    double err = 0.0;
    for (std::size_t i = 0; i < nseg; ++i) {
        run.add(segs[i].value);
        err += segs[i].error;
        cum[i + 1] = run.value();
    }
    double total = run.value();
    rv.values.resize(eps_schedule.size());
    for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
        auto it = std::lower_bound(edges.begin(), edges.end(), eps_schedule[k] * (1.0 - 1e-14));
        std::size_t idx = static_cast<std::size_t>(it - edges.begin());
        rv.values[k] = total - cum[idx];
    }
    rv.quad_error = err;
    return rv;
}

}  // namespace widom
