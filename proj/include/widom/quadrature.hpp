#pragma once

#include <functional>
#include <vector>

#include "widom/common.hpp"

namespace widom {

using Integrand = std::function<double(double)>;

/// One quadrature panel. Graded panel families are the building block for
/// integrands with endpoint or interior algebraic singularities.
struct Panel {
    enum class Grading { Uniform, GeometricLeft, GeometricRight };
    double lo = 0.0;
    double hi = 1.0;
    Grading grading = Grading::Uniform;
    int node_count = 8;

    /// Splits the panel into subinterval edges according to the grading tag.
    /// Geometric gradings refine toward the tagged endpoint with ratio 1/2
    /// down to `scale` (relative to the panel width).
    std::vector<double> subdivide(double scale = 1e-12) const;
};

/// Adaptive panel-bisection integration of `f` over [a, b].
/// `interior_edges` seeds panel boundaries at known kinks/feature points.
/// `noise_density` is the absolute evaluation noise of the integrand per
/// unit length; refinement stops once the defect reaches that floor (the
/// defect still enters the error estimate). The error estimate is the
/// accumulated whole-vs-halves defect. Throws Error("max-depth-exceeded")
/// if refinement stalls with the defect still far above `tol`.
ValueWithError integrate_adaptive(const Integrand& f, double a, double b, double tol,
                                  const std::vector<double>& interior_edges = {},
                                  int max_depth = 70, double noise_density = 0.0);

/// Non-adaptive integration on a fixed geometric panel family: panels
/// refine with ratio 1/2 toward every edge in `edges` (which must contain
/// the endpoints and any interior kinks). `gamma` controls the grading
/// depth for algebraic endpoint singularities of order gamma-1. Never
/// samples the edges themselves; immune to evaluation-noise feedback.
ValueWithError integrate_graded(const Integrand& f, const std::vector<double>& edges,
                                double gamma);

/// Result of a principal-value computation with symmetric exclusion windows.
struct PVResult {
    double value = 0.0;              ///< extrapolated eps -> 0 value
    std::vector<double> epsilons;    ///< strictly decreasing schedule
    std::vector<double> values;      ///< per-eps values
    double error = 0.0;              ///< extrapolation + quadrature estimate
    double order = 0.0;              ///< empirical convergence order in eps
};

/// Default exclusion schedule {2^-k}, k = 3..12.
std::vector<double> default_eps_schedule();

/// Geometric-sequence extrapolation (Aitken on the last points of the
/// schedule). `ratio` is the step ratio of the parameter sequence.
struct Extrapolation {
    double value = 0.0;
    double error = 0.0;
    double order = 0.0;
};
Extrapolation extrapolate_geometric(const std::vector<double>& params,
                                    const std::vector<double>& values);

/// Hilbert transform (1/pi) lim_{eps->0} int_{|eta-xi|>eps} u(eta)/(eta-xi).
/// The +s/-s contributions are paired before summation; `s_max` truncates
/// the integration range (choose it from the decay of u).
PVResult pv_hilbert(const Integrand& u, double xi, const std::vector<double>& eps_schedule,
                    double s_max, double tol, const std::vector<double>& features = {});

/// Ring-restricted double integral
///   I(eps) = int_{outer} int_{eps<|s|<s_hi} K(xi, xi+s) ds dxi
/// evaluated for every eps in the schedule in one pass. The two half-rings
/// s and -s are combined before summation (this cancellation is what makes
/// the eps -> 0 limit finite near the diagonal). Kernel signature:
/// K(xi_outer, xi_inner, s) with xi_inner = xi_outer + s.
struct RingValues {
    std::vector<double> epsilons;
    std::vector<double> values;  ///< I(eps_k) over (eps_k, s_hi)
    double quad_error = 0.0;
};
/// `per_s_seeds(s, out)` may append additional inner panel edges that depend
/// on the ring radius (e.g. the zero set of a(xi+s) - a(xi)); kinks of the
/// kernel must be seeded or the inner adaptivity degenerates.
RingValues pv_double_rings(const std::function<double(double, double, double)>& kernel,
                           const std::vector<double>& eps_schedule, double s_hi,
                           double outer_lo, double outer_hi,
                           const std::vector<double>& outer_seeds,
                           const std::vector<double>& inner_features, double tol,
                           int threads = 1,
                           const std::function<void(double, std::vector<double>&)>& per_s_seeds = {});

/// Gauss-Legendre rule of size n on [-1, 1] (computed once, cached).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_rule(int n);

/// Fixed-rule integral over [a, b] (no adaptivity).
double integrate_gauss(const Integrand& f, double a, double b, int n = 15);

}  // namespace widom
