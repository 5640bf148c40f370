#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "widom/common.hpp"

namespace widom {

/// The function applied to the operator: analytic (polynomial / exp),
/// C^{1,kappa} signed-power, or a cusp power c*|t-x0|^gamma (optionally
/// modulated by a smooth polynomial factor).
class TestFunction {
public:
    enum class Class { Analytic, C1Holder, Cusp };

    static TestFunction affine(double slope, double intercept);
    static TestFunction square();
    static TestFunction polynomial(std::vector<double> coeffs);
    static TestFunction exponential();
    /// c * |t - x0|^gamma, gamma in (0, 1].
    static TestFunction cusp_power(double gamma, double x0, double amplitude = 1.0);
    /// c * s(t) * |t - x0|^gamma with a smooth polynomial factor s.
    static TestFunction cusp_product(std::vector<double> smooth_coeffs, double gamma, double x0,
                                     double amplitude = 1.0);
    /// c * |t - x0|^{1+kappa}; its derivative is kappa-Hoelder continuous.
    static TestFunction holder_power(double kappa, double x0, double amplitude = 1.0);

    /// k-th derivative at t. For cusp class, k >= 1 at the cusp raises
    /// "evaluation-at-cusp" (downstream quadratures must never sample it).
    double eval(double t, int k = 0) const;
    double operator()(double t) const { return eval(t, 0); }

    Class cls() const;
    double gamma() const;  ///< cusp exponent (cusp class), 1+kappa (holder)
    double x0() const;
    double kappa() const;  ///< holder exponent (c1-holder class)
    double amplitude() const;
    bool has_closed_form_U() const;
    bool has_closed_form_V() const;
    /// Degree <= 2 polynomial coefficients, empty otherwise.
    const std::vector<double>& poly_coeffs() const;
    bool is_exp() const;
    bool is_abs_cusp() const;    ///< pure power with gamma == 1
    bool is_pure_power() const;  ///< cusp power without a smooth factor

    std::string describe() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit TestFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Cusp seminorm max_{0<=k<=n} sup_{x != x0} |f^(k)(x)| |x-x0|^{k-gamma}.
/// Exact for pure powers; otherwise a graded-grid estimate around the cusp.
/// Throws "infinite-seminorm" if the estimate diverges under range growth.
double cusp_seminorm(const TestFunction& f, int n);

/// Lower-biased Hoelder seminorm sup |g(x)-g(y)|/|x-y|^kappa over sampled
/// pairs at geometric separations 2^-j, j = -4..52, around random centers.
double holder_seminorm(const std::function<double(double)>& g, double kappa,
                       std::uint64_t seed = 1234, int n_centers = 48,
                       const std::vector<double>& extra_centers = {});
double holder_seminorm(const TestFunction& g, double kappa, std::uint64_t seed = 1234);

}  // namespace widom
