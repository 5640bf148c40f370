#pragma once

#include <vector>

#include "widom/common.hpp"

namespace widom {

/// Real polynomial with ascending coefficients; exact calculus helpers for
/// the variation lemmas.
class RealPolynomial {
public:
    RealPolynomial() : coeffs_{0.0} {}
    explicit RealPolynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double eval(double x) const;
    RealPolynomial derivative() const;
    RealPolynomial derivative(int k) const;

    /// All real roots (companion-matrix eigenvalues + one Newton polish).
    std::vector<double> real_roots() const;

    /// L^p norm on [lo, hi]; p may be infinite (sup via critical points).
    double lp_norm(double p, double lo, double hi) const;

    /// max_{1<=k<=N} of the L^p norm of the k-th derivative on [lo, hi],
    /// i.e. the W^{N-1,p} norm of the first derivative.
    double deriv_sobolev_norm(int N, double p, double lo, double hi) const;

private:
    std::vector<double> coeffs_;
};

/// Distinct real roots of p' inside I, deduplicated within 1e-10 |I|.
std::vector<double> poly_critical_points(const RealPolynomial& p, double lo, double hi);

/// Exact total variation of |p|^gamma on [lo, hi]: split at roots of p and
/// p', sum monotone-piece increments.
double variation_abs_power(const RealPolynomial& p, double gamma, double lo, double hi);

/// Exact int_I |p'(x)| |p(x)|^{gamma-1} dx = Var[|p|^gamma; I] / gamma
/// (piecewise antiderivative |p|^gamma / gamma).
double weighted_derivative_integral(const RealPolynomial& p, double gamma, double lo, double hi);

}  // namespace widom
