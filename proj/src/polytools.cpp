#include "widom/polytools.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "widom/quadrature.hpp"

namespace widom {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_ = {0.0};
}

double RealPolynomial::eval(double x) const {
    double v = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
    return v;
}

RealPolynomial RealPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RealPolynomial({0.0});
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
    return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::derivative(int k) const {
    RealPolynomial p = *this;
    for (int i = 0; i < k; ++i) p = p.derivative();
    return p;
}

std::vector<double> RealPolynomial::real_roots() const {
    int n = degree();
    if (n <= 0 || (n == 0 && coeffs_[0] == 0.0)) return {};
    if (n == 1) return {-coeffs_[0] / coeffs_[1]};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs_[i] / coeffs_[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    std::vector<double> roots;
    RealPolynomial dp = derivative();
    double scale = 0.0;
    for (double c : coeffs_) scale = std::max(scale, std::abs(c));
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = es.eigenvalues()[i];
        if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real()))) continue;
        double x = z.real();
        double d = dp.eval(x);
        if (d != 0.0) x -= eval(x) / d;  // one Newton polish step
        // discard spurious eigenvalues that do not actually vanish
        double fx = eval(x);
        double tol = 1e-7 * scale * std::max(1.0, std::pow(std::abs(x), n));
        if (std::abs(fx) <= tol) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double RealPolynomial::lp_norm(double p, double lo, double hi) const {
    if (std::isinf(p)) {
        double best = std::max(std::abs(eval(lo)), std::abs(eval(hi)));
        for (double c : poly_critical_points(*this, lo, hi))
            best = std::max(best, std::abs(eval(c)));
        return best;
    }
    auto f = [&](double x) { return std::pow(std::abs(eval(x)), p); };
    std::vector<double> edges = derivative().real_roots();
    std::vector<double> zeros = real_roots();
    edges.insert(edges.end(), zeros.begin(), zeros.end());
    ValueWithError v = integrate_adaptive(f, lo, hi, 1e-13, edges);
    return std::pow(v.value, 1.0 / p);
}

double RealPolynomial::deriv_sobolev_norm(int N, double p, double lo, double hi) const {
    double best = 0.0;
    for (int k = 1; k <= N; ++k) best = std::max(best, derivative(k).lp_norm(p, lo, hi));
    return best;
}

std::vector<double> poly_critical_points(const RealPolynomial& p, double lo, double hi) {
    if (p.degree() < 1) return {};
    std::vector<double> roots = p.derivative().real_roots();
    std::vector<double> out;
    double tol = 1e-10 * (hi - lo);
    for (double r : roots) {
        if (r < lo - tol || r > hi + tol) continue;
        double x = std::clamp(r, lo, hi);
        if (!out.empty() && std::abs(x - out.back()) <= tol) continue;
        out.push_back(x);
    }
    return out;
}

namespace {

// split points: roots of p and p' in (lo, hi); |p|^gamma is monotone in between
std::vector<double> monotone_breaks(const RealPolynomial& p, double lo, double hi) {
    std::vector<double> pts;
    pts.push_back(lo);
    for (double r : p.real_roots())
        if (r > lo && r < hi) pts.push_back(r);
    for (double r : p.derivative().real_roots())
        if (r > lo && r < hi) pts.push_back(r);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](double a, double b) { return std::abs(a - b) < 1e-14 * (1.0 + std::abs(a)); }),
              pts.end());
    return pts;
}

}  // namespace

double variation_abs_power(const RealPolynomial& p, double gamma, double lo, double hi) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw Error("invalid-argument", "variation exponent must be in (0, 1]");
    std::vector<double> pts = monotone_breaks(p, lo, hi);
    KahanSum var;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double va = std::pow(std::abs(p.eval(pts[i])), gamma);
        double vb = std::pow(std::abs(p.eval(pts[i + 1])), gamma);
        var.add(std::abs(vb - va));
    }
    return var.value();
}

double weighted_derivative_integral(const RealPolynomial& p, double gamma, double lo, double hi) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw Error("invalid-argument", "exponent must be in (0, 1]");
    // On each monotone sign-definite piece, |p|^gamma / gamma is an exact
    // antiderivative of |p'| |p|^{gamma-1} up to sign.
    std::vector<double> pts = monotone_breaks(p, lo, hi);
    KahanSum total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double va = std::pow(std::abs(p.eval(pts[i])), gamma);
        double vb = std::pow(std::abs(p.eval(pts[i + 1])), gamma);
        total.add(std::abs(vb - va) / gamma);
    }
    return total.value();
}

}  // namespace widom
