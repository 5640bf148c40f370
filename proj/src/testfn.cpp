#include "widom/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace widom {

namespace {

double poly_eval_d(const std::vector<double>& c, double t, int k) {
    // k-th derivative of sum c_i t^i
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(k);) {
        double coef = c[i];
        for (int j = 0; j < k; ++j) coef *= static_cast<double>(i - j);
        v = v * t + coef;
    }
    return v;
}

// d^k/dt^k |u|^g  (u != 0): g(g-1)...(g-k+1) |u|^{g-k} sign(u)^k
double abs_power_deriv(double u, double g, int k) {
    double coef = 1.0;
    for (int j = 0; j < k; ++j) coef *= (g - j);
    if (coef == 0.0) return 0.0;
    double mag = std::pow(std::abs(u), g - k);
    double sgn = (u < 0.0 && (k % 2)) ? -1.0 : 1.0;
    return coef * mag * sgn;
}

double binom_d(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

struct TestFunction::Impl {
    Class cls = Class::Analytic;
    bool exp_kind = false;
    std::vector<double> coeffs;         // analytic polynomial
    std::vector<double> smooth_coeffs;  // cusp product factor
    double gamma = 1.0;                 // power exponent (cusp: gamma, holder: 1+kappa)
    double kappa = 1.0;
    double x0 = 0.0;
    double amplitude = 1.0;
};

TestFunction TestFunction::affine(double slope, double intercept) {
    return polynomial({intercept, slope});
}

TestFunction TestFunction::square() { return polynomial({0.0, 0.0, 1.0}); }

TestFunction TestFunction::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs = {0.0};
    auto impl = std::make_shared<Impl>();
    impl->cls = Class::Analytic;
    impl->coeffs = std::move(coeffs);
    return TestFunction(impl);
}

TestFunction TestFunction::exponential() {
    auto impl = std::make_shared<Impl>();
    impl->cls = Class::Analytic;
    impl->exp_kind = true;
    return TestFunction(impl);
}

TestFunction TestFunction::cusp_power(double gamma, double x0, double amplitude) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw Error("invalid-argument", "cusp exponent must be in (0, 1]");
    auto impl = std::make_shared<Impl>();
    impl->cls = Class::Cusp;
    impl->gamma = gamma;
    impl->x0 = x0;
    impl->amplitude = amplitude;
    return TestFunction(impl);
}

TestFunction TestFunction::cusp_product(std::vector<double> smooth_coeffs, double gamma, double x0,
                                        double amplitude) {
    TestFunction f = cusp_power(gamma, x0, amplitude);
    auto impl = std::make_shared<Impl>(*f.impl_);
    impl->smooth_coeffs = std::move(smooth_coeffs);
    return TestFunction(impl);
}

TestFunction TestFunction::holder_power(double kappa, double x0, double amplitude) {
    if (!(kappa > 0.0) || kappa > 1.0)
        throw Error("invalid-argument", "holder exponent must be in (0, 1]");
    auto impl = std::make_shared<Impl>();
    impl->cls = Class::C1Holder;
    impl->kappa = kappa;
    impl->gamma = 1.0 + kappa;
    impl->x0 = x0;
    impl->amplitude = amplitude;
    return TestFunction(impl);
}

double TestFunction::eval(double t, int k) const {
    const Impl& im = *impl_;
    if (k < 0) throw Error("invalid-argument", "negative derivative order");
    switch (im.cls) {
        case Class::Analytic:
            if (im.exp_kind) return std::exp(t);
            return poly_eval_d(im.coeffs, t, k);
        case Class::C1Holder: {
            double u = t - im.x0;
            if (k >= 2 && std::abs(u) < 1e-300)
                throw Error("evaluation-at-cusp", "second derivative at the kink point");
            if (k == 1 && std::abs(u) < 1e-300) return 0.0;  // |u|^{1+kappa} has f'(x0)=0
            return im.amplitude * abs_power_deriv(u, im.gamma, k);
        }
        case Class::Cusp: {
            double u = t - im.x0;
            if (k >= 1 && std::abs(u) < 1e-300)
                throw Error("evaluation-at-cusp",
                            "derivative of the cusp function at the cusp point");
            if (im.smooth_coeffs.empty()) return im.amplitude * abs_power_deriv(u, im.gamma, k);
            double v = 0.0;
            for (int j = 0; j <= k; ++j)
                v += binom_d(k, j) * poly_eval_d(im.smooth_coeffs, t, j) *
                     abs_power_deriv(u, im.gamma, k - j);
            return im.amplitude * v;
        }
    }
    return 0.0;
}

TestFunction::Class TestFunction::cls() const { return impl_->cls; }
double TestFunction::gamma() const { return impl_->gamma; }
double TestFunction::x0() const { return impl_->x0; }
double TestFunction::kappa() const { return impl_->kappa; }
double TestFunction::amplitude() const { return impl_->amplitude; }

bool TestFunction::has_closed_form_U() const {
    const Impl& im = *impl_;
    if (im.cls == Class::Analytic) return im.exp_kind || im.coeffs.size() <= 3;
    return is_abs_cusp();
}
bool TestFunction::has_closed_form_V() const { return has_closed_form_U(); }

const std::vector<double>& TestFunction::poly_coeffs() const { return impl_->coeffs; }
bool TestFunction::is_exp() const { return impl_->exp_kind; }
bool TestFunction::is_abs_cusp() const {
    return impl_->cls == Class::Cusp && impl_->gamma == 1.0 && impl_->smooth_coeffs.empty();
}
bool TestFunction::is_pure_power() const {
    return impl_->cls == Class::Cusp && impl_->smooth_coeffs.empty();
}

std::string TestFunction::describe() const {
    const Impl& im = *impl_;
    std::ostringstream os;
    switch (im.cls) {
        case Class::Analytic:
            if (im.exp_kind) {
                os << "exp";
            } else {
                os << "poly[";
                for (std::size_t i = 0; i < im.coeffs.size(); ++i)
                    os << (i ? "," : "") << im.coeffs[i];
                os << "]";
            }
            break;
        case Class::C1Holder:
            os << im.amplitude << "*|t-" << im.x0 << "|^" << im.gamma;
            break;
        case Class::Cusp:
            os << im.amplitude << "*|t-" << im.x0 << "|^" << im.gamma;
            if (!im.smooth_coeffs.empty()) os << " (smooth factor)";
            break;
    }
    return os.str();
}

double cusp_seminorm(const TestFunction& f, int n) {
    if (f.cls() != TestFunction::Class::Cusp)
        throw Error("invalid-argument", "cusp_seminorm requires a cusp-class function");
    if (n < 0 || n > 2) throw Error("invalid-argument", "cusp seminorm supports n in {0,1,2}");
    double g = f.gamma();
    const double c = std::abs(f.amplitude());
    // pure power: |f^(k)| |u|^{k-gamma} = c * |g (g-1) ... (g-k+1)|
    if (f.is_pure_power()) {
        double best = c;
        double coef = 1.0;
        for (int k = 1; k <= n; ++k) {
            coef *= std::abs(g - (k - 1));
            best = std::max(best, c * coef);
        }
        return best;
    }
    // graded grid around the cusp, growing range with divergence detection
    double best = 0.0;
    double prev_best = -1.0;
    for (double range = 8.0; range <= 512.0; range *= 4.0) {
        best = 0.0;
        for (int k = 0; k <= n; ++k) {
            for (int j = -52 * 4; j <= 4 * static_cast<int>(std::log2(range)); ++j) {
                double off = std::pow(2.0, j / 4.0);
                for (double u : {off, -off}) {
                    double x = f.x0() + u;
                    double w = std::pow(std::abs(u), k - g);
                    best = std::max(best, std::abs(f.eval(x, k)) * w);
                }
            }
        }
        if (prev_best >= 0.0 && best > prev_best * 1.5)
            throw Error("infinite-seminorm", "cusp seminorm estimate diverges with range");
        if (prev_best >= 0.0 && best - prev_best <= 1e-10 * best) break;
        prev_best = best;
    }
    return best;
}

double holder_seminorm(const std::function<double(double)>& g, double kappa, std::uint64_t seed,
                       int n_centers, const std::vector<double>& extra_centers) {
    Rng rng(seed);
    double best = 0.0;
    auto probe = [&](double x, double y) {
        double d = std::abs(x - y);
        if (d < 1e-280) return;
        double r = std::abs(g(x) - g(y)) / std::pow(d, kappa);
        if (std::isfinite(r)) best = std::max(best, r);
    };
    std::vector<double> centers = extra_centers;
    for (int i = 0; i < n_centers; ++i) centers.push_back(rng.uniform(-4.0, 4.0));
    for (double c : centers) {
        for (int j = -4; j <= 52; ++j) {
            double s = std::ldexp(1.0, -j);
            probe(c, c + s);
            probe(c - s, c + s);
            probe(c - s, c);
        }
    }
    return best;
}

double holder_seminorm(const TestFunction& g, double kappa, std::uint64_t seed) {
    std::vector<double> extra = {g.x0()};
    auto fn = [&](double t) { return g.eval(t, 0); };
    return holder_seminorm(fn, kappa, seed, 48, extra);
}

}  // namespace widom
