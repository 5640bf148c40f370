#include "widom/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "widom/quadrature.hpp"

namespace widom {

namespace {

// ---------------------------------------------------------------------
// Truncated Taylor (jet) arithmetic: exact derivatives of the smooth
// symbol families to any cached order.
// ---------------------------------------------------------------------

struct Jet {
    std::vector<double> c;  // Taylor coefficients at the expansion point

    explicit Jet(int order) : c(order + 1, 0.0) {}
    int order() const { return static_cast<int>(c.size()) - 1; }
};

Jet jet_mul(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (int n = 0; n <= r.order(); ++n) {
        double s = 0.0;
        for (int k = 0; k <= n; ++k) s += a.c[k] * b.c[n - k];
        r.c[n] = s;
    }
    return r;
}

// exp(u) via the standard recurrence e' = e * u'.
Jet jet_exp(const Jet& u) {
    Jet e(u.order());
    e.c[0] = std::exp(u.c[0]);
    for (int n = 1; n <= u.order(); ++n) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += k * u.c[k] * e.c[n - k];
        e.c[n] = s / n;
    }
    return e;
}

// 1/d with d.c[0] != 0.
Jet jet_inv(const Jet& d) {
    Jet r(d.order());
    r.c[0] = 1.0 / d.c[0];
    for (int n = 1; n <= d.order(); ++n) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += d.c[k] * r.c[n - k];
        r.c[n] = -s / d.c[0];
    }
    return r;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// ---------------------------------------------------------------------
// Piecewise polynomials (window family, smoothstep glue).
// ---------------------------------------------------------------------

std::vector<double> poly_deriv(const std::vector<double>& a) {
    if (a.size() <= 1) return {0.0};
    std::vector<double> r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * i;
    return r;
}

double poly_eval(const std::vector<double>& a, double x) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
    return v;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// C^m polynomial step: 0 at 0, 1 at 1, first m derivatives vanish at both ends.
std::vector<double> smoothstep_coeffs(int m) {
    std::vector<double> s(2 * m + 2, 0.0);
    for (int j = 0; j <= m; ++j) {
        double c = binom(m + j, j) * binom(2 * m + 1, m - j);
        if (j % 2) c = -c;
        s[m + 1 + j] = c;
    }
    return s;
}

// One window piece: p(xi) * q(alpha*xi + beta), where q lives in a local
// [0,1] variable. Keeping the factors separate avoids the catastrophic
// coefficient growth of the expanded composition.
struct WindowPiece {
    std::vector<double> p;
    std::vector<double> q;  // {1} for the plateau
    double alpha = 0.0, beta = 0.0;

    double eval(double x, int k) const {
        double u = alpha * x + beta;
        double v = 0.0;
        for (int j = 0; j <= k; ++j) {
            std::vector<double> pd = p;
            for (int d = 0; d < j; ++d) pd = poly_deriv(pd);
            std::vector<double> qd = q;
            for (int d = 0; d < k - j; ++d) qd = poly_deriv(qd);
            v += binom(k, j) * poly_eval(pd, x) * poly_eval(qd, u) * std::pow(alpha, k - j);
        }
        return v;
    }
};

struct PiecewisePoly {
    std::vector<double> breaks;  // ascending, size = pieces+1
    std::vector<WindowPiece> pieces;
    // zero outside [breaks.front(), breaks.back()]

    double eval(double x, int k) const {
        if (x < breaks.front() || x > breaks.back()) return 0.0;
        std::size_t i = std::upper_bound(breaks.begin(), breaks.end(), x) - breaks.begin();
        if (i == 0) i = 1;
        if (i >= breaks.size()) i = breaks.size() - 1;
        return pieces[i - 1].eval(x, k);
    }
};

// ---------------------------------------------------------------------
// Natural cubic spline for tabulated symbols.
// ---------------------------------------------------------------------

struct Spline {
    std::vector<double> x, y, m2;  // second derivatives at knots
    int order = 3;

    void build() {
        std::size_t n = x.size();
        m2.assign(n, 0.0);
        if (order != 3 || n < 3) return;
        std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
        b[0] = 1.0;
        b[n - 1] = 1.0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
            a[i] = h0 / 6.0;
            b[i] = (h0 + h1) / 3.0;
            c[i] = h1 / 6.0;
            d[i] = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
        }
        // Thomas algorithm
        for (std::size_t i = 1; i < n; ++i) {
            double w = a[i] / b[i - 1];
            b[i] -= w * c[i - 1];
            d[i] -= w * d[i - 1];
        }
        m2[n - 1] = d[n - 1] / b[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) m2[i] = (d[i] - c[i] * m2[i + 1]) / b[i];
    }

    double eval(double xi, int k) const {
        if (xi < x.front() || xi > x.back()) return 0.0;
        std::size_t i = std::upper_bound(x.begin(), x.end(), xi) - x.begin();
        if (i == 0) i = 1;
        if (i >= x.size()) i = x.size() - 1;
        double h = x[i] - x[i - 1];
        if (order == 1) {
            double slope = (y[i] - y[i - 1]) / h;
            return k == 0 ? y[i - 1] + slope * (xi - x[i - 1]) : slope;
        }
        double A = (x[i] - xi) / h, B = (xi - x[i - 1]) / h;
        switch (k) {
            case 0:
                return A * y[i - 1] + B * y[i] +
                       ((A * A * A - A) * m2[i - 1] + (B * B * B - B) * m2[i]) * h * h / 6.0;
            case 1:
                return (y[i] - y[i - 1]) / h +
                       (-(3 * A * A - 1) * m2[i - 1] + (3 * B * B - 1) * m2[i]) * h / 6.0;
            case 2:
                return A * m2[i - 1] + B * m2[i];
            default:
                return 0.0;
        }
    }
};

constexpr int kSmoothOrderCap = 12;

}  // namespace

struct Symbol::Impl {
    Family family = Family::Cauchy;
    // fermi
    double temperature = 1.0, mu = 1.0;
    // gaussian / cauchy
    double scale = 1.0;
    // window
    PiecewisePoly window;
    int window_smoothness = 3;
    // tabulated
    Spline spline;

    int n_max = kSmoothOrderCap;
    DecayHint hint;
};

Symbol Symbol::fermi(double temperature, double mu) {
    if (!(temperature > 0.0)) throw Error("invalid-argument", "fermi temperature must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Fermi;
    impl->temperature = temperature;
    impl->mu = mu;
    impl->hint = {DecayHint::Kind::Superexponential, 0.0};
    return Symbol(impl);
}

Symbol Symbol::gaussian(double scale) {
    if (!(scale > 0.0)) throw Error("invalid-argument", "gaussian scale must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Gaussian;
    impl->scale = scale;
    impl->hint = {DecayHint::Kind::Superexponential, 0.0};
    return Symbol(impl);
}

Symbol Symbol::cauchy(double scale) {
    if (!(scale > 0.0)) throw Error("invalid-argument", "cauchy scale must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Cauchy;
    impl->scale = scale;
    impl->hint = {DecayHint::Kind::Power, 2.0};
    return Symbol(impl);
}

Symbol Symbol::polynomial_window(std::vector<double> coeffs, double lo, double hi,
                                 double cutoff_width, int smoothness) {
    if (coeffs.empty() || !(hi > lo) || !(cutoff_width > 0.0) || smoothness < 1)
        throw Error("invalid-argument", "bad polynomial-window parameters");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::PolynomialWindow;
    impl->window_smoothness = smoothness;
    impl->n_max = smoothness;
    impl->hint = {DecayHint::Kind::Superexponential, 0.0};

    std::vector<double> S = smoothstep_coeffs(smoothness);
    // rising edge on [lo-w, lo]: S((xi-(lo-w))/w); falling on [hi, hi+w]
    double w = cutoff_width;
    PiecewisePoly pp;
    pp.breaks = {lo - w, lo, hi, hi + w};
    pp.pieces = {WindowPiece{coeffs, S, 1.0 / w, -(lo - w) / w},
                 WindowPiece{coeffs, {1.0}, 0.0, 0.0},
                 WindowPiece{coeffs, S, -1.0 / w, (hi + w) / w}};
    impl->window = std::move(pp);
    return Symbol(impl);
}

Symbol Symbol::tabulated(std::vector<double> xs, std::vector<double> vals, int order) {
    if (xs.size() != vals.size() || xs.size() < 2)
        throw Error("invalid-argument", "tabulated symbol needs matching grids (>= 2 points)");
    if (order != 1 && order != 3)
        throw Error("invalid-argument", "tabulated interpolation order must be 1 or 3");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw Error("invalid-argument", "tabulated grid must be strictly increasing");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::Tabulated;
    impl->spline.x = std::move(xs);
    impl->spline.y = std::move(vals);
    impl->spline.order = order;
    impl->spline.build();
    impl->n_max = (order == 3) ? 2 : 0;
    impl->hint = {DecayHint::Kind::Superexponential, 0.0};
    return Symbol(impl);
}

double Symbol::eval(double xi, int k) const {
    const Impl& im = *impl_;
    if (k < 0 || k > im.n_max)
        throw Error("order-exceeds-smoothness",
                    "derivative order " + std::to_string(k) + " exceeds n_max " +
                        std::to_string(im.n_max));
    switch (im.family) {
        case Family::Fermi: {
            // a = 1/(1+exp(u)), u = (xi^2 - mu)/T; evaluated through the
            // bounded branch so huge |u| cannot overflow.
            Jet u(k);
            u.c[0] = (xi * xi - im.mu) / im.temperature;
            if (k >= 1) u.c[1] = 2.0 * xi / im.temperature;
            if (k >= 2) u.c[2] = 1.0 / im.temperature;
            Jet a(k);
            if (u.c[0] > 0.0) {
                for (double& c : u.c) c = -c;
                Jet w = jet_exp(u);  // exp(-u), small
                Jet denom = w;
                denom.c[0] += 1.0;
                a = jet_mul(w, jet_inv(denom));
            } else {
                Jet e = jet_exp(u);
                Jet denom = e;
                denom.c[0] += 1.0;
                a = jet_inv(denom);
            }
            return a.c[k] * factorial(k);
        }
        case Family::Gaussian: {
            Jet u(k);
            double s2 = im.scale * im.scale;
            u.c[0] = -xi * xi / s2;
            if (k >= 1) u.c[1] = -2.0 * xi / s2;
            if (k >= 2) u.c[2] = -1.0 / s2;
            Jet a = jet_exp(u);
            return a.c[k] * factorial(k);
        }
        case Family::Cauchy: {
            Jet d(k);
            double s2 = im.scale * im.scale;
            d.c[0] = 1.0 + xi * xi / s2;
            if (k >= 1) d.c[1] = 2.0 * xi / s2;
            if (k >= 2) d.c[2] = 1.0 / s2;
            Jet a = jet_inv(d);
            return a.c[k] * factorial(k);
        }
        case Family::PolynomialWindow:
            return im.window.eval(xi, k);
        case Family::Tabulated:
            return im.spline.eval(xi, k);
    }
    return 0.0;
}

Symbol::Family Symbol::family() const { return impl_->family; }
int Symbol::n_max() const { return impl_->n_max; }
DecayHint Symbol::decay() const { return impl_->hint; }

std::vector<double> Symbol::features() const {
    const Impl& im = *impl_;
    switch (im.family) {
        case Family::Fermi:
            if (im.mu > 0.0) return {-std::sqrt(im.mu), std::sqrt(im.mu)};
            return {0.0};
        case Family::Gaussian:
        case Family::Cauchy:
            return {0.0};
        case Family::PolynomialWindow:
            return im.window.breaks;
        case Family::Tabulated:
            return {im.spline.x.front(), im.spline.x.back()};
    }
    return {};
}

double Symbol::tail_radius(double tiny) const {
    const Impl& im = *impl_;
    tiny = std::max(tiny, 1e-300);
    switch (im.family) {
        case Family::Fermi:
            return std::sqrt(std::max(0.0, im.mu) + im.temperature * std::log(1.0 / tiny)) + 1.0;
        case Family::Gaussian:
            return im.scale * std::sqrt(std::log(1.0 / tiny)) + 1.0;
        case Family::Cauchy:
            return im.scale / std::sqrt(tiny) + 1.0;
        case Family::PolynomialWindow:
            return std::max(std::abs(im.window.breaks.front()), std::abs(im.window.breaks.back()));
        case Family::Tabulated:
            return std::max(std::abs(im.spline.x.front()), std::abs(im.spline.x.back()));
    }
    return 1.0;
}

double Symbol::fermi_temperature() const {
    if (impl_->family != Family::Fermi)
        throw Error("invalid-argument", "fermi_temperature on a non-fermi symbol");
    return impl_->temperature;
}

bool Symbol::is_even() const {
    switch (impl_->family) {
        case Family::Fermi:
        case Family::Gaussian:
        case Family::Cauchy:
            return true;
        default:
            return false;
    }
}

std::vector<double> Symbol::level_points(double c) const {
    const Impl& im = *impl_;
    switch (im.family) {
        case Family::Fermi: {
            if (c <= 0.0 || c >= 1.0) return {};
            double r2 = im.mu + im.temperature * std::log(1.0 / c - 1.0);
            if (r2 <= 0.0) return {};
            double r = std::sqrt(r2);
            return {-r, r};
        }
        case Family::Gaussian: {
            if (c <= 0.0 || c >= 1.0) return {};
            double r = im.scale * std::sqrt(std::log(1.0 / c));
            return {-r, r};
        }
        case Family::Cauchy: {
            if (c <= 0.0 || c >= 1.0) return {};
            double r = im.scale * std::sqrt(1.0 / c - 1.0);
            return {-r, r};
        }
        default: {
            // grid scan + bisection
            double R = tail_radius(1e-14);
            std::vector<double> out;
            int n = 4096;
            double prev = eval(-R) - c;
            for (int i = 1; i <= n; ++i) {
                double x = -R + 2.0 * R * i / n;
                double cur = eval(x) - c;
                if (prev == 0.0) out.push_back(-R + 2.0 * R * (i - 1) / n);
                if (prev * cur < 0.0) {
                    double lo = -R + 2.0 * R * (i - 1) / n, hi = x;
                    for (int it = 0; it < 80; ++it) {
                        double mid = 0.5 * (lo + hi);
                        double vm = eval(mid) - c;
                        if (vm == 0.0) {
                            lo = hi = mid;
                            break;
                        }
                        if (vm * prev < 0.0)
                            hi = mid;
                        else
                            lo = mid;
                    }
                    out.push_back(0.5 * (lo + hi));
                }
                prev = cur;
            }
            return out;
        }
    }
}

std::string Symbol::describe() const {
    const Impl& im = *impl_;
    std::ostringstream os;
    switch (im.family) {
        case Family::Fermi:
            os << "fermi(T=" << im.temperature << ",mu=" << im.mu << ")";
            break;
        case Family::Gaussian:
            os << "gaussian(scale=" << im.scale << ")";
            break;
        case Family::Cauchy:
            os << "cauchy(scale=" << im.scale << ")";
            break;
        case Family::PolynomialWindow:
            os << "polynomial-window";
            break;
        case Family::Tabulated:
            os << "tabulated(" << im.spline.x.size() << " pts)";
            break;
    }
    return os.str();
}

double graded_sup(const std::function<double(double)>& fn, const std::vector<double>& centers,
                  double r_max, double rel_tol) {
    std::vector<double> ctrs = centers;
    if (ctrs.empty()) ctrs.push_back(0.0);
    double best = 0.0;
    double best_x = ctrs.front();
    auto probe = [&](double x) {
        double v = std::abs(fn(x));
        if (v > best) {
            best = v;
            best_x = x;
        }
    };
    double prev = -1.0;
    double step0 = 1.0;
    for (int density = 4; density <= 32; density *= 2) {
        for (double c : ctrs) {
            for (int j = -45 * density;; ++j) {
                double off = std::pow(2.0, static_cast<double>(j) / density);
                if (off > r_max + std::abs(c)) break;
                probe(c + off);
                probe(c - off);
            }
            probe(c);
        }
        step0 = std::pow(2.0, 1.0 / density) - 1.0;
        if (prev >= 0.0 && best - prev <= rel_tol * (best + 1e-300)) break;
        prev = best;
    }
    // local polish around the best sample (the grid alone is too coarse for
    // smooth interior maxima)
    double step = std::max(std::abs(best_x), 1.0) * step0;
    for (int it = 0; it < 80; ++it) {
        probe(best_x - step);
        probe(best_x + step);
        step *= 0.5;
    }
    return best;
}

double weighted_norm(const Symbol& sym, WeightedNormSpec spec, const std::vector<double>* grid) {
    if (spec.n < 0 || spec.n > sym.n_max())
        throw Error("order-exceeds-smoothness", "weighted norm order exceeds symbol smoothness");
    DecayHint hint = sym.decay();
    if (hint.kind == DecayHint::Kind::Power && spec.m > hint.exponent)
        throw Error("weighted-norm-divergent",
                    "weight exponent m exceeds the symbol decay exponent");

    double best = 0.0;
    for (int k = 0; k <= spec.n; ++k) {
        auto wfn = [&](double xi) {
            return std::pow(1.0 + std::abs(xi), spec.m + k) * std::abs(sym.eval(xi, k));
        };
        if (grid) {
            for (double xi : *grid) best = std::max(best, wfn(xi));
        } else {
            double r = sym.tail_radius(1e-14);
            if (hint.kind == DecayHint::Kind::Power) {
                // weighted decay ~ |xi|^{m-r}: extend until the weight-adjusted
                // tail is negligible (or m == r: sup approached from inside).
                r = std::max(r, 1e7);
            }
            best = std::max(best, graded_sup(wfn, sym.features(), r));
        }
    }
    return best;
}

namespace {

double cell_sup(const Symbol& sym, int k, double lo, double hi, const std::vector<double>& seeds) {
    double best = 0.0;
    int n = 33;
    for (int i = 0; i <= n; ++i) {
        double x = lo + (hi - lo) * i / n;
        best = std::max(best, std::abs(sym.eval(x, k)));
    }
    for (double s : seeds) {
        if (s <= lo || s >= hi) continue;
        for (int j = 0; j <= 60; ++j) {
            double off = (hi - lo) * std::ldexp(1.0, -j);
            if (s + off < hi) best = std::max(best, std::abs(sym.eval(s + off, k)));
            if (s - off > lo) best = std::max(best, std::abs(sym.eval(s - off, k)));
        }
    }
    // golden-section style local polish around the best sample
    double bx = lo;
    for (int i = 0; i <= n; ++i) {
        double x = lo + (hi - lo) * i / n;
        if (std::abs(sym.eval(x, k)) == best) bx = x;
    }
    double step = (hi - lo) / n;
    for (int it = 0; it < 40; ++it) {
        step *= 0.5;
        double cand[2] = {bx - step, bx + step};
        for (double x : cand) {
            if (x <= lo || x >= hi) continue;
            double v = std::abs(sym.eval(x, k));
            if (v > best) {
                best = v;
                bx = x;
            }
        }
    }
    return best;
}

double cell_lp(const Symbol& sym, int k, double lo, double hi, double p,
               const std::vector<double>& seeds) {
    if (std::isinf(p)) return cell_sup(sym, k, lo, hi, seeds);
    auto f = [&](double x) { return std::pow(std::abs(sym.eval(x, k)), p); };
    std::vector<double> inner;
    for (double s : seeds)
        if (s > lo && s < hi) inner.push_back(s);
    ValueWithError v = integrate_adaptive(f, lo, hi, 1e-12, inner);
    return std::pow(v.value, 1.0 / p);
}

}  // namespace

double wnp_quasi_norm(const Symbol& sym, int deriv_shift, double delta, int N, double p) {
    if (N < 0 || deriv_shift < 0) throw Error("invalid-argument", "bad quasi-norm orders");
    if (deriv_shift + N > sym.n_max())
        throw Error("order-exceeds-smoothness", "quasi-norm needs derivatives beyond n_max");
    if (!(delta > 0.0)) throw Error("invalid-argument", "delta must be positive");
    DecayHint hint = sym.decay();
    if (hint.kind == DecayHint::Kind::Power && !std::isinf(delta)) {
        // cells decay like n^{-(r+shift)}; the ell^delta sum needs
        // delta*(r+shift) > 1
        if (delta * (hint.exponent + deriv_shift) <= 1.0)
            throw Error("nonconvergence", "cell sequence does not decay fast enough");
    }
    std::vector<double> seeds = sym.features();

    auto cell_value = [&](long n) {
        double lo = static_cast<double>(n), hi = lo + 1.0;
        double best = 0.0;
        for (int k = 0; k <= N; ++k)
            best = std::max(best, cell_lp(sym, deriv_shift + k, lo, hi, p, seeds));
        return best;
    };

    bool use_max = std::isinf(delta);
    KahanSum acc;
    double running_max = 0.0;
    double running = 0.0;
    int quiet = 0;
    long max_cells = 100000;
    for (long d = 0; d < max_cells; ++d) {
        double contrib = 0.0;
        for (long n : {d, -d - 1}) {
            double v = cell_value(n);
            if (use_max) {
                running_max = std::max(running_max, v);
            } else {
                double t = std::pow(v, delta);
                acc.add(t);
                contrib += t;
            }
        }
        running = use_max ? running_max : acc.value();
        if (d >= 2 && contrib <= 1e-12 * (running + 1e-300)) {
            if (++quiet >= 20) break;
        } else {
            quiet = 0;
        }
        if (d == max_cells - 1)
            throw Error("nonconvergence", "quasi-norm cell sum did not converge");
    }
    return use_max ? running_max : std::pow(acc.value(), 1.0 / delta);
}

ValueWithError truncated_gagliardo(const Symbol& sym, double exponent, double cutoff,
                                   double box) {
    if (!(exponent > 0.0)) throw Error("invalid-argument", "gagliardo exponent must be > 0");
    if (cutoff < 0.0) throw Error("invalid-argument", "cutoff must be >= 0");
    DecayHint hint = sym.decay();
    if (hint.kind == DecayHint::Kind::Power && exponent * hint.exponent <= 1.0)
        throw Error("divergence",
                    "|a|^exponent tail is not integrable: the integral diverges");
    if (cutoff == 0.0 && exponent <= 1.0)
        throw Error("divergence", "cutoff 0 requires exponent > 1 (Lipschitz regime)");

    double R = box > 0.0 ? box
                         : sym.tail_radius(std::pow(1e-13, 1.0 / exponent));
    if (hint.kind == DecayHint::Kind::Power) R = std::min(R, 2e6);
    double s_hi = 2.0 * R;
    double s_lo = cutoff;
    if (s_lo == 0.0) {
        s_lo = std::pow(1e-14, 1.0 / (exponent - 1.0));
        s_lo = std::max(s_lo, 1e-250);
    }

    auto kernel = [&](double xo, double xi_in, double s) {
        double d = sym(xi_in) - sym(xo);
        return abs_pow(d, exponent) / (s * s);
    };
    // for even symbols the kernel has algebraic kinks at xi = -s/2 and
    // xi = +s/2 (where a(xi +- s) = a(xi)); they must be panel edges
    std::function<void(double, std::vector<double>&)> per_s;
    if (sym.is_even())
        per_s = [](double s, std::vector<double>& seeds) {
            seeds.push_back(-0.5 * s);
            seeds.push_back(0.5 * s);
        };
    RingValues rv = pv_double_rings(kernel, {s_lo}, s_hi, -R, R, sym.features(),
                                    sym.features(), 1e-10, 1, per_s);
    double value = rv.values[0];
    double err = rv.quad_error;

    // s-tail beyond s_hi: |a(xi+s)-a(xi)|^g ~ |a(xi)|^g there.
    auto apow = [&](double xi) { return abs_pow(sym(xi), exponent); };
    ValueWithError ia = integrate_adaptive(apow, -R, R, 1e-12, sym.features());
    double tail_s = 2.0 * ia.value / s_hi;
    value += tail_s;
    err += 0.1 * tail_s + ia.error;

    // Outer tail |xi| > R from the decay hint.
    double outer_tail = 0.0;
    if (hint.kind == DecayHint::Kind::Power) {
        double gr = exponent * hint.exponent;
        // int_{|xi|>R} |a|^g ~ 2 R^{1-gr}/(gr-1), paired with the 1/s^2 mass
        double mass = (cutoff > 0.0) ? 2.0 / cutoff : 2.0 / std::max(s_lo, 1e-3);
        outer_tail = 2.0 * std::pow(R, 1.0 - gr) / (gr - 1.0) * mass;
    }
    err += outer_tail;
    return {value, err};
}

SymbolRange symbol_range(const Symbol& sym) {
    double r = sym.tail_radius(1e-14);
    std::vector<double> ctrs = sym.features();
    ctrs.push_back(0.0);
    double mn = 0.0, mx = 0.0;  // zero is the limit at infinity for all families
    for (double c : ctrs) {
        for (int j = -200; j <= 200; ++j) {
            double xi = c + r * j / 200.0;
            double v = sym(xi);
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        for (int j = 2; j <= 45 * 4; ++j) {
            double off = std::pow(2.0, -static_cast<double>(j) / 4.0) * r;
            for (double xi : {c - off, c + off}) {
                double v = sym(xi);
                mn = std::min(mn, v);
                mx = std::max(mx, v);
            }
        }
    }
    return {mn, mx};
}

}  // namespace widom
