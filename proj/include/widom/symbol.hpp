#pragma once

#include <memory>
#include <string>
#include <vector>

#include "widom/common.hpp"

namespace widom {

/// How fast the symbol decays at infinity; drives truncation boxes.
struct DecayHint {
    enum class Kind { Superexponential, Power };
    Kind kind = Kind::Superexponential;
    double exponent = 0.0;  ///< |a(xi)| <~ (1+|xi|)^{-exponent} when kind==Power
};

/// Real-valued symbol a(xi) with derivatives up to n_max().
class Symbol {
public:
    enum class Family { Fermi, Gaussian, Cauchy, PolynomialWindow, Tabulated };

    static Symbol fermi(double temperature, double mu);
    static Symbol gaussian(double scale = 1.0);
    static Symbol cauchy(double scale = 1.0);
    /// Polynomial on [lo, hi], glued to zero over transition bands of the
    /// given width with a C^smoothness polynomial step.
    static Symbol polynomial_window(std::vector<double> coeffs, double lo, double hi,
                                    double cutoff_width, int smoothness = 3);
    /// order 1 = piecewise linear (n_max 0), order 3 = natural cubic spline
    /// (n_max 2). Zero outside the grid range.
    static Symbol tabulated(std::vector<double> xs, std::vector<double> vals, int order = 3);

    /// k-th derivative at xi. Throws "order-exceeds-smoothness" if k > n_max().
    double eval(double xi, int k = 0) const;
    double operator()(double xi) const { return eval(xi, 0); }

    Family family() const;
    int n_max() const;
    DecayHint decay() const;
    /// Points where the symbol has localized structure (grading anchors).
    std::vector<double> features() const;
    /// Radius R with |a(xi)| <= tiny for |xi| >= R.
    double tail_radius(double tiny) const;
    /// Fermi temperature (throws for other families); used by scale choices.
    double fermi_temperature() const;
    /// True when a(-xi) == a(xi) by construction.
    bool is_even() const;
    /// Solutions of a(xi) = c (closed form for the smooth families, grid
    /// bisection otherwise); empty when the level is never attained.
    std::vector<double> level_points(double c) const;

    std::string describe() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Symbol(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Parameters of the weighted sup-norm max_{k<=n} sup (1+|xi|)^{m+k} |u^(k)|.
struct WeightedNormSpec {
    double m = 0.0;
    int n = 0;
};

/// Lower-biased estimate of the weighted norm on geometrically graded grids,
/// refined until successive refinements agree to 1e-8 relative. If `grid`
/// is provided the sup is taken over exactly those points (no refinement).
/// Throws "weighted-norm-divergent" when the decay hint implies the sup is
/// infinite (power decay of exponent r with m > r).
double weighted_norm(const Symbol& sym, WeightedNormSpec spec,
                     const std::vector<double>* grid = nullptr);

/// Quasi-norm over unit cells (n, n+1):
///   [ sum_n max_{0<=k<=N} ( int_cell |u^(k)|^p )^{delta/p} ]^{1/delta},
/// where u = (deriv_shift)-th derivative of the symbol. p and delta may be
/// infinite. Cell sums stop once 20 consecutive cells contribute less than
/// 1e-12 relative; throws "nonconvergence" if the cells do not decay.
double wnp_quasi_norm(const Symbol& sym, int deriv_shift, double delta, int N, double p);

/// Double integral of |a(xi1)-a(xi2)|^exponent / |xi1-xi2|^2 over
/// |xi1-xi2| > cutoff. cutoff = 0 requires exponent > 1 (Lipschitz regime).
/// `box` overrides the decay-driven outer truncation radius when positive.
ValueWithError truncated_gagliardo(const Symbol& sym, double exponent, double cutoff,
                                   double box = 0.0);

/// Rough global range of the symbol (graded grid scan).
struct SymbolRange {
    double min = 0.0;
    double max = 0.0;
};
SymbolRange symbol_range(const Symbol& sym);

/// Lower-biased sup of |fn| over graded grids around the given centers,
/// refined until stable; shared estimator for the norm machinery.
double graded_sup(const std::function<double(double)>& fn, const std::vector<double>& centers,
                  double r_max, double rel_tol = 1e-8);

}  // namespace widom
