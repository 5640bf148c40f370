#pragma once

#include "widom/common.hpp"
#include "widom/testfn.hpp"

namespace widom {

/// How a functional value was obtained.
enum class EvalMethod { Auto, ClosedForm, PartsForm, GradedQuadrature };

struct FunctionalValue {
    double value = 0.0;
    EvalMethod method = EvalMethod::ClosedForm;
    double error = 0.0;
};

/// U(s1, s2; g) = int_0^1 { g((1-t)s1 + t s2) - [(1-t)g(s1) + t g(s2)] } / (t(1-t)) dt.
/// Closed forms for degree <= 2 polynomials, exp and |t - x0|; the parts
/// form (s1-s2)^2 int g''(w) (t log t + (1-t) log(1-t)) dt for C^2 g;
/// otherwise graded quadrature split at the cusp preimage.
FunctionalValue eval_U(const TestFunction& g, double s1, double s2,
                       EvalMethod force = EvalMethod::Auto);

/// V(s1, s2; g) = int_0^1 { g((1-t)s1 + t s2) - g(s2) } / (1-t) dt.
FunctionalValue eval_V(const TestFunction& g, double s1, double s2,
                       EvalMethod force = EvalMethod::Auto);

/// Y(s1, s2; g) = [g(s1) - g(s2)] / (s1 - s2), evaluated through the
/// integral form int_0^1 g'((1-t)s1 + t s2) dt when the arguments nearly
/// coincide (cancellation guard). Y(s, s) = g'(s).
FunctionalValue eval_Y(const TestFunction& g, double s1, double s2);

/// X(s1, s2; f) = Y(s1, s2; f) - f'(s1); s1 must avoid the cusp.
FunctionalValue eval_X(const TestFunction& f, double s1, double s2);

}  // namespace widom
