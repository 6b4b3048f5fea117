#pragma once

#include <functional>

namespace hbim::numerics {

/// Stopping rule shared by quadrature and root finding.
struct Tolerance {
    double absolute = 1e-10;
    double relative = 1e-10;
    int max_iterations = 200;

    /// Throws DomainError unless absolute > 0, relative > 0, max_iterations >= 1.
    void validate() const;
};

inline constexpr int kMaxQuadratureDepth = 60;

using ScalarFn = std::function<double(double)>;
using OdeRhs = std::function<double(double t, double y)>;

double erf(double x);
double erfc(double x);

/// First repeated integral of erfc: exp(-x^2)/sqrt(pi) - x*erfc(x). Requires x >= 0.
double ierfc(double x);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Adaptive Simpson quadrature with a Richardson-corrected panel estimate.
///
/// The accepted error satisfies error_estimate <= max(tol.absolute,
/// tol.relative * |value|). Subdivision deeper than kMaxQuadratureDepth
/// throws NonConvergenceError carrying the best estimate.
QuadratureResult integrate_with_error(const ScalarFn& f, double a, double b,
                                      const Tolerance& tol = {});

double integrate(const ScalarFn& f, double a, double b, const Tolerance& tol = {});

/// Root of g on [lo, hi] by safeguarded regula falsi with bisection fallback.
///
/// Stops when the bracket is no wider than tol.absolute or g vanishes exactly.
/// Throws BracketError when g(lo) and g(hi) share a strict sign, and
/// NonConvergenceError after tol.max_iterations steps.
double find_root(const ScalarFn& g, double lo, double hi, const Tolerance& tol = {1e-12, 1e-12, 400});

/// Classic fixed-step RK4 from t0 to t1.
double integrate_ode(const OdeRhs& rhs, double y0, double t0, double t1, int steps);

}  // namespace hbim::numerics
