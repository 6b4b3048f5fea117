#include "hbim/numerics.hpp"

#include "hbim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hbim::numerics {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(who) + ": argument must be finite");
    }
}

// erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_k 2^k x^(2k+1) / (1*3*...*(2k+1)).
// Every term is positive for x > 0, so there is no cancellation; used for |x| <= 2.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= 2.0 * x2 / (2.0 * k + 1.0);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return kTwoOverSqrtPi * std::exp(-x2) * sum;
}

// Laplace continued fraction for erfc, x > 0.5, evaluated by modified Lentz:
// erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k < 5000; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        d = (d == 0.0) ? 1.0 / tiny : 1.0 / d;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) <= 2.0 * kEps) break;
    }
    return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double eval_checked(const ScalarFn& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
        throw DomainError("integrate: integrand is not finite at x = " + std::to_string(x));
    }
    return y;
}

struct Panel {
    double value;
    double error;
};

Panel adaptive_simpson(const ScalarFn& f, double a, double b, double fa, double fm, double fb,
                       double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval_checked(f, lm);
    const double frm = eval_checked(f, rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;

    const bool roundoff_floor = std::abs(delta) <= 8.0 * kEps * (std::abs(left) + std::abs(right));
    if (std::abs(delta) <= 15.0 * eps || roundoff_floor) {
        return {left + right + delta / 15.0, std::abs(delta) / 15.0};
    }
    if (depth >= kMaxQuadratureDepth || lm <= a || rm >= b) {
        throw NonConvergenceError("integrate: maximum subdivision depth exceeded", left + right + delta / 15.0);
    }
    Panel l{}, r{};
    try {
        l = adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth + 1);
    } catch (const NonConvergenceError& e) {
        throw NonConvergenceError(e.what(), e.best_estimate() + right);
    }
    try {
        r = adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
    } catch (const NonConvergenceError& e) {
        throw NonConvergenceError(e.what(), l.value + e.best_estimate());
    }
    return {l.value + r.value, l.error + r.error};
}

}  // namespace

void Tolerance::validate() const {
    if (!(absolute > 0.0) || !(relative > 0.0) || max_iterations < 1) {
        throw DomainError("tolerance: absolute and relative must be > 0 and max_iterations >= 1");
    }
}

double erf(double x) {
    require_finite(x, "erf");
    if (std::abs(x) <= 2.0) return erf_series(x);
    const double tail = erfc_continued_fraction(std::abs(x));
    return x > 0.0 ? 1.0 - tail : tail - 1.0;
}

double erfc(double x) {
    require_finite(x, "erfc");
    if (x > 0.5) return erfc_continued_fraction(x);
    if (x >= -0.5) return 1.0 - erf_series(x);
    return 2.0 - erfc(-x);
}

double ierfc(double x) {
    require_finite(x, "ierfc");
    if (x < 0.0) throw DomainError("ierfc: argument must be >= 0");
    return std::exp(-x * x) * std::numbers::inv_sqrtpi - x * erfc(x);
}

QuadratureResult integrate_with_error(const ScalarFn& f, double a, double b, const Tolerance& tol) {
    tol.validate();
    require_finite(a, "integrate");
    require_finite(b, "integrate");
    if (a > b) throw DomainError("integrate: lower limit exceeds upper limit");
    if (a == b) return {0.0, 0.0};

    // Coarse composite pass sets the scale for the relative criterion and
    // keeps narrow features from hiding between the first three samples.
    constexpr int kPanels = 8;
    const double h = (b - a) / kPanels;
    double coarse = 0.0;
    double edges[kPanels + 1];
    double mids[kPanels];
    double wholes[kPanels];
    for (int i = 0; i <= kPanels; ++i) edges[i] = eval_checked(f, i == kPanels ? b : a + i * h);
    for (int i = 0; i < kPanels; ++i) {
        mids[i] = eval_checked(f, a + (i + 0.5) * h);
        wholes[i] = simpson(edges[i], mids[i], edges[i + 1], h);
        coarse += wholes[i];
    }

    const double eps = std::max(tol.absolute, tol.relative * std::abs(coarse)) / kPanels;
    QuadratureResult out;
    for (int i = 0; i < kPanels; ++i) {
        const double lo = a + i * h;
        const double hi = i + 1 == kPanels ? b : a + (i + 1) * h;
        try {
            const Panel p = adaptive_simpson(f, lo, hi, edges[i], mids[i], edges[i + 1], wholes[i], eps, 1);
            out.value += p.value;
            out.error_estimate += p.error;
        } catch (const NonConvergenceError& e) {
            double best = out.value + e.best_estimate();
            for (int j = i + 1; j < kPanels; ++j) best += wholes[j];
            throw NonConvergenceError(e.what(), best);
        }
    }
    return out;
}

double integrate(const ScalarFn& f, double a, double b, const Tolerance& tol) {
    return integrate_with_error(f, a, b, tol).value;
}

double find_root(const ScalarFn& g, double lo, double hi, const Tolerance& tol) {
    tol.validate();
    require_finite(lo, "find_root");
    require_finite(hi, "find_root");
    if (lo > hi) throw DomainError("find_root: lo must not exceed hi");

    double flo = g(lo);
    double fhi = g(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi)) {
        throw BracketError("find_root: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    bool force_bisect = false;
    for (int it = 0; it < tol.max_iterations; ++it) {
        const double width = hi - lo;
        const double mid = lo + 0.5 * width;
        if (width <= tol.absolute || mid <= lo || mid >= hi) {
            return std::abs(flo) < std::abs(fhi) ? lo : hi;
        }
        double x = force_bisect ? mid : hi - fhi * (hi - lo) / (fhi - flo);
        if (!(x > lo && x < hi)) x = mid;

        const double fx = g(x);
        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        force_bisect = (hi - lo) > 0.5 * width;
    }
    throw NonConvergenceError("find_root: iteration cap reached", std::abs(flo) < std::abs(fhi) ? lo : hi);
}

double integrate_ode(const OdeRhs& rhs, double y0, double t0, double t1, int steps) {
    if (steps < 1) throw DomainError("integrate_ode: steps must be >= 1");
    if (!(t1 >= t0)) throw DomainError("integrate_ode: t1 must be >= t0");
    const double h = (t1 - t0) / steps;
    double y = y0;
    for (int i = 0; i < steps; ++i) {
        const double t = t0 + i * h;
        const double k1 = rhs(t, y);
        const double k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
        const double k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
        const double k4 = rhs(t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(y)) {
            throw DivergenceError("integrate_ode: state became non-finite at t = " + std::to_string(t + h));
        }
    }
    return y;
}

}  // namespace hbim::numerics
