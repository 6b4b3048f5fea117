#include "hbim/error_metrics.hpp"

#include "hbim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hbim {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

}  // namespace

std::string to_string(Comparator c) {
    return c == Comparator::literal_erf ? "erf(X)" : "erfc(X/2)";
}

std::string to_string(ErrorMode m) { return m == ErrorMode::literal ? "literal" : "corrected"; }

void MismatchSpec::validate() const {
    if (!(upper_limit > 0.0) || !std::isfinite(upper_limit)) throw DomainError("mismatch spec: upper_limit must be > 0");
    if (!(exponent_used >= 1.0) || !std::isfinite(exponent_used)) throw DomainError("mismatch spec: exponent must be >= 1");
    if (!(coefficient > 0.0) || std::abs(coefficient * upper_limit - 1.0) > 0.05) {
        throw DomainError("mismatch spec: coefficient * upper_limit must be within 5% of 1");
    }
}

MismatchSpec exact_mismatch_spec(double n, Comparator comparator) {
    if (!(n >= 1.0)) throw DomainError("exact_mismatch_spec: n must be >= 1");
    const double limit = std::sqrt(2.0 * n * (n + 1.0));
    return MismatchSpec{n, n, 1.0 / limit, limit, comparator};
}

ErrorReport mismatch_integral(const MismatchSpec& spec, const numerics::Tolerance& tol) {
    spec.validate();
    const bool literal = spec.comparator == Comparator::literal_erf;
    auto integrand = [&](double x) {
        const double base = std::max(1.0 - spec.coefficient * x, 0.0);
        const double reference = literal ? numerics::erf(x) : numerics::erfc(0.5 * x);
        const double d = std::pow(base, spec.exponent_used) - reference;
        return d * d;
    };
    // Integrate the layer and the clamped tail separately so the kink at the
    // front sits on a panel edge.
    const double front = 1.0 / spec.coefficient;
    if (front < spec.upper_limit) {
        const auto a = numerics::integrate_with_error(integrand, 0.0, front, tol);
        const auto b = numerics::integrate_with_error(integrand, front, spec.upper_limit, tol);
        return ErrorReport{spec, a.value + b.value, a.error_estimate + b.error_estimate};
    }
    const auto r = numerics::integrate_with_error(integrand, 0.0, spec.upper_limit, tol);
    return ErrorReport{spec, r.value, r.error_estimate};
}

std::vector<MismatchSpec> published_benchmark_rows() {
    constexpr auto lit = Comparator::literal_erf;
    return {
        {1.75, 1.75, 0.332, 3.1, lit},  {2.0, 2.0, 0.288, 3.46, lit},  {3.0, 3.0, 0.204, 4.89, lit},
        {3.65, 3.75, 0.167, 5.96, lit}, {4.0, 4.0, 0.158, 6.32, lit},  {20.0, 20.0, 0.034, 28.98, lit},
    };
}

std::vector<double> published_benchmark_values() { return {1.64674, 1.91332, 3.207569, 4.20960, 4.5567, 26.9550}; }

LangfordResult langford_E(ProblemClass cls, double n, double alpha_t, double amplitude_scale) {
    if (!(n > 1.0)) throw DomainError("langford_E: n must be > 1");
    if (!(alpha_t > 0.0)) throw DegenerateTimeError("langford_E: alpha t must be > 0");
    if (cls != ProblemClass::pt && cls != ProblemClass::pf) {
        throw DomainError("langford_E: defined for the PT and PF classes only");
    }
    const bool flux_class = cls == ProblemClass::pf;
    const double k2 = flux_class ? n * (n + 1.0) : 2.0 * n * (n + 1.0);
    const double k = std::sqrt(k2);
    const double depth = k * std::sqrt(alpha_t);
    const double amplitude = flux_class ? amplitude_scale * depth / n : amplitude_scale;
    constexpr double inf = std::numeric_limits<double>::infinity();

    if (n <= 1.5) return {inf, inf, false};

    // With u = x/depth the residual is (amplitude/depth^2) R(u),
    //   R = n(n-1) w^(n-2) - (k^2/2) (g w^n + n u w^(n-1)),  w = 1 - u,
    // where g = 1 when the amplitude grows as sqrt(t) (PF) and 0 otherwise.
    // Substituting w = s^m with m (2n - 3) >= 1 removes the endpoint singularity.
    const double g = flux_class ? 1.0 : 0.0;
    const double m = n >= 2.0 ? 1.0 : 1.0 / (2.0 * n - 3.0);
    const double half_jacobian = 0.5 * (m - 1.0);
    auto integrand = [&](double s) {
        const double w = std::pow(s, m);
        const double u = 1.0 - w;
        const double r = n * (n - 1.0) * std::pow(s, m * (n - 2.0) + half_jacobian) -
                         0.5 * k2 *
                             (g * std::pow(s, m * n + half_jacobian) +
                              n * u * std::pow(s, m * (n - 1.0) + half_jacobian));
        return m * r * r;
    };

    double integral = 0.0;
    bool converged = true;
    try {
        integral = numerics::integrate(integrand, 0.0, 1.0, {1e-300, 1e-12, 1});
    } catch (const NonConvergenceError& e) {
        integral = e.best_estimate();
        converged = false;
    }
    const double e_n = integral / (k2 * k);
    const double E = amplitude * amplitude * integral / (depth * depth * depth);
    return {E, e_n, converged};
}

double delta_Q(double n, ProblemClass cls) {
    if (cls != ProblemClass::pt) throw DomainError("delta_Q: defined for the PT class");
    if (!(n > 1.0)) throw DomainError("delta_Q: n must be > 1");
    return std::sqrt(2.0 * n * (n + 1.0)) / (n + 1.0) - 2.0 / kSqrtPi;
}

double accuracy_ratio(double e_a, double e_b) {
    if (e_b == 0.0) throw DivisionError("accuracy_ratio: reference value is zero");
    if (!(e_b > 0.0)) throw DomainError("accuracy_ratio: reference value must be > 0");
    return (e_a - e_b) / e_b;
}

}  // namespace hbim
