#pragma once

#include "hbim/hbim_core.hpp"
#include "hbim/numerics.hpp"

#include <string>
#include <vector>

namespace hbim {

/// Reference field the approximate profile is compared against.
enum class Comparator {
    literal_erf,         ///< erf(X), the published integrand
    corrected_erfc_half  ///< erfc(X/2), the exact dimensionless PT field at X = x/sqrt(alpha t)
};

enum class ErrorMode { literal, corrected };

std::string to_string(Comparator c);
std::string to_string(ErrorMode m);

/// One row of the profile-mismatch table: integral over [0, upper_limit] of
/// [(1 - coefficient X)^exponent_used - C(X)]^2 dX.
struct MismatchSpec {
    double n_label;
    double exponent_used;
    double coefficient;
    double upper_limit;
    Comparator comparator;

    /// Throws DomainError unless upper_limit > 0, exponent_used >= 1 and
    /// coefficient * upper_limit is within 5% of 1.
    void validate() const;

    bool operator==(const MismatchSpec&) const = default;
};

struct ErrorReport {
    MismatchSpec spec;
    double value;
    double quadrature_error_estimate;
};

/// Mismatch spec built from the PT depth law: coefficient 1/sqrt(2n(n+1)),
/// upper limit sqrt(2n(n+1)).
MismatchSpec exact_mismatch_spec(double n, Comparator comparator);

ErrorReport mismatch_integral(const MismatchSpec& spec, const numerics::Tolerance& tol = {1e-12, 1e-12, 1});

/// The six published rows, literal comparator. The 3.65 row integrates with exponent 3.75.
std::vector<MismatchSpec> published_benchmark_rows();

/// Published values of the six rows, in the same order.
std::vector<double> published_benchmark_values();

struct LangfordResult {
    double E;
    double e_n;  ///< E (alpha t)^{3/2} / amplitude^2, independent of t
    bool converged;
};

/// Squared heat-equation residual of the power-law profile integrated over the layer.
///
/// `alpha_t` is the product alpha t (alpha = 1). `amplitude_scale` is Ts - Tinf for
/// PT and F/lambda for PF. The integral is improper for n < 2 and diverges for
/// n <= 1.5; divergence is reported through `converged`, not thrown.
LangfordResult langford_E(ProblemClass cls, double n, double alpha_t, double amplitude_scale = 1.0);

/// (Q_a - Q_e) / (rho Cp dT sqrt(alpha t)) = sqrt(2n(n+1))/(n+1) - 2/sqrt(pi).
double delta_Q(double n, ProblemClass cls = ProblemClass::pt);

/// (E_a - E_b) / E_b.
double accuracy_ratio(double e_a, double e_b);

}  // namespace hbim
