#pragma once

#include "hbim/hbim_core.hpp"
#include "hbim/numerics.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hbim {

/// A relation between the exponent n and the depth ratio delta / sqrt(alpha t).
enum class Constraint {
    flux_match_pt,          ///< approximate and exact surface flux agree: n sqrt(pi)
    heat_match_pt,          ///< layer heat equals the time-integrated exact flux: 2(n+1)/sqrt(pi)
    heat_match_pf,          ///< layer heat equals F t: sqrt(n(n+1))
    surface_temp_match_pf,  ///< approximate and exact surface temperature agree: 2n/sqrt(pi)
    hbi_depth_pt,           ///< heat-balance integral depth law: sqrt(2n(n+1))
    hbi_depth_pf,           ///< sqrt(n(n+1))
    veinik_pt,              ///< surface heat-rate balance, same law as hbi_depth_pt
    veinik_pf,
    mokrushin_midpoint,     ///< mid-layer balance at x = delta/2: sqrt(8n(n+1))
    mokrushin_flux_group,   ///< sqrt(8n(n+1) group), group being Bi or phi0; estimator only
};

enum class GroupKind { biot, phi0 };

struct ConstraintKind {
    Constraint tag;
    double group = 1.0;
    GroupKind which = GroupKind::phi0;

    bool operator==(const ConstraintKind&) const = default;
};

std::string to_string(const ConstraintKind& c);

struct ExponentSolution {
    double n;
    double depth_ratio;
    double residual;
    std::pair<ConstraintKind, ConstraintKind> pair;
};

/// Tuning-coefficient pattern used by scaling_estimate.
enum class ScalingPattern {
    veinik,     ///< delta/sqrt(alpha t) ~ n sqrt(2)
    mokrushin,  ///< delta/sqrt(alpha t) ~ 2 n sqrt(2)
};

struct ScalingEstimate {
    double n_estimate;
    double tuning_coefficient;
    double group;
};

inline constexpr double kExponentLo = 1.0 + 1e-6;
inline constexpr double kExponentHi = 100.0;
inline constexpr numerics::Tolerance kExponentTolerance{1e-12, 1e-12, 400};

/// Value of the constraint curve at n; throws DomainError for n <= 1.
double depth_ratio(const ConstraintKind& kind, double n);

/// Intersection of two constraint curves on [kExponentLo, kExponentHi].
/// Throws DomainError if c1 == c2 and NoSolutionError if the curves do not cross.
ExponentSolution solve_exponent(const ConstraintKind& c1, const ConstraintKind& c2,
                                const numerics::Tolerance& tol = kExponentTolerance);

/// PT and sphere: 2/(pi - 2). PF: pi/(4 - pi). Over-specified has no constant exponent.
double closed_form_exponent(ProblemClass cls);

/// The constraint pair that fixes the exponent for a problem class.
std::pair<ConstraintKind, ConstraintKind> canonical_pair(ProblemClass cls);

/// Solves the canonical pair for the problem. Depends only on the problem class:
/// the constraints are dimensionless, so units and magnitudes never enter.
ExponentSolution solve_problem(const BoundaryProblem& problem, const Medium& m);

/// n ~ p (depth_ratio / divisor) / sqrt(group), divisor sqrt(2) or 2 sqrt(2).
ScalingEstimate scaling_estimate(double depth_ratio, double group, double p,
                                 ScalingPattern pattern = ScalingPattern::veinik);

struct PairOutcome {
    std::pair<ConstraintKind, ConstraintKind> pair;
    std::optional<double> n;
    std::optional<double> depth_ratio;
    double residual = 0.0;
    bool agrees = false;  ///< n within 1e-9 of the class exponent
    std::string note;
};

/// Every meaningful pairwise intersection for the class. Pairs without a
/// crossing are reported with an empty n rather than thrown.
std::vector<PairOutcome> consistency_report(ProblemClass cls);

}  // namespace hbim
