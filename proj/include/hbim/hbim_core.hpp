#pragma once

#include "hbim/medium.hpp"

#include <optional>
#include <utility>
#include <variant>

namespace hbim {

/// Which integral of (1 - u)^n the depth laws and heat content use.
///
/// `consistent` uses 1/(n+1), the value of the integral. `literal_minus_one`
/// reproduces the (n-1) factors that appear in some published forms of these
/// laws; it exists for comparison only and is never used by default.
enum class DepthLaw { consistent, literal_minus_one };

/// T(x) = base + amplitude (1 - (x - origin)/depth)^n inside the layer and
/// T = base beyond the front at origin + depth.
class PowerLawProfile {
public:
    /// Throws DomainError unless depth > 0 and exponent >= 1.
    PowerLawProfile(double base_temp, double amplitude, double depth, double exponent, double origin_offset = 0.0);

    double base_temp() const noexcept { return base_; }
    double amplitude() const noexcept { return amplitude_; }
    double depth() const noexcept { return depth_; }
    double exponent() const noexcept { return exponent_; }
    double origin_offset() const noexcept { return origin_; }
    double front() const noexcept { return origin_ + depth_; }

    bool operator==(const PowerLawProfile&) const = default;

private:
    double base_;
    double amplitude_;
    double depth_;
    double exponent_;
    double origin_;
};

struct PtProblem {
    double surface_temp;
    double far_temp;
};

struct PfProblem {
    double flux;
    double far_temp;
};

/// Both surface temperature and surface flux imposed on a slab of thickness h0.
struct OverSpecifiedProblem {
    double surface_temp;
    double far_temp;
    double flux;
    double thickness;
};

/// Sphere of radius r0 held at Ts in an infinite medium initially at Tinf.
struct SpherePtProblem {
    double radius;
    double surface_temp;
    double far_temp;
};

using BoundaryProblem = std::variant<PtProblem, PfProblem, OverSpecifiedProblem, SpherePtProblem>;

enum class ProblemClass { pt, pf, overspecified, sphere };

ProblemClass problem_class(const BoundaryProblem& p);

/// Throws DomainError on Ts == Tinf, F == 0, h0 <= 0, r0 < 0 or non-finite data.
void validate(const BoundaryProblem& p);

struct DimensionlessGroups {
    double phi;     ///< F / (lambda (Ts - Tinf)), 1/m
    double phi0;    ///< phi h0, the radiation-conduction number
    std::optional<double> biot;
    double fourier_thickness;  ///< alpha t / h0^2
    double fourier_flux;       ///< alpha phi^2 t
};

struct OverSpecifiedState {
    double depth;
    double exponent;  ///< n = phi * depth
    double heatup_time;
    DimensionlessGroups groups;
};

/// Sphere solution held in U = r (T - Tinf); U vanishes at the front.
struct SphereSolution {
    PowerLawProfile u_profile;
    double far_temp;

    /// T(r) = Tinf + U(r) / r. Requires r >= r0 and r > 0.
    double temperature(double r) const;
};

double evaluate(const PowerLawProfile& profile, double x);

double pt_depth(double n, double diffusivity, double t, DepthLaw law = DepthLaw::consistent);
double pf_depth(double n, double diffusivity, double t, DepthLaw law = DepthLaw::consistent);

PowerLawProfile pt_profile(double n, const Medium& m, double surface_temp, double far_temp, double t,
                           DepthLaw law = DepthLaw::consistent);
PowerLawProfile pf_profile(double n, const Medium& m, double flux, double far_temp, double t,
                           DepthLaw law = DepthLaw::consistent);

/// lambda * amplitude * n / depth.
double surface_flux_approx(const PowerLawProfile& profile, double conductivity);

/// rho Cp amplitude depth / (n + 1), or / (n - 1) under the literal law.
double accumulated_heat_approx(const PowerLawProfile& profile, const Medium& m, DepthLaw law = DepthLaw::consistent);

/// Heat-up stage of the over-specified slab: delta = (exp(alpha phi^2 t) - 1)/phi, n = phi delta,
/// valid for 0 < t <= t_h = ln(1 + phi0) / (alpha phi^2). Later times throw StageExceededError.
OverSpecifiedState overspecified_solve(const Medium& m, const OverSpecifiedProblem& prob, double t);

double overspecified_profile(const OverSpecifiedState& state, const OverSpecifiedProblem& prob, double x);

SphereSolution sphere_solve(double n, const Medium& m, const SpherePtProblem& prob, double t,
                            DepthLaw law = DepthLaw::consistent);

/// Normalised heat-balance residual |dI/dt - q0| / |q0| at time t, where I is the
/// layer excess integral (by quadrature) and q0 = -alpha dT/dx at the surface.
/// `depth_scale` multiplies the depth law; anything but 1 breaks the balance.
double hbi_residual(const BoundaryProblem& problem, double n, const Medium& m, double t, double depth_scale = 1.0);

/// First and second x-derivatives of the profile at its front. Both are zero
/// for every n > 2, so front conditions alone cannot fix the exponent.
std::pair<double, double> front_degeneracy_check(double n, double amplitude = 1.0, double depth = 1.0);

}  // namespace hbim
