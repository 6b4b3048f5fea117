#include "hbim/hbim_core.hpp"

#include "hbim/errors.hpp"
#include "hbim/numerics.hpp"

#include <cmath>
#include <string>

namespace hbim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

void require_exponent(double n) {
    if (!(n >= 1.0) || !std::isfinite(n)) throw DomainError("exponent must be finite and >= 1");
}

void require_positive_time(double t, const char* who) {
    if (!(t > 0.0)) throw DegenerateTimeError(std::string(who) + ": t must be > 0");
}

// delta^2 / (alpha t) for the two boundary classes.
double pt_depth_factor(double n, DepthLaw law) {
    return law == DepthLaw::consistent ? 2.0 * n * (n + 1.0) : 2.0 * n * (n - 1.0);
}

double pf_depth_factor(double n, DepthLaw law) {
    return law == DepthLaw::consistent ? n * (n + 1.0) : n * (n - 1.0);
}

double depth_from_factor(double factor, double n, double diffusivity, double t) {
    require_exponent(n);
    if (!(t >= 0.0)) throw DegenerateTimeError("depth: t must be >= 0");
    if (!(diffusivity > 0.0)) throw DomainError("depth: diffusivity must be > 0");
    return std::sqrt(factor * diffusivity * t);
}

double excess_heat_integral(const PowerLawProfile& p) {
    const numerics::Tolerance tol{1e-300, 1e-13, 1};
    const double base = p.base_temp();
    return numerics::integrate([&](double x) { return evaluate(p, x) - base; }, p.origin_offset(), p.front(), tol);
}

}  // namespace

PowerLawProfile::PowerLawProfile(double base_temp, double amplitude, double depth, double exponent,
                                 double origin_offset)
    : base_(base_temp), amplitude_(amplitude), depth_(depth), exponent_(exponent), origin_(origin_offset) {
    require_finite(base_temp, "base temperature");
    require_finite(amplitude, "amplitude");
    require_finite(origin_offset, "origin offset");
    if (!(depth > 0.0) || !std::isfinite(depth)) throw DomainError("profile depth must be finite and > 0");
    require_exponent(exponent);
}

ProblemClass problem_class(const BoundaryProblem& p) {
    return std::visit(Overloaded{
                          [](const PtProblem&) { return ProblemClass::pt; },
                          [](const PfProblem&) { return ProblemClass::pf; },
                          [](const OverSpecifiedProblem&) { return ProblemClass::overspecified; },
                          [](const SpherePtProblem&) { return ProblemClass::sphere; },
                      },
                      p);
}

void validate(const BoundaryProblem& p) {
    std::visit(Overloaded{
                   [](const PtProblem& q) {
                       require_finite(q.surface_temp, "Ts");
                       require_finite(q.far_temp, "Tinf");
                       if (q.surface_temp == q.far_temp) throw DomainError("PT problem requires Ts != Tinf");
                   },
                   [](const PfProblem& q) {
                       require_finite(q.flux, "F");
                       require_finite(q.far_temp, "Tinf");
                       if (q.flux == 0.0) throw DomainError("PF problem requires F != 0");
                   },
                   [](const OverSpecifiedProblem& q) {
                       require_finite(q.surface_temp, "Ts");
                       require_finite(q.far_temp, "Tinf");
                       require_finite(q.flux, "F");
                       require_finite(q.thickness, "h0");
                       if (q.surface_temp == q.far_temp) throw DomainError("over-specified problem requires Ts != Tinf");
                       if (q.flux == 0.0) throw DomainError("over-specified problem requires F != 0");
                       if (!(q.thickness > 0.0)) throw DomainError("over-specified problem requires h0 > 0");
                   },
                   [](const SpherePtProblem& q) {
                       require_finite(q.surface_temp, "Ts");
                       require_finite(q.far_temp, "Tinf");
                       require_finite(q.radius, "r0");
                       if (q.surface_temp == q.far_temp) throw DomainError("sphere problem requires Ts != Tinf");
                       if (!(q.radius >= 0.0)) throw DomainError("sphere problem requires r0 >= 0");
                   },
               },
               p);
}

double evaluate(const PowerLawProfile& profile, double x) {
    if (!(x >= profile.origin_offset())) throw DomainError("evaluate: x lies before the profile origin");
    const double u = (x - profile.origin_offset()) / profile.depth();
    if (u >= 1.0) return profile.base_temp();
    return profile.base_temp() + profile.amplitude() * std::pow(1.0 - u, profile.exponent());
}

double pt_depth(double n, double diffusivity, double t, DepthLaw law) {
    return depth_from_factor(pt_depth_factor(n, law), n, diffusivity, t);
}

double pf_depth(double n, double diffusivity, double t, DepthLaw law) {
    return depth_from_factor(pf_depth_factor(n, law), n, diffusivity, t);
}

PowerLawProfile pt_profile(double n, const Medium& m, double surface_temp, double far_temp, double t, DepthLaw law) {
    require_positive_time(t, "pt_profile");
    return {far_temp, surface_temp - far_temp, pt_depth(n, m.diffusivity(), t, law), n};
}

PowerLawProfile pf_profile(double n, const Medium& m, double flux, double far_temp, double t, DepthLaw law) {
    require_positive_time(t, "pf_profile");
    const double depth = pf_depth(n, m.diffusivity(), t, law);
    return {far_temp, flux * depth / (m.conductivity() * n), depth, n};
}

double surface_flux_approx(const PowerLawProfile& profile, double conductivity) {
    return conductivity * profile.amplitude() * profile.exponent() / profile.depth();
}

double accumulated_heat_approx(const PowerLawProfile& profile, const Medium& m, DepthLaw law) {
    const double n = profile.exponent();
    const double denom = law == DepthLaw::consistent ? n + 1.0 : n - 1.0;
    return m.volumetric_heat_capacity() * profile.amplitude() * profile.depth() / denom;
}

OverSpecifiedState overspecified_solve(const Medium& m, const OverSpecifiedProblem& prob, double t) {
    validate(prob);
    require_positive_time(t, "overspecified_solve");
    const double alpha = m.diffusivity();
    const double phi = prob.flux / (m.conductivity() * (prob.surface_temp - prob.far_temp));
    if (!(phi > 0.0)) {
        throw DomainError("overspecified_solve: flux must drive heat from the surface (F / (Ts - Tinf) > 0)");
    }
    const double phi0 = phi * prob.thickness;
    const double heatup = std::log1p(phi0) / (alpha * phi * phi);
    if (t > heatup) {
        throw StageExceededError("overspecified_solve: t = " + std::to_string(t) + " exceeds the heat-up time " +
                                     std::to_string(heatup) + "; the layer has reached the slab thickness",
                                 heatup);
    }
    const double fourier_flux = alpha * phi * phi * t;
    const double depth = std::expm1(fourier_flux) / phi;
    return OverSpecifiedState{
        .depth = depth,
        .exponent = phi * depth,
        .heatup_time = heatup,
        .groups = DimensionlessGroups{.phi = phi,
                                      .phi0 = phi0,
                                      .biot = std::nullopt,
                                      .fourier_thickness = alpha * t / (prob.thickness * prob.thickness),
                                      .fourier_flux = fourier_flux},
    };
}

double overspecified_profile(const OverSpecifiedState& state, const OverSpecifiedProblem& prob, double x) {
    if (!(x >= 0.0)) throw DomainError("overspecified_profile: x must be >= 0");
    if (x >= state.depth) return prob.far_temp;
    return prob.far_temp + (prob.surface_temp - prob.far_temp) * std::pow(1.0 - x / state.depth, state.exponent);
}

double SphereSolution::temperature(double r) const {
    if (!(r > 0.0)) throw DomainError("sphere temperature: r must be > 0");
    return far_temp + evaluate(u_profile, r) / r;
}

SphereSolution sphere_solve(double n, const Medium& m, const SpherePtProblem& prob, double t, DepthLaw law) {
    validate(prob);
    require_positive_time(t, "sphere_solve");
    const double surface_u = prob.radius * (prob.surface_temp - prob.far_temp);
    return SphereSolution{
        .u_profile = PowerLawProfile(0.0, surface_u, pt_depth(n, m.diffusivity(), t, law), n, prob.radius),
        .far_temp = prob.far_temp,
    };
}

double hbi_residual(const BoundaryProblem& problem, double n, const Medium& m, double t, double depth_scale) {
    validate(problem);
    require_positive_time(t, "hbi_residual");
    if (!(depth_scale > 0.0)) throw DomainError("hbi_residual: depth_scale must be > 0");
    const double alpha = m.diffusivity();

    const auto* over = std::get_if<OverSpecifiedProblem>(&problem);

    auto profile_at = [&](double time) -> PowerLawProfile {
        if (const auto* q = std::get_if<PtProblem>(&problem)) {
            const double d = depth_scale * pt_depth(n, alpha, time);
            return {q->far_temp, q->surface_temp - q->far_temp, d, n};
        }
        if (const auto* q = std::get_if<PfProblem>(&problem)) {
            const double d = depth_scale * pf_depth(n, alpha, time);
            return {q->far_temp, q->flux * d / (m.conductivity() * n), d, n};
        }
        const auto& q = std::get<SpherePtProblem>(problem);
        const double d = depth_scale * pt_depth(n, alpha, time);
        return {0.0, q.radius * (q.surface_temp - q.far_temp), d, n, q.radius};
    };

    // The over-specified exponent n(t) = phi delta(t) follows the state and may
    // be below 1 early on, so its layer integral uses the closed form.
    auto excess_integral = [&](double time) -> double {
        if (over) {
            const OverSpecifiedState s = overspecified_solve(m, *over, time);
            return (over->surface_temp - over->far_temp) * depth_scale * s.depth / (s.exponent + 1.0);
        }
        return excess_heat_integral(profile_at(time));
    };
    auto surface_term = [&](double time) -> double {
        if (over) {
            const OverSpecifiedState s = overspecified_solve(m, *over, time);
            return alpha * (over->surface_temp - over->far_temp) * s.exponent / (depth_scale * s.depth);
        }
        const PowerLawProfile p = profile_at(time);
        return alpha * p.amplitude() * p.exponent() / p.depth();
    };

    double h = 1e-3 * t;
    double t_hi = t + h;
    double t_lo = t - h;
    if (over) {
        // Stay inside the heat-up stage; one-sided difference at t_h.
        if (t_hi > overspecified_solve(m, *over, t).heatup_time) t_hi = t;
    }
    const double rate = (excess_integral(t_hi) - excess_integral(t_lo)) / (t_hi - t_lo);
    const double flux = surface_term(t);
    return std::abs(rate - flux) / std::abs(flux);
}

std::pair<double, double> front_degeneracy_check(double n, double amplitude, double depth) {
    require_exponent(n);
    if (!(depth > 0.0)) throw DomainError("front_degeneracy_check: depth must be > 0");
    // d/dx [(1 - x/depth)^n] at x = depth, written with the remaining factor 0^k.
    const double first = -amplitude * n / depth * std::pow(0.0, n - 1.0);
    const double second = amplitude * n * (n - 1.0) / (depth * depth) * std::pow(0.0, n - 2.0);
    return {first == 0.0 ? 0.0 : first, second};
}

}  // namespace hbim
