#include "hbim/exact_ref.hpp"

#include "hbim/errors.hpp"
#include "hbim/numerics.hpp"

#include <cmath>
#include <numbers>

namespace hbim {

Medium Medium::from_properties(double conductivity, double density, double heat_capacity) {
    if (!(conductivity > 0.0) || !(density > 0.0) || !(heat_capacity > 0.0) || !std::isfinite(conductivity) ||
        !std::isfinite(density) || !std::isfinite(heat_capacity)) {
        throw DomainError("medium: conductivity, density and heat capacity must be finite and > 0");
    }
    Medium m;
    m.conductivity_ = conductivity;
    m.density_ = density;
    m.heat_capacity_ = heat_capacity;
    m.diffusivity_ = conductivity / (density * heat_capacity);
    return m;
}

Medium::Medium(double conductivity, double density, double heat_capacity, double diffusivity) {
    *this = from_properties(conductivity, density, heat_capacity);
    if (!(diffusivity > 0.0) || std::abs(diffusivity - diffusivity_) > 1e-12 * diffusivity) {
        throw DomainError("medium: diffusivity inconsistent with conductivity / (density * heat capacity)");
    }
    diffusivity_ = diffusivity;
}

}  // namespace hbim

namespace hbim::exact {

namespace {

void require_position(double x) {
    if (!(x >= 0.0)) throw DomainError("position must be >= 0");
}

}  // namespace

double pt_temperature(const Medium& m, double surface_temp, double far_temp, double x, double t) {
    require_position(x);
    if (x == 0.0) return surface_temp;
    if (t == 0.0) return far_temp;
    if (!(t > 0.0)) throw DegenerateTimeError("pt_temperature: t must be > 0 away from the surface");
    const double eta = x / (2.0 * std::sqrt(m.diffusivity() * t));
    return surface_temp + (far_temp - surface_temp) * numerics::erf(eta);
}

double pt_surface_flux(const Medium& m, double surface_temp, double far_temp, double t) {
    if (!(t > 0.0)) throw DegenerateTimeError("pt_surface_flux: t must be > 0");
    return m.conductivity() * (surface_temp - far_temp) / std::sqrt(std::numbers::pi * m.diffusivity() * t);
}

double pt_accumulated_heat(const Medium& m, double surface_temp, double far_temp, double t) {
    if (!(t >= 0.0)) throw DegenerateTimeError("pt_accumulated_heat: t must be >= 0");
    return 2.0 * m.conductivity() * (surface_temp - far_temp) * std::sqrt(t / (std::numbers::pi * m.diffusivity()));
}

double pf_temperature(const Medium& m, double flux, double far_temp, double x, double t) {
    require_position(x);
    if (t == 0.0) return far_temp;
    if (!(t > 0.0)) throw DegenerateTimeError("pf_temperature: t must be > 0");
    const double diffusion_length = std::sqrt(m.diffusivity() * t);
    return far_temp + 2.0 * flux / m.conductivity() * diffusion_length * numerics::ierfc(x / (2.0 * diffusion_length));
}

double sphere_u(const Medium& m, double surface_u, double far_u, double r0, double r, double t) {
    if (!(r >= r0)) throw DomainError("sphere_u: r must be >= r0");
    return pt_temperature(m, surface_u, far_u, r - r0, t);
}

}  // namespace hbim::exact
