#pragma once

#include "hbim/medium.hpp"

// Closed-form semi-infinite solutions used as the reference side of every
// constraint and error measure.
namespace hbim::exact {

/// Prescribed surface temperature: Ts + (Tinf - Ts) erf(x / 2sqrt(alpha t)).
/// At t == 0 returns the limit (Ts at x == 0, Tinf beyond); t < 0 with x > 0 throws.
double pt_temperature(const Medium& m, double surface_temp, double far_temp, double x, double t);

/// lambda (Ts - Tinf) / sqrt(pi alpha t).
double pt_surface_flux(const Medium& m, double surface_temp, double far_temp, double t);

/// Time integral of the surface flux: 2 lambda (Ts - Tinf) sqrt(t / (pi alpha)).
double pt_accumulated_heat(const Medium& m, double surface_temp, double far_temp, double t);

/// Constant surface flux F: Tinf + (2F/lambda) sqrt(alpha t) ierfc(x / 2sqrt(alpha t)).
double pf_temperature(const Medium& m, double flux, double far_temp, double x, double t);

/// Sphere of radius r0 in the variable U = r T: the slab PT field in r - r0.
double sphere_u(const Medium& m, double surface_u, double far_u, double r0, double r, double t);

}  // namespace hbim::exact
