#pragma once

namespace hbim {

/// Thermophysical constants of a homogeneous conducting medium (SI units).
///
/// Diffusivity is always consistent with conductivity / (density * heat capacity)
/// to 1e-12 relative.
class Medium {
public:
    /// Derives diffusivity from the other three properties.
    static Medium from_properties(double conductivity, double density, double heat_capacity);

    /// All four given; throws DomainError if they are inconsistent.
    Medium(double conductivity, double density, double heat_capacity, double diffusivity);

    /// lambda = rho = Cp = alpha = 1, the dimensionless medium.
    static Medium unit() { return from_properties(1.0, 1.0, 1.0); }

    double conductivity() const noexcept { return conductivity_; }
    double density() const noexcept { return density_; }
    double heat_capacity() const noexcept { return heat_capacity_; }
    double diffusivity() const noexcept { return diffusivity_; }
    double volumetric_heat_capacity() const noexcept { return density_ * heat_capacity_; }

    bool operator==(const Medium&) const = default;

private:
    Medium() = default;

    double conductivity_ = 1.0;
    double density_ = 1.0;
    double heat_capacity_ = 1.0;
    double diffusivity_ = 1.0;
};

}  // namespace hbim
