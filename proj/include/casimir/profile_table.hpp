#pragma once

#include <vector>

#include "casimir/quadrature.hpp"

namespace casimir::quad {

/// k_z profiles tabulated on a beta-independent eta quadrature.
///
/// The energy integrand is a quadratic form in the profiles, so one table serves every
/// beta, every cog arrangement and every truncation m_max <= max_order. The eta panels
/// are refined until the Kronrod/Gauss discrepancy of all weighted pair products
/// P_m P_m' is within tolerance, which bounds the error uniformly in beta.
struct ProfileTable {
    GearKind kind = GearKind::open_gear;
    double y = 0.0;
    int max_order = 0;
    std::vector<double> eta;
    std::vector<double> weight;
    /// V1 profiles, node-major: odd[node * (max_order + 1) + m]. Empty for the concentric gear.
    std::vector<double> odd;
    /// V2 profiles (open gear) or rr profiles (concentric), same layout.
    std::vector<double> even;
    double error_bound = 0.0;  ///< bound on the energy error, dimensionless F units
    int panels = 0;

    std::size_t nodes() const { return eta.size(); }
    std::size_t stride() const { return static_cast<std::size_t>(max_order) + 1; }
};

ProfileTable build_profile_table(GearKind kind, double y, int max_order, const QuadratureSpec& spec,
                                 Execution exec = Execution::parallel);

/// Energy split into the V1 (odd) and V2 (even) squares; both are <= 0.
struct EnergyParts {
    double odd = 0.0;
    double even = 0.0;

    double total() const { return odd + even; }
};

EnergyParts energy_parts(const ProfileTable& table, double beta, int m_max);

/// F(y, beta) for a single cog pair.
double energy(const ProfileTable& table, double beta, int m_max);

/// T(y, beta) = -dF/dbeta, differentiated term by term in the mode sums.
double torque(const ProfileTable& table, double beta, int m_max);

/// Energy integrand s1^2 + s2^2 (open) or s^2 (concentric) at one table node.
EnergyParts node_squares(const ProfileTable& table, std::size_t node, double beta, int m_max);

}  // namespace casimir::quad
