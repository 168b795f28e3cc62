#pragma once

#include "casimir/quadrature.hpp"

namespace casimir::reference {

/// Serial reference evaluation, kept for testing the tabulated parallel path.
///
/// Every beta runs its own adaptive eta quadrature; every eta node recomputes each
/// k_z profile with the scalar kz_profile. No caching, no threads.
struct EnergyTorque {
    double energy = 0.0;
    double torque = 0.0;
};

EnergyTorque energy_torque(GearKind kind, double beta, double y, int m_max, const quad::QuadratureSpec& spec);

}  // namespace casimir::reference
