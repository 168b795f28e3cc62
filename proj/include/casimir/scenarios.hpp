#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/profile_table.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Geometry and physics of one gear configuration.
///
/// Open gear: cylinder radius a, polarizable object at r = y a, angle beta.
/// Concentric: inner cylinder radius a, outer shell radius b = y a; the moving cog sits on
/// the inner face of the shell. In both cases `cog_angles` lists the angular positions of the
/// cogs on the inner cylinder; each pairs with the single outer/off-surface cog at beta.
struct GearScenario {
    GearKind kind = GearKind::open_gear;
    double y = 5.0;
    std::vector<double> cog_angles{0.0};
    double alpha_product = 1.0;  ///< alpha_1 alpha_2, length^6
    double a = 1.0;              ///< cylinder radius, length
    quad::ModeSumSpec mode_spec;
    quad::QuadratureSpec quad_spec;

    void validate() const;
};

/// `count` equally spaced cog angles starting at 0.
std::vector<double> equally_spaced_cogs(int count);

/// Uniform half-open grid on [0, 2 pi).
std::vector<double> uniform_beta_grid(int steps);

/// Change of F and T when one more mode is added.
struct Truncation {
    double energy_change = 0.0;
    double torque_change = 0.0;

    /// Single beta: scales |F| and |F| + |T| (T vanishes at symmetry points).
    /// Sweeps: max |F| and max(max |T|, max |F|) over the grid.
    bool within(double tol, double energy_scale, double torque_scale) const;
};

/// Profile table of a scenario plus the superposition over cogs. Immutable once built,
/// safe to share between threads.
class GearModel {
public:
    explicit GearModel(GearScenario scenario, Execution exec = Execution::parallel);

    const GearScenario& scenario() const { return scenario_; }
    const quad::ProfileTable& table() const { return table_; }

    double energy(double beta) const;
    double torque(double beta) const;
    quad::EnergyParts energy_parts(double beta) const;
    Truncation truncation(double beta) const;

private:
    double sum_over_cogs(double beta, int m_max, bool want_torque) const;

    GearScenario scenario_;
    quad::ProfileTable table_;
};

double dimensionless_energy(const GearScenario& s, double beta);
double dimensionless_torque(const GearScenario& s, double beta);

struct PhysicalValues {
    double energy = 0.0;
    double torque = 0.0;
};

/// alpha_1 alpha_2 / (4 a^7) times (F, T).
PhysicalValues physical_energy_torque(const GearScenario& s, double beta);
PhysicalValues to_physical(const GearScenario& s, double energy, double torque);

struct SweepRow {
    double beta = 0.0;
    double energy = 0.0;  ///< F
    double torque = 0.0;  ///< T
    Truncation truncation;
    bool converged = true;
};

struct SweepTable {
    GearScenario scenario;
    std::vector<SweepRow> rows;
    double quadrature_error = 0.0;  ///< bound from the eta quadrature, F units
    int eta_nodes = 0;
    std::string version;
};

/// Raised by sweep() when a row fails its truncation check; carries every computed row.
class SweepError : public ConvergenceError {
public:
    SweepError(const std::string& what, double change, SweepTable partial)
        : ConvergenceError(what, change), partial_(std::move(partial)) {}

    const SweepTable& partial() const { return partial_; }

private:
    SweepTable partial_;
};

SweepTable sweep(const GearScenario& s, std::span<const double> beta_grid, Execution exec = Execution::parallel);

const char* version();

}  // namespace casimir
