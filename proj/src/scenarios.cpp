#include "casimir/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace casimir {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    return w;
}

}  // namespace

const char* version() { return CASIMIR_VERSION; }

void GearScenario::validate() const {
    if (!(y > 1.0) || !std::isfinite(y)) {
        throw GeometryError("y must be finite and > 1");
    }
    if (cog_angles.empty()) {
        throw GeometryError("at least one cog angle is required");
    }
    std::vector<double> wrapped;
    for (double angle : cog_angles) {
        if (!std::isfinite(angle)) {
            throw GeometryError("cog angles must be finite");
        }
        wrapped.push_back(wrap_angle(angle));
    }
    std::sort(wrapped.begin(), wrapped.end());
    for (std::size_t i = 0; i < wrapped.size(); ++i) {
        const double next = i + 1 < wrapped.size() ? wrapped[i + 1] : wrapped.front() + kTwoPi;
        if (wrapped.size() > 1 && next - wrapped[i] < 1e-12) {
            throw GeometryError("cog angles must be distinct modulo 2 pi");
        }
    }
    if (!(alpha_product >= 0.0) || !std::isfinite(alpha_product)) {
        throw DomainError("alpha_product must be finite and >= 0");
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw GeometryError("cylinder radius a must be finite and > 0");
    }
    mode_spec.validate();
    quad_spec.validate();
}

std::vector<double> equally_spaced_cogs(int count) {
    if (count < 1) {
        throw GeometryError("cog count must be >= 1");
    }
    std::vector<double> angles;
    for (int k = 0; k < count; ++k) {
        angles.push_back(kTwoPi * k / count);
    }
    return angles;
}

std::vector<double> uniform_beta_grid(int steps) {
    if (steps < 2) {
        throw DomainError("beta grid needs at least 2 steps");
    }
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i) {
        grid.push_back(kTwoPi * i / steps);
    }
    return grid;
}

bool Truncation::within(double tol, double energy_scale, double torque_scale) const {
    return energy_change <= tol * energy_scale && torque_change <= tol * torque_scale;
}

GearModel::GearModel(GearScenario scenario, Execution exec) : scenario_(std::move(scenario)) {
    scenario_.validate();
    // one extra order so the truncation estimate comes from the same table
    table_ = quad::build_profile_table(scenario_.kind, scenario_.y, scenario_.mode_spec.m_max + 1,
                                       scenario_.quad_spec, exec);
}

double GearModel::sum_over_cogs(double beta, int m_max, bool want_torque) const {
    double sum = 0.0;
    for (double cog : scenario_.cog_angles) {
        const double relative = beta - cog;
        sum += want_torque ? quad::torque(table_, relative, m_max) : quad::energy(table_, relative, m_max);
    }
    return sum;
}

double GearModel::energy(double beta) const { return sum_over_cogs(beta, scenario_.mode_spec.m_max, false); }

double GearModel::torque(double beta) const { return sum_over_cogs(beta, scenario_.mode_spec.m_max, true); }

quad::EnergyParts GearModel::energy_parts(double beta) const {
    quad::EnergyParts total;
    for (double cog : scenario_.cog_angles) {
        const auto p = quad::energy_parts(table_, beta - cog, scenario_.mode_spec.m_max);
        total.odd += p.odd;
        total.even += p.even;
    }
    return total;
}

Truncation GearModel::truncation(double beta) const {
    const int m = scenario_.mode_spec.m_max;
    return {std::abs(sum_over_cogs(beta, m + 1, false) - sum_over_cogs(beta, m, false)),
            std::abs(sum_over_cogs(beta, m + 1, true) - sum_over_cogs(beta, m, true))};
}

namespace {

void require_converged(const GearModel& model, double beta) {
    const auto& spec = model.scenario().mode_spec;
    if (!spec.convergence_check) {
        return;
    }
    const double f = model.energy(beta);
    const double t = model.torque(beta);
    const auto tr = model.truncation(beta);
    if (!tr.within(spec.truncation_tol, std::abs(f), std::abs(f) + std::abs(t))) {
        const double change = tr.energy_change / std::abs(f);
        throw ConvergenceError("mode sum not converged at m_max = " + std::to_string(spec.m_max) +
                                   " (relative energy change " + std::to_string(change) + ")",
                               change);
    }
}

}  // namespace

double dimensionless_energy(const GearScenario& s, double beta) {
    const GearModel model(s);
    require_converged(model, beta);
    return model.energy(beta);
}

double dimensionless_torque(const GearScenario& s, double beta) {
    const GearModel model(s);
    require_converged(model, beta);
    return model.torque(beta);
}

PhysicalValues to_physical(const GearScenario& s, double energy, double torque) {
    double a7 = s.a;
    for (int i = 0; i < 6; ++i) {
        a7 *= s.a;
    }
    const double prefactor = s.alpha_product / (4.0 * a7);
    return {prefactor * energy, prefactor * torque};
}

PhysicalValues physical_energy_torque(const GearScenario& s, double beta) {
    if (s.alpha_product == 0.0) {
        s.validate();
        return {0.0, 0.0};
    }
    const GearModel model(s);
    require_converged(model, beta);
    return to_physical(s, model.energy(beta), model.torque(beta));
}

SweepTable sweep(const GearScenario& s, std::span<const double> beta_grid, Execution exec) {
    if (beta_grid.empty()) {
        throw DomainError("beta grid is empty");
    }
    for (std::size_t i = 1; i < beta_grid.size(); ++i) {
        if (!(beta_grid[i] > beta_grid[i - 1])) {
            throw DomainError("beta grid must be strictly increasing");
        }
    }
    const GearModel model(s, exec);
    SweepTable table;
    table.scenario = model.scenario();
    table.quadrature_error = model.table().error_bound;
    table.eta_nodes = static_cast<int>(model.table().nodes());
    table.version = version();
    table.rows.resize(beta_grid.size());

    const long count = static_cast<long>(beta_grid.size());
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (long i = 0; i < count; ++i) {
        SweepRow& row = table.rows[static_cast<std::size_t>(i)];
        row.beta = beta_grid[static_cast<std::size_t>(i)];
        row.energy = model.energy(row.beta);
        row.torque = model.torque(row.beta);
        row.truncation = model.truncation(row.beta);
    }

    // F nearly cancels at some beta, so the rows are judged against the sweep-wide scale
    double energy_scale = 0.0;
    double torque_scale = 0.0;
    for (const auto& row : table.rows) {
        energy_scale = std::max(energy_scale, std::abs(row.energy));
        torque_scale = std::max(torque_scale, std::abs(row.torque));
    }
    torque_scale = std::max(torque_scale, energy_scale);
    const auto& spec = s.mode_spec;
    double worst = 0.0;
    bool failed = false;
    for (auto& row : table.rows) {
        row.converged =
            !spec.convergence_check || row.truncation.within(spec.truncation_tol, energy_scale, torque_scale);
        if (!row.converged) {
            failed = true;
            worst = std::max(worst, row.truncation.energy_change / energy_scale);
        }
    }
    if (failed) {
        throw SweepError("mode sum truncation check failed at m_max = " + std::to_string(spec.m_max), worst,
                         std::move(table));
    }
    return table;
}

}  // namespace casimir
