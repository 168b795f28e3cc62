#include "casimir/validation.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <random>
#include <sstream>

#include "casimir/csv.hpp"
#include "casimir/green_kernels.hpp"
#include "casimir/scenarios.hpp"
#include "casimir/specfun.hpp"

namespace casimir::validation {

OdeSurface ode_concentric_surface(int m, double lambda, double y, double rel_tol) {
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 2>;
    const double m2 = double(m) * double(m);
    const double l2 = lambda * lambda;
    const auto rhs = [&](const State& s, State& ds, double r) {
        ds[0] = s[1];
        ds[1] = -s[1] / r + (l2 + m2 / (r * r)) * s[0];
    };
    const auto solve = [&](State s) {
        auto stepper = odeint::make_controlled(1e-300, rel_tol, odeint::runge_kutta_fehlberg78<State>());
        odeint::integrate_adaptive(stepper, rhs, s, 1.0, y, 1e-3 * (y - 1.0));
        return s;
    };
    const State u = solve({0.0, 1.0});
    const State v = solve({1.0, 0.0});
    return {-1.0 / (y * u[0]), 1.0 / (y * v[1])};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// F or T of a single-cog scenario without the truncation gate
GearScenario plain(GearKind kind, double y, int m_max = 6) {
    GearScenario s;
    s.kind = kind;
    s.y = y;
    s.mode_spec.m_max = m_max;
    s.mode_spec.convergence_check = false;
    return s;
}

CriterionResult special_functions() {
    constexpr double kTol = 1e-11;
    constexpr double kLimit = 1.0;
    const auto start = Clock::now();
    double worst = 0.0;
    int worst_m = 0;
    double worst_x = 0.0;
    for (int m = 0; m <= 12; ++m) {
        for (int i = 0; i < 30; ++i) {
            const double x = 0.01 * std::pow(500.0 / 0.01, i / 29.0);
            const double r = specfun::wronskian_residual(m, x);
            if (!(r <= worst)) {
                worst = r;
                worst_m = m;
                worst_x = x;
            }
        }
    }
    const double t = seconds_since(start);
    return {1, "special-function Wronskian suite", worst < kTol && t < kLimit,
            "max residual " + sci(worst) + " at m=" + std::to_string(worst_m) + " x=" + sci(worst_x) +
                " (limit " + sci(kTol) + ")",
            t};
}

CriterionResult parity() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<int> order(1, 12);
    std::uniform_real_distribution<double> eta(0.01, 6.0);
    std::uniform_real_distribution<double> kz(-6.0, 6.0);
    std::uniform_real_distribution<double> y(1.05, 20.0);
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        kernels::KernelPoint p{order(rng), eta(rng), kz(rng), y(rng)};
        kernels::KernelPoint q = p;
        q.m = -p.m;
        const auto fp = kernels::mode_factor(p);
        const auto fq = kernels::mode_factor(q);
        const bool ok = kernels::v1_factor(q) == -kernels::v1_factor(p) &&
                        kernels::v2_factor(q) == kernels::v2_factor(p) && fq.te_like == -fp.te_like &&
                        fq.tm_like == fp.tm_like;
        failures += ok ? 0 : 1;
    }
    return {2, "parity of the mode factors", failures == 0,
            std::to_string(failures) + " of 100 random points break exact parity", seconds_since(start)};
}

CriterionResult oracle_equivalence() {
    constexpr double kTol = 1e-3;
    constexpr double kLimit = 600.0;
    const auto start = Clock::now();
    const std::array<double, 3> ys{3.0, 5.0, 10.0};
    const std::array<double, 3> betas{0.5, 1.5, 3.0};
    quad::ModeSumSpec mspec;
    mspec.m_max = 3;
    mspec.convergence_check = false;
    quad::QuadratureSpec coarse;
    coarse.rel_tol = 1e-4;
    std::array<double, 9> rel{};
    std::array<std::string, 9> errors{};
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < 9; ++k) {
        try {
            const double y = ys[k / 3];
            const double beta = betas[k % 3];
            const double fast = quad::eta_integral(beta, y, mspec, quad::QuadratureSpec{});
            const double slow = quad::brute_force_triple(beta, y, mspec, coarse);
            rel[k] = std::abs(fast - slow) / std::abs(slow);
        } catch (const std::exception& e) {
            errors[k] = e.what();
            rel[k] = INFINITY;
        }
    }
    const double t = seconds_since(start);
    const double worst = *std::max_element(rel.begin(), rel.end());
    std::string detail = "max relative difference " + sci(worst) + " over 9 points (limit " + sci(kTol) + ")";
    for (const auto& e : errors) {
        if (!e.empty()) {
            detail += "; " + e;
            break;
        }
    }
    return {3, "factorized vs literal triple integral", worst < kTol && t < kLimit, detail, t};
}

CriterionResult mode_truncation() {
    constexpr double kTol = 1e-5;
    constexpr double kLimit = 120.0;
    const auto start = Clock::now();
    std::ostringstream detail;
    double worst = 0.0;
    for (double y : {5.0, 10.0}) {
        const auto table = quad::build_profile_table(GearKind::open_gear, y, 7, quad::QuadratureSpec{});
        double worst_y = 0.0;
        for (double beta : {0.5, 1.5, 3.0}) {
            const double f6 = quad::energy(table, beta, 6);
            const double f7 = quad::energy(table, beta, 7);
            worst_y = std::max(worst_y, std::abs(f7 - f6) / std::abs(f6));
        }
        detail << "y=" << y << ": " << sci(worst_y) << "  ";
        worst = std::max(worst, worst_y);
    }
    const double t = seconds_since(start);
    detail << "(limit " << sci(kTol) << ")";
    return {4, "mode truncation at m_max = 6", worst < kTol && t < kLimit, detail.str(), t};
}

CriterionResult sign_structure() {
    constexpr double kLimit = 120.0;
    const auto start = Clock::now();
    int points = 0;
    int positive_energy = 0;
    int odd_dominant = 0;
    int repulsive = 0;
    std::string odd_example;
    for (double y : {3.0, 5.0, 10.0}) {
        const double h = 1e-4 * y;
        const GearModel centre(plain(GearKind::open_gear, y));
        const GearModel below(plain(GearKind::open_gear, y - h));
        const GearModel above(plain(GearKind::open_gear, y + h));
        for (double beta : uniform_beta_grid(16)) {
            ++points;
            const auto parts = centre.energy_parts(beta);
            if (!(parts.total() < 0.0)) {
                ++positive_energy;
            }
            if (!(std::abs(parts.even) > std::abs(parts.odd))) {
                if (odd_dominant++ == 0) {
                    odd_example = " (first at y=" + sci(y) + " beta=" + sci(beta) + ": |V1| " + sci(std::abs(parts.odd)) +
                                  " vs |V2| " + sci(std::abs(parts.even)) + ")";
                }
            }
            const double dfdy = (above.energy(beta) - below.energy(beta)) / (2.0 * h);
            if (!(dfdy > 0.0)) {
                ++repulsive;
            }
        }
    }
    const double t = seconds_since(start);
    const std::string n = std::to_string(points);
    const std::string detail = "F >= 0 at " + std::to_string(positive_energy) + "/" + n + "; |V1 part| >= |V2 part| at " +
                               std::to_string(odd_dominant) + "/" + n + odd_example + "; dF/dy <= 0 at " +
                               std::to_string(repulsive) + "/" + n;
    return {5, "sign structure", positive_energy == 0 && odd_dominant == 0 && repulsive == 0 && t < kLimit, detail, t};
}

CriterionResult torque_consistency() {
    constexpr double kRel = 1e-4;
    constexpr double kZero = 1e-12;
    const auto start = Clock::now();
    double worst_rel = 0.0;
    double worst_zero = 0.0;
    int geometries = 0;
    for (GearKind kind : {GearKind::open_gear, GearKind::concentric}) {
        for (double y : {3.0, 5.0, 10.0}) {
            ++geometries;
            const GearModel model(plain(kind, y));
            const double h = 2e-4;
            for (int k = 0; k < 8; ++k) {
                const double beta = (2 * k + 1) * std::numbers::pi / 16.0;
                const double fd = -(model.energy(beta + h) - model.energy(beta - h)) / (2.0 * h);
                const double analytic = model.torque(beta);
                worst_rel = std::max(worst_rel, std::abs(fd - analytic) / std::abs(analytic));
            }
            worst_zero = std::max({worst_zero, std::abs(model.torque(0.0)), std::abs(model.torque(std::numbers::pi))});
        }
    }
    return {6, "torque vs finite-difference energy", worst_rel < kRel && worst_zero < kZero,
            "max relative difference " + sci(worst_rel) + " over " + std::to_string(8 * geometries) +
                " points (limit " + sci(kRel) + "); max |T(0)|, |T(pi)| " + sci(worst_zero),
            seconds_since(start)};
}

CriterionResult concentric_certification() {
    constexpr double kRel = 1e-8;
    constexpr double kResidual = 1e-10;
    const auto start = Clock::now();
    double worst_rel = 0.0;
    double worst_residual = 0.0;
    for (int m = 0; m <= 6; ++m) {
        for (double lambda : {0.5, 1.0, 5.0}) {
            for (double y : {2.0, 3.0, 10.0}) {
                const auto closed = kernels::concentric_surface(m, lambda, y);
                const auto ode = ode_concentric_surface(m, lambda, y);
                worst_rel = std::max({worst_rel,
                                      std::abs(closed.dirichlet_cross - ode.dirichlet_cross) / std::abs(ode.dirichlet_cross),
                                      std::abs(closed.neumann_value - ode.neumann_value) / std::abs(ode.neumann_value)});
                const double rp = 0.5 * (1.0 + y);
                const double gd = std::abs(kernels::dirichlet_radial_green(m, lambda, y, rp, rp));
                const double jump = 1.0 / rp;
                worst_residual = std::max({worst_residual,
                                           std::abs(kernels::dirichlet_radial_green(m, lambda, y, 1.0, rp)) / gd,
                                           std::abs(kernels::dirichlet_radial_green(m, lambda, y, y, rp)) / gd,
                                           std::abs(kernels::neumann_radial_green_dr(m, lambda, y, 1.0, rp)) / jump,
                                           std::abs(kernels::neumann_radial_green_dr(m, lambda, y, y, rp)) / jump});
            }
        }
    }
    return {7, "concentric kernel vs radial ODE", worst_rel < kRel && worst_residual < kResidual,
            "max relative difference " + sci(worst_rel) + " (limit " + sci(kRel) + "); max boundary residual " +
                sci(worst_residual) + " (limit " + sci(kResidual) + ")",
            seconds_since(start)};
}

// interior local extrema of T on rows first..last (inclusive)
int extrema(const SweepTable& t, std::size_t first, std::size_t last) {
    int count = 0;
    for (std::size_t i = first + 1; i < last; ++i) {
        const double left = t.rows[i].torque - t.rows[i - 1].torque;
        const double right = t.rows[i + 1].torque - t.rows[i].torque;
        if (left * right < 0.0) {
            ++count;
        }
    }
    return count;
}

double max_abs_torque(const SweepTable& t) {
    double m = 0.0;
    for (const auto& r : t.rows) {
        m = std::max(m, std::abs(r.torque));
    }
    return m;
}

CriterionResult figure_shapes() {
    constexpr double kLimit = 60.0;
    constexpr double kSymmetry = 1e-9;
    const auto start = Clock::now();
    const auto grid = uniform_beta_grid(64);
    std::ostringstream detail;
    bool ok = true;
    double slowest = 0.0;

    for (double y : {5.0, 10.0}) {
        GearScenario s;
        s.y = y;
        const auto t0 = Clock::now();
        const auto table = sweep(s, grid);
        const GearModel model(s);
        const double t = seconds_since(t0);
        slowest = std::max(slowest, t);
        const double scale = max_abs_torque(table);
        double odd = 0.0;
        double period = 0.0;
        for (std::size_t i = 0; i < 64; ++i) {
            odd = std::max(odd, std::abs(table.rows[i].torque + table.rows[(64 - i) % 64].torque));
            period = std::max(period, std::abs(model.torque(grid[i] + 2.0 * std::numbers::pi) - table.rows[i].torque));
        }
        const int first_half = extrema(table, 0, 32);
        // second half: rows 32..63 then wrap to row 0
        SweepTable wrapped = table;
        wrapped.rows.push_back(table.rows.front());
        const int second_half = extrema(wrapped, 32, 64);
        const bool pass = odd <= kSymmetry * scale && period <= kSymmetry * scale && first_half == 1 &&
                          second_half == 1 && t < kLimit;
        ok = ok && pass;
        detail << "single y=" << y << ": odd " << sci(odd / scale) << " periodic " << sci(period / scale)
               << " extrema " << first_half << "+" << second_half << "; ";
    }
    for (auto kind : {GearKind::open_gear, GearKind::concentric}) {
        GearScenario s;
        s.kind = kind;
        s.y = kind == GearKind::open_gear ? 10.0 : 5.0;
        s.cog_angles = equally_spaced_cogs(2);
        const auto t0 = Clock::now();
        const auto table = sweep(s, grid);
        const double t = seconds_since(t0);
        slowest = std::max(slowest, t);
        const double scale = max_abs_torque(table);
        double shift = 0.0;
        for (std::size_t i = 0; i < 32; ++i) {
            shift = std::max(shift, std::abs(table.rows[i].torque - table.rows[i + 32].torque));
        }
        const bool pass = shift <= kSymmetry * scale && t < kLimit;
        ok = ok && pass;
        detail << "two-cog " << to_string(kind) << " y=" << s.y << ": pi-shift " << sci(shift / scale) << "; ";
    }
    detail << "slowest sweep " << sci(slowest) << " s";
    return {8, "figure-shape sweeps", ok, detail.str(), seconds_since(start)};
}

CriterionResult determinism() {
    const auto start = Clock::now();
    const auto grid = uniform_beta_grid(64);
    std::vector<GearScenario> scenarios(2);
    scenarios[0].y = 5.0;
    scenarios[1].kind = GearKind::concentric;
    scenarios[1].y = 5.0;
    scenarios[1].cog_angles = equally_spaced_cogs(2);
    const int saved = omp_get_max_threads();
    int mismatches = 0;
    for (const auto& s : scenarios) {
        std::vector<std::string> outputs;
        for (int threads : {1, 4, 1, 4}) {
            omp_set_num_threads(threads);
            outputs.push_back(to_csv(sweep(s, grid)));
        }
        for (const auto& o : outputs) {
            mismatches += o == outputs.front() ? 0 : 1;
        }
    }
    omp_set_num_threads(saved);
    return {9, "byte-identical CSV across runs and thread counts", mismatches == 0,
            std::to_string(mismatches) + " mismatching outputs among 8 runs (threads 1, 4, 1, 4)", seconds_since(start)};
}

}  // namespace

int criterion_count() { return 9; }

CriterionResult run_criterion(int id) {
    const auto start = Clock::now();
    try {
        switch (id) {
            case 1: return special_functions();
            case 2: return parity();
            case 3: return oracle_equivalence();
            case 4: return mode_truncation();
            case 5: return sign_structure();
            case 6: return torque_consistency();
            case 7: return concentric_certification();
            case 8: return figure_shapes();
            case 9: return determinism();
            default: break;
        }
    } catch (const std::exception& e) {
        return {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), seconds_since(start)};
    }
    throw RangeError("no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= criterion_count(); ++id) {
        results.push_back(run_criterion(id));
    }
    return results;
}

std::string format_result(const CriterionResult& r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %d %-48s (%.2f s)  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds);
    return head + r.detail;
}

}  // namespace casimir::validation
