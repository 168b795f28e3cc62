// casimir-gear: beta sweeps of the dimensionless Casimir energy and torque, written as CSV.
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "casimir/csv.hpp"
#include "casimir/scenarios.hpp"
#include "casimir/validation.hpp"

namespace {

constexpr int kUsage = 2;
constexpr int kNumerical = 3;
constexpr int kIo = 4;

struct RunConfig {
    double y = 0.0;
    std::string cogs = "1";
    int beta_steps = 64;
    int m_max = 6;
    double rel_tol = 1e-7;
    double mode_tol = 5e-2;
    bool no_mode_check = false;
    std::optional<double> alpha_product;
    std::optional<double> a;
    std::string output = "-";
    int threads = 0;
    std::vector<int> criteria;
};

std::vector<double> parse_cogs(const std::string& text) {
    if (text.find_first_of(",.") == std::string::npos) {
        std::size_t used = 0;
        const int n = std::stoi(text, &used);
        if (used != text.size()) {
            throw casimir::DomainError("--cogs: expected a count or a comma-separated angle list");
        }
        return casimir::equally_spaced_cogs(n);
    }
    std::vector<double> angles;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string token = text.substr(start, comma - start);
        std::size_t used = 0;
        angles.push_back(std::stod(token, &used));
        if (used != token.size()) {
            throw casimir::DomainError("--cogs: bad angle '" + token + "'");
        }
        start = comma + 1;
    }
    return angles;
}

casimir::GearScenario make_scenario(casimir::GearKind kind, const RunConfig& c) {
    if (c.alpha_product.has_value() != c.a.has_value()) {
        throw casimir::DomainError("--alpha-product and --a must be given together");
    }
    casimir::GearScenario s;
    s.kind = kind;
    s.y = c.y;
    try {
        s.cog_angles = parse_cogs(c.cogs);
    } catch (const std::logic_error&) {
        throw casimir::DomainError("--cogs: expected a count or a comma-separated angle list");
    }
    s.alpha_product = c.alpha_product.value_or(1.0);
    s.a = c.a.value_or(1.0);
    s.mode_spec.m_max = c.m_max;
    s.mode_spec.convergence_check = !c.no_mode_check;
    s.mode_spec.truncation_tol = c.mode_tol;
    s.quad_spec.rel_tol = c.rel_tol;
    s.validate();
    return s;
}

void summarize(const casimir::SweepTable& t, double seconds) {
    double energy_scale = 0.0;
    double change = 0.0;
    for (const auto& r : t.rows) {
        energy_scale = std::max(energy_scale, std::abs(r.energy));
        change = std::max(change, r.truncation.energy_change);
    }
    std::fprintf(stderr,
                 "casimir-gear: %zu rows, %.3f s wall, quadrature error bound %.2e, eta nodes %d, "
                 "m_max %d -> %d energy change %.2e (relative)\n",
                 t.rows.size(), seconds, t.quadrature_error, t.eta_nodes, t.scenario.mode_spec.m_max,
                 t.scenario.mode_spec.m_max + 1, energy_scale > 0.0 ? change / energy_scale : 0.0);
}

int run_sweep(casimir::GearKind kind, const RunConfig& c) {
    casimir::GearScenario s;
    std::vector<double> grid;
    try {
        s = make_scenario(kind, c);
        grid = casimir::uniform_beta_grid(c.beta_steps);
    } catch (const casimir::Error& e) {
        std::fprintf(stderr, "casimir-gear: %s\n", e.what());
        return kUsage;
    }
    if (c.threads > 0) {
        omp_set_num_threads(c.threads);
    }

    const auto start = std::chrono::steady_clock::now();
    casimir::SweepTable table;
    try {
        table = casimir::sweep(s, grid);
    } catch (const casimir::SweepError& e) {
        summarize(e.partial(), std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        std::fprintf(stderr, "casimir-gear: %s; raise --m-max or --mode-tol\n", e.what());
        return kNumerical;
    } catch (const casimir::Error& e) {
        std::fprintf(stderr, "casimir-gear: %s\n", e.what());
        return kNumerical;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    casimir::CsvOptions options;
    options.physical = c.alpha_product.has_value();
    if (c.output == "-") {
        casimir::write_csv(std::cout, table, options);
        std::cout.flush();
        if (!std::cout) {
            std::fprintf(stderr, "casimir-gear: failed writing to stdout\n");
            return kIo;
        }
    } else {
        std::ofstream out(c.output, std::ios::binary);
        if (out) {
            casimir::write_csv(out, table, options);
            out.close();
        }
        if (!out) {
            std::fprintf(stderr, "casimir-gear: cannot write '%s'\n", c.output.c_str());
            return kIo;
        }
    }
    summarize(table, seconds);
    return 0;
}

int run_validate(const RunConfig& c) {
    if (c.threads > 0) {
        omp_set_num_threads(c.threads);
    }
    std::vector<int> ids = c.criteria;
    if (ids.empty()) {
        for (int id = 1; id <= casimir::validation::criterion_count(); ++id) {
            ids.push_back(id);
        }
    }
    int failed = 0;
    for (int id : ids) {
        if (id < 1 || id > casimir::validation::criterion_count()) {
            std::fprintf(stderr, "casimir-gear: no criterion %d\n", id);
            return kUsage;
        }
        const auto r = casimir::validation::run_criterion(id);
        std::printf("%s\n", casimir::validation::format_result(r).c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}

void add_sweep_options(CLI::App* app, RunConfig& c) {
    app->add_option("--y", c.y, "radial ratio r/a (open gear) or b/a (concentric), > 1")->required();
    app->add_option("--cogs", c.cogs, "cog count N (equally spaced) or comma-separated angles in radians");
    app->add_option("--beta-steps", c.beta_steps, "points of the uniform beta grid on [0, 2 pi)");
    app->add_option("--m-max", c.m_max, "highest angular mode");
    app->add_option("--rel-tol", c.rel_tol, "relative quadrature tolerance");
    app->add_option("--mode-tol", c.mode_tol, "allowed change from m_max to m_max + 1, relative to the sweep scale");
    app->add_flag("--no-mode-check", c.no_mode_check, "skip the m_max + 1 truncation check");
    app->add_option("--alpha-product", c.alpha_product, "alpha_1 alpha_2 for the physical columns");
    app->add_option("--a", c.a, "cylinder radius for the physical columns");
    app->add_option("-o,--output", c.output, "CSV path, '-' for stdout");
    app->add_option("--threads", c.threads, "OpenMP threads, 0 = runtime default");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir energy and torque of cylindrical gears with dielectric cogs"};
    app.set_version_flag("--version", std::string("casimir-gear ") + casimir::version());
    app.require_subcommand(1);

    RunConfig config;
    auto* single = app.add_subcommand("single-gear", "conducting cylinder with surface cogs and one outside cog");
    add_sweep_options(single, config);
    auto* concentric = app.add_subcommand("concentric", "inner cylinder cogs facing one cog on an outer shell");
    add_sweep_options(concentric, config);
    auto* validate = app.add_subcommand("validate", "run the acceptance suite");
    validate->add_option("--criteria", config.criteria, "criterion ids to run (default all)");
    validate->add_option("--threads", config.threads, "OpenMP threads, 0 = runtime default");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    if (single->parsed()) {
        return run_sweep(casimir::GearKind::open_gear, config);
    }
    if (concentric->parsed()) {
        return run_sweep(casimir::GearKind::concentric, config);
    }
    return run_validate(config);
}
