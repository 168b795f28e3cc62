#include "casimir/profile_table.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::quad {
namespace {

// Per-mode weight covering both the energy (|2 cos|, |2 sin|) and the torque (|2 m cos|).
double mode_weight(int m) { return m == 0 ? 1.0 : 2.0 * (1.0 + m); }

struct EtaPanel {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> eta;       // 21 nodes
    std::vector<double> profiles;  // 21 * width
    double error = 0.0;
    double envelope = 0.0;
    bool evaluated = false;
};

EtaPanel make_panel(double a, double b, std::size_t width) {
    const auto& rule = GaussKronrod21::instance();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    EtaPanel p;
    p.a = a;
    p.b = b;
    for (double x : rule.nodes()) {
        p.eta.push_back(center + half * x);
    }
    p.profiles.assign(p.eta.size() * width, 0.0);
    return p;
}

// Fills the profiles of every listed panel; nodes are independent work items.
void fill_profiles(std::vector<EtaPanel*>& pending, GearKind kind, double y, int max_order,
                   const QuadratureSpec& spec, Execution exec) {
    const std::size_t width = profile_width(kind, max_order);
    const std::size_t per_panel = GaussKronrod21::kPoints;
    const long total = static_cast<long>(pending.size() * per_panel);
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
    for (long job = 0; job < total; ++job) {
        const auto idx = static_cast<std::size_t>(job);
        EtaPanel& p = *pending[idx / per_panel];
        const std::size_t node = idx % per_panel;
        try {
            kz_profiles(kind, p.eta[node], y, max_order, spec,
                        std::span<double>(p.profiles.data() + node * width, width));
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    for (const auto& e : failures) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

// Kronrod-vs-Gauss discrepancy of all weighted pair products within each profile family.
void estimate_panel(EtaPanel& p, GearKind kind, int max_order) {
    const auto& rule = GaussKronrod21::instance();
    const auto wk = rule.kronrod_weights();
    const auto wg = rule.gauss_weights();
    const double half = 0.5 * (p.b - p.a);
    const std::size_t n = static_cast<std::size_t>(max_order) + 1;
    const std::size_t width = profile_width(kind, max_order);
    const std::size_t families = width / n;

    double error = 0.0;
    double envelope = 0.0;
    for (std::size_t fam = 0; fam < families; ++fam) {
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t k = m; k < n; ++k) {
                double kron = 0.0;
                double gauss = 0.0;
                double absolute = 0.0;
                for (int i = 0; i < GaussKronrod21::kPoints; ++i) {
                    const double* row = p.profiles.data() + static_cast<std::size_t>(i) * width + fam * n;
                    const double g = row[m] * row[k];
                    kron += wk[i] * g;
                    gauss += wg[i] * g;
                    absolute += wk[i] * std::abs(g);
                }
                const double w = mode_weight(static_cast<int>(m)) * mode_weight(static_cast<int>(k)) * (m == k ? 1.0 : 2.0);
                error += w * std::abs(kron - gauss) * half;
                envelope += w * absolute * half;
            }
        }
    }
    p.error = error * kEnergyPrefactor;
    p.envelope = envelope * kEnergyPrefactor;
}

void check_table_args(double y, int max_order) {
    if (!(y > 1.0) || !std::isfinite(y)) {
        throw GeometryError("radial ratio y must be finite and > 1, got " + std::to_string(y));
    }
    if (max_order < 1) {
        throw DomainError("profile table needs max_order >= 1");
    }
}

struct Trig {
    std::vector<double> c, s;

    Trig(double beta, int m_max) : c(m_max + 1), s(m_max + 1) {
        for (int m = 0; m <= m_max; ++m) {
            c[m] = std::cos(m * beta);
            s[m] = std::sin(m * beta);
        }
    }
};

void check_truncation(const ProfileTable& t, int m_max) {
    if (m_max < 0 || m_max > t.max_order) {
        throw RangeError("m_max " + std::to_string(m_max) + " exceeds tabulated order " + std::to_string(t.max_order));
    }
}

}  // namespace

ProfileTable build_profile_table(GearKind kind, double y, int max_order, const QuadratureSpec& spec,
                                 Execution exec) {
    spec.validate();
    check_table_args(y, max_order);
    const std::size_t width = profile_width(kind, max_order);
    const auto breaks = decay_breakpoints(y, spec);

    std::vector<EtaPanel> panels;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        panels.push_back(make_panel(breaks[i], breaks[i + 1], width));
    }
    std::vector<EtaPanel*> pending;
    for (auto& p : panels) {
        pending.push_back(&p);
    }

    while (true) {
        fill_profiles(pending, kind, y, max_order, spec, exec);
        for (auto* p : pending) {
            estimate_panel(*p, kind, max_order);
            p->evaluated = true;
        }
        double error = 0.0;
        double envelope = 0.0;
        double max_error = 0.0;
        for (const auto& p : panels) {
            error += p.error;
            envelope += p.envelope;
            max_error = std::max(max_error, p.error);
        }
        if (error <= std::max(spec.abs_tol, spec.rel_tol * envelope)) {
            ProfileTable table;
            table.kind = kind;
            table.y = y;
            table.max_order = max_order;
            table.error_bound = error;
            table.panels = static_cast<int>(panels.size());
            const auto wk = GaussKronrod21::instance().kronrod_weights();
            const std::size_t n = table.stride();
            for (const auto& p : panels) {
                const double half = 0.5 * (p.b - p.a);
                for (int i = 0; i < GaussKronrod21::kPoints; ++i) {
                    table.eta.push_back(p.eta[i]);
                    table.weight.push_back(wk[i] * half);
                    const double* row = p.profiles.data() + static_cast<std::size_t>(i) * width;
                    if (kind == GearKind::open_gear) {
                        table.odd.insert(table.odd.end(), row, row + n);
                        table.even.insert(table.even.end(), row + n, row + 2 * n);
                    } else {
                        table.even.insert(table.even.end(), row, row + n);
                    }
                }
            }
            return table;
        }
        if (static_cast<int>(panels.size()) >= spec.max_subdivisions) {
            throw QuadratureError("eta quadrature did not converge within " + std::to_string(spec.max_subdivisions) +
                                      " panels",
                                  envelope, error);
        }

        std::vector<EtaPanel> refined;
        refined.reserve(panels.size() + 8);
        int budget = spec.max_subdivisions - static_cast<int>(panels.size());
        for (auto& p : panels) {
            const double mid = 0.5 * (p.a + p.b);
            if (budget > 0 && mid > p.a && mid < p.b && p.error >= 0.5 * max_error) {
                refined.push_back(make_panel(p.a, mid, width));
                refined.push_back(make_panel(mid, p.b, width));
                --budget;
            } else {
                refined.push_back(std::move(p));
            }
        }
        panels = std::move(refined);
        pending.clear();
        for (auto& p : panels) {
            if (!p.evaluated) {
                pending.push_back(&p);
            }
        }
        if (pending.empty()) {
            throw QuadratureError("eta quadrature cannot subdivide further", envelope, error);
        }
    }
}

EnergyParts node_squares(const ProfileTable& t, std::size_t node, double beta, int m_max) {
    check_truncation(t, m_max);
    const Trig trig(beta, m_max);
    const double* even = t.even.data() + node * t.stride();
    double s2 = even[0];
    for (int m = 1; m <= m_max; ++m) {
        s2 += 2.0 * trig.c[m] * even[m];
    }
    double s1 = 0.0;
    if (t.kind == GearKind::open_gear) {
        const double* odd = t.odd.data() + node * t.stride();
        for (int m = 1; m <= m_max; ++m) {
            s1 += 2.0 * trig.s[m] * odd[m];
        }
    }
    return {s1 * s1, s2 * s2};
}

EnergyParts energy_parts(const ProfileTable& t, double beta, int m_max) {
    check_truncation(t, m_max);
    const Trig trig(beta, m_max);
    const std::size_t n = t.stride();
    double odd_sum = 0.0;
    double even_sum = 0.0;
    for (std::size_t j = 0; j < t.nodes(); ++j) {
        const double* even = t.even.data() + j * n;
        double s2 = even[0];
        for (int m = 1; m <= m_max; ++m) {
            s2 += 2.0 * trig.c[m] * even[m];
        }
        even_sum += t.weight[j] * s2 * s2;
        if (t.kind == GearKind::open_gear) {
            const double* odd = t.odd.data() + j * n;
            double s1 = 0.0;
            for (int m = 1; m <= m_max; ++m) {
                s1 += 2.0 * trig.s[m] * odd[m];
            }
            odd_sum += t.weight[j] * s1 * s1;
        }
    }
    return {-kEnergyPrefactor * odd_sum, -kEnergyPrefactor * even_sum};
}

double energy(const ProfileTable& t, double beta, int m_max) { return energy_parts(t, beta, m_max).total(); }

double torque(const ProfileTable& t, double beta, int m_max) {
    check_truncation(t, m_max);
    const Trig trig(beta, m_max);
    const std::size_t n = t.stride();
    double sum = 0.0;
    for (std::size_t j = 0; j < t.nodes(); ++j) {
        const double* even = t.even.data() + j * n;
        double s2 = even[0];
        double ds2 = 0.0;
        for (int m = 1; m <= m_max; ++m) {
            s2 += 2.0 * trig.c[m] * even[m];
            ds2 -= 2.0 * m * trig.s[m] * even[m];
        }
        double integrand = s2 * ds2;
        if (t.kind == GearKind::open_gear) {
            const double* odd = t.odd.data() + j * n;
            double s1 = 0.0;
            double ds1 = 0.0;
            for (int m = 1; m <= m_max; ++m) {
                s1 += 2.0 * trig.s[m] * odd[m];
                ds1 += 2.0 * m * trig.c[m] * odd[m];
            }
            integrand += s1 * ds1;
        }
        sum += t.weight[j] * integrand;
    }
    // T = -dF/dbeta with F = -prefactor * int (s1^2 + s2^2)
    return 2.0 * kEnergyPrefactor * sum;
}

double eta_integral(double beta, double y, const ModeSumSpec& mspec, const QuadratureSpec& spec) {
    mspec.validate();
    const int top = mspec.m_max + (mspec.convergence_check ? 1 : 0);
    const auto table = build_profile_table(GearKind::open_gear, y, top, spec);
    const double f = energy(table, beta, mspec.m_max);
    if (mspec.convergence_check) {
        const double next = energy(table, beta, mspec.m_max + 1);
        const double change = std::abs(next - f) / std::abs(f);
        if (!(change <= mspec.truncation_tol)) {
            throw ConvergenceError("mode sum not converged at m_max = " + std::to_string(mspec.m_max) +
                                       " (relative change " + std::to_string(change) + ")",
                                   change);
        }
    }
    return f;
}

}  // namespace casimir::quad
