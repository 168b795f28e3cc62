#include "casimir/reference.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/green_kernels.hpp"

namespace casimir::reference {

EnergyTorque energy_torque(GearKind kind, double beta, double y, int m_max, const quad::QuadratureSpec& spec) {
    spec.validate();
    if (m_max < 1) {
        throw DomainError("m_max must be >= 1");
    }
    const auto even_kind = kind == GearKind::open_gear ? quad::KernelKind::v2_bracket : quad::KernelKind::concentric;

    // out = {s1^2 + s2^2, s1 s1' + s2 s2'}
    const quad::VectorIntegrand integrand = [&](double eta, std::span<double> out) {
        double s1 = 0.0, ds1 = 0.0;
        double s2 = quad::kz_profile(0, eta, y, even_kind, spec);
        double ds2 = 0.0;
        for (int m = 1; m <= m_max; ++m) {
            const double even = quad::kz_profile(m, eta, y, even_kind, spec);
            s2 += 2.0 * std::cos(m * beta) * even;
            ds2 -= 2.0 * m * std::sin(m * beta) * even;
            if (kind == GearKind::open_gear) {
                const double odd = quad::kz_profile(m, eta, y, quad::KernelKind::v1_bracket, spec);
                s1 += 2.0 * std::sin(m * beta) * odd;
                ds1 += 2.0 * m * std::cos(m * beta) * odd;
            }
        }
        out[0] = s1 * s1 + s2 * s2;
        out[1] = s1 * ds1 + s2 * ds2;
    };
    const auto breaks = quad::decay_breakpoints(y, spec);
    const quad::Tolerance tol{spec.rel_tol, spec.abs_tol / quad::kEnergyPrefactor, spec.max_subdivisions, true};
    const auto r = quad::integrate(integrand, 2, breaks, tol);
    return {-quad::kEnergyPrefactor * r.value[0], 2.0 * quad::kEnergyPrefactor * r.value[1]};
}

}  // namespace casimir::reference

namespace casimir::quad {
namespace {

// Maps t in [0, 1) onto x in [0, inf) with scale s: x = s t / (1 - t).
struct HalfLine {
    double scale;

    double x(double t) const { return scale * t / (1.0 - t); }
    double jacobian(double t) const { return scale / ((1.0 - t) * (1.0 - t)); }
};

}  // namespace

double brute_force_triple(double beta, double y, const ModeSumSpec& mspec, const QuadratureSpec& coarse) {
    coarse.validate();
    if (mspec.m_max < 1) {
        throw DomainError("m_max must be >= 1");
    }
    if (!(y > 1.0)) {
        throw GeometryError("radial ratio y must be > 1");
    }
    const int m_max = mspec.m_max;
    const int count = 2 * m_max + 1;
    const HalfLine map{1.0 / (y - 1.0)};
    // images of lambda (y - 1) = 0.5, 2, 6, 15, 30 under the map
    const std::array<double, 7> unit{0.0, 1.0 / 3.0, 2.0 / 3.0, 6.0 / 7.0, 15.0 / 16.0, 30.0 / 31.0, 1.0};
    const double pi = std::numbers::pi;
    // eta, kz1, kz2 each folded from (-inf, inf): 8 / ((2 pi)^3 (4 pi^2)) times the -2 of F.
    const double prefactor = 2.0 * 8.0 / (8.0 * pi * pi * pi * 4.0 * pi * pi);
    const double abs_triple = coarse.abs_tol / prefactor;

    const auto factors = [&](double eta, double kz, std::vector<kernels::ModeFactor>& out) {
        out.resize(count);
        for (int i = 0; i < count; ++i) {
            const kernels::KernelPoint p{i - m_max, eta, kz, y};
            out[i] = p.lambda() == 0.0 ? kernels::ModeFactor{} : kernels::mode_factor(p);
        }
    };

    const Tolerance inner{0.1 * coarse.rel_tol, 0.1 * abs_triple, coarse.max_subdivisions, true};
    const Tolerance middle{0.3 * coarse.rel_tol, 0.3 * abs_triple, coarse.max_subdivisions, true};
    const Tolerance outer{coarse.rel_tol, abs_triple, coarse.max_subdivisions, true};

    const ScalarIntegrand over_eta = [&](double te) {
        const double eta = map.x(te);
        const ScalarIntegrand over_k1 = [&](double t1) {
            const double k1 = map.x(t1);
            std::vector<kernels::ModeFactor> first;
            factors(eta, k1, first);
            const ScalarIntegrand over_k2 = [&](double t2) {
                const double k2 = map.x(t2);
                std::vector<kernels::ModeFactor> second;
                factors(eta, k2, second);
                double sum = 0.0;
                for (int i = 0; i < count; ++i) {
                    for (int j = 0; j < count; ++j) {
                        const double phase = std::cos(beta * double((i - m_max) + (j - m_max)));
                        sum += phase * (-first[i].te_like * second[j].te_like + first[i].tm_like * second[j].tm_like);
                    }
                }
                return sum * map.jacobian(t2);
            };
            return integrate(over_k2, unit, inner).value * map.jacobian(t1);
        };
        return integrate(over_k1, unit, middle).value * map.jacobian(te);
    };
    return -prefactor * integrate(over_eta, unit, outer).value;
}

}  // namespace casimir::quad
