#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casimir/errors.hpp"
#include "casimir/green_kernels.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

const char* to_string(GearKind kind) {
    return kind == GearKind::open_gear ? "open-gear" : "concentric";
}

}  // namespace casimir

namespace casimir::quad {
namespace {

void check_y(double y) {
    if (!(y > 1.0) || !std::isfinite(y)) {
        throw GeometryError("radial ratio y must be finite and > 1, got " + std::to_string(y));
    }
}

void check_order(int max_order) {
    if (max_order < 0 || max_order > specfun::kMaxOrder) {
        throw RangeError("mode truncation " + std::to_string(max_order) + " outside [0, " +
                         std::to_string(specfun::kMaxOrder) + "]");
    }
}

struct Panel {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> integral;
    double error = 0.0;
    double l1 = 0.0;
};

Panel evaluate_panel(const VectorIntegrand& f, std::size_t dim, double a, double b, std::vector<double>& values) {
    const auto& rule = GaussKronrod21::instance();
    const auto x = rule.nodes();
    const auto wk = rule.kronrod_weights();
    const auto wg = rule.gauss_weights();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    Panel p;
    p.a = a;
    p.b = b;
    p.integral.assign(dim, 0.0);
    std::vector<double> gauss(dim, 0.0);
    double l1 = 0.0;
    for (int i = 0; i < GaussKronrod21::kPoints; ++i) {
        f(center + half * x[i], values);
        for (std::size_t c = 0; c < dim; ++c) {
            p.integral[c] += wk[i] * values[c];
            gauss[c] += wg[i] * values[c];
            l1 += wk[i] * std::abs(values[c]);
        }
    }
    double error = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
        p.integral[c] *= half;
        error += std::abs(p.integral[c] - half * gauss[c]);
    }
    p.error = error;
    p.l1 = l1 * half;
    return p;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw DomainError("max_subdivisions must be at least 1");
    }
    // The discarded tail is bounded by ~cutoff^3 e^{-cutoff}; 30 keeps it below 1e-8 relative.
    if (!(decay_cutoff >= 30.0)) {
        throw DomainError("decay_cutoff must be >= 30");
    }
}

double QuadratureSpec::upper_bound(double y) const {
    check_y(y);
    return decay_cutoff / (y - 1.0);
}

void ModeSumSpec::validate() const {
    if (m_max < 1) {
        throw DomainError("m_max must be >= 1");
    }
    check_order(m_max + (convergence_check ? 1 : 0));
    if (!(truncation_tol > 0.0)) {
        throw DomainError("truncation_tol must be positive");
    }
}

GaussKronrod21::GaussKronrod21() {
    const auto& kx = boost::math::quadrature::gauss_kronrod<double, 21>::abscissa();
    const auto& kw = boost::math::quadrature::gauss_kronrod<double, 21>::weights();
    const auto& gw = boost::math::quadrature::gauss<double, 10>::weights();
    // Boost stores the non-negative half; Gauss nodes sit at odd Kronrod indices.
    const int half = static_cast<int>(kx.size());
    for (int i = half - 1; i >= 1; --i) {
        x_.push_back(-kx[i]);
        wk_.push_back(kw[i]);
        wg_.push_back(i % 2 == 1 ? gw[(i - 1) / 2] : 0.0);
    }
    for (int i = 0; i < half; ++i) {
        x_.push_back(kx[i]);
        wk_.push_back(kw[i]);
        wg_.push_back(i % 2 == 1 ? gw[(i - 1) / 2] : 0.0);
    }
}

const GaussKronrod21& GaussKronrod21::instance() {
    static const GaussKronrod21 rule;
    return rule;
}

std::span<const double> GaussKronrod21::nodes() const { return x_; }
std::span<const double> GaussKronrod21::kronrod_weights() const { return wk_; }
std::span<const double> GaussKronrod21::gauss_weights() const { return wg_; }

VectorEstimate integrate(const VectorIntegrand& f, std::size_t dim, std::span<const double> breaks,
                         const Tolerance& tol) {
    if (breaks.size() < 2 || dim == 0) {
        throw DomainError("integration needs at least one interval and one component");
    }
    std::vector<double> values(dim);
    std::vector<Panel> panels;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] > breaks[i]) {
            panels.push_back(evaluate_panel(f, dim, breaks[i], breaks[i + 1], values));
        }
    }
    if (panels.empty()) {
        throw DomainError("integration interval has zero width");
    }

    VectorEstimate result;
    result.value.assign(dim, 0.0);
    while (true) {
        std::fill(result.value.begin(), result.value.end(), 0.0);
        double error = 0.0;
        double l1 = 0.0;
        double max_error = 0.0;
        for (const auto& p : panels) {
            for (std::size_t c = 0; c < dim; ++c) {
                result.value[c] += p.integral[c];
            }
            error += p.error;
            l1 += p.l1;
            max_error = std::max(max_error, p.error);
        }
        double scale = l1;
        if (!tol.l1_scale) {
            scale = 0.0;
            for (double v : result.value) {
                scale += std::abs(v);
            }
        }
        result.error = error;
        result.panels = static_cast<int>(panels.size());
        if (error <= std::max(tol.abs, tol.rel * scale)) {
            return result;
        }
        if (static_cast<int>(panels.size()) >= tol.max_panels) {
            double total = 0.0;
            for (double v : result.value) {
                total += v;
            }
            throw QuadratureError("adaptive quadrature did not converge within " + std::to_string(tol.max_panels) +
                                      " panels (error estimate " + std::to_string(error) + ")",
                                  total, error);
        }

        std::vector<Panel> refined;
        refined.reserve(panels.size() + 8);
        int budget = tol.max_panels - static_cast<int>(panels.size());
        for (auto& p : panels) {
            const double mid = 0.5 * (p.a + p.b);
            const bool splittable = mid > p.a && mid < p.b;
            if (budget > 0 && splittable && p.error >= 0.5 * max_error) {
                refined.push_back(evaluate_panel(f, dim, p.a, mid, values));
                refined.push_back(evaluate_panel(f, dim, mid, p.b, values));
                --budget;
            } else {
                refined.push_back(std::move(p));
            }
        }
        if (refined.size() == panels.size()) {
            throw QuadratureError("adaptive quadrature cannot subdivide further", result.value.front(), error);
        }
        panels = std::move(refined);
    }
}

Estimate integrate(const ScalarIntegrand& f, std::span<const double> breaks, const Tolerance& tol) {
    const VectorIntegrand wrapped = [&f](double x, std::span<double> out) { out[0] = f(x); };
    const auto r = integrate(wrapped, 1, breaks, tol);
    return {r.value.front(), r.error, r.panels};
}

std::vector<double> decay_breakpoints(double y, const QuadratureSpec& spec, double feature) {
    const double length = 1.0 / (y - 1.0);
    const double upper = spec.upper_bound(y);
    std::vector<double> breaks{0.0};
    for (double u : {0.5, 2.0, 6.0, 15.0, 30.0}) {
        if (u < spec.decay_cutoff) {
            breaks.push_back(u * length);
        }
    }
    breaks.push_back(upper);
    if (feature > 0.0 && feature < upper) {
        const bool distinct = std::none_of(breaks.begin(), breaks.end(), [&](double b) {
            return std::abs(b - feature) < 1e-3 * length;
        });
        if (distinct) {
            breaks.push_back(feature);
            std::sort(breaks.begin(), breaks.end());
        }
    }
    return breaks;
}

std::size_t profile_width(GearKind kind, int max_order) {
    const auto n = static_cast<std::size_t>(max_order) + 1;
    return kind == GearKind::open_gear ? 2 * n : n;
}

double kz_profile(int m, double eta, double y, KernelKind which, const QuadratureSpec& spec) {
    spec.validate();
    check_y(y);
    check_order(std::abs(m));
    if (!(eta >= 0.0)) {
        throw DomainError("eta must be >= 0");
    }
    const ScalarIntegrand f = [&](double kz) {
        const kernels::KernelPoint p{m, eta, kz, y};
        if (p.lambda() == 0.0) {
            return 0.0;
        }
        switch (which) {
            case KernelKind::v1_bracket: return kernels::v1_factor(p);
            case KernelKind::v2_bracket: return kernels::v2_factor(p);
            case KernelKind::concentric: return kernels::concentric_rr_kernel(p);
        }
        return 0.0;
    };
    const auto breaks = decay_breakpoints(y, spec, eta);
    const Tolerance tol{spec.rel_tol, 1e-3 * spec.abs_tol, spec.max_subdivisions, false};
    return integrate(f, breaks, tol).value / std::numbers::pi;
}

void kz_profiles(GearKind kind, double eta, double y, int max_order, const QuadratureSpec& spec,
                 std::span<double> out) {
    spec.validate();
    check_y(y);
    check_order(max_order);
    if (!(eta >= 0.0)) {
        throw DomainError("eta must be >= 0");
    }
    const std::size_t n = static_cast<std::size_t>(max_order) + 1;
    const std::size_t width = profile_width(kind, max_order);
    if (out.size() != width) {
        throw RangeError("profile output has the wrong width");
    }
    VectorIntegrand f;
    if (kind == GearKind::open_gear) {
        f = [&](double kz, std::span<double> v) {
            kernels::open_gear_brackets(eta, kz, y, v.first(n), v.subspan(n, n));
        };
    } else {
        f = [&](double kz, std::span<double> v) { kernels::concentric_brackets(eta, kz, y, v); };
    }
    const auto breaks = decay_breakpoints(y, spec, eta);
    const Tolerance tol{0.1 * spec.rel_tol, 1e-3 * spec.abs_tol, spec.max_subdivisions, false};
    const auto r = integrate(f, width, breaks, tol);
    for (std::size_t c = 0; c < width; ++c) {
        out[c] = r.value[c] / std::numbers::pi;
    }
}

ModeSums mode_sums(double eta, double beta, double y, const ModeSumSpec& mspec, const QuadratureSpec& spec) {
    if (mspec.m_max < 1) {
        throw DomainError("m_max must be >= 1");
    }
    const int n = mspec.m_max + 1;
    std::vector<double> profiles(profile_width(GearKind::open_gear, mspec.m_max));
    kz_profiles(GearKind::open_gear, eta, y, mspec.m_max, spec, profiles);
    ModeSums s;
    s.s2 = profiles[n];
    for (int m = 1; m < n; ++m) {
        s.s1 += 2.0 * std::sin(m * beta) * profiles[m];
        s.s2 += 2.0 * std::cos(m * beta) * profiles[n + m];
    }
    return s;
}

}  // namespace casimir::quad
