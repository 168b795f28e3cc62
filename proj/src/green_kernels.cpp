#include "casimir/green_kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

namespace casimir::kernels {
namespace {

using Buffer = std::array<double, specfun::kMaxOrder + 2>;

constexpr double kTinyDeterminant = 1e-300;

void check_geometry(double y) {
    if (!(y > 1.0) || !std::isfinite(y)) {
        throw GeometryError("radial ratio y must be finite and > 1 (y = 1 is contact), got " +
                            std::to_string(y));
    }
}

void check_size(std::size_t n) {
    if (n == 0 || n > static_cast<std::size_t>(specfun::kMaxOrder) + 1) {
        throw RangeError("kernel batch must cover 1.." + std::to_string(specfun::kMaxOrder + 1) + " orders");
    }
}

// Scaled K, K' at lambda and lambda*y for orders 0..n-1 plus the decay factor that
// restores the unscaled ratios: K_m(lambda y)/K_m(lambda) = k_out/k_in * decay.
struct KTables {
    Buffer k_in{}, k_out{}, kp_in{}, kp_out{};
    double decay = 0.0;

    KTables(double lambda, double y, std::size_t n) {
        specfun::bessel_k_scaled_sequence(lambda, std::span(k_in.data(), n + 1));
        specfun::bessel_k_scaled_sequence(lambda * y, std::span(k_out.data(), n + 1));
        specfun::k_derivative_sequence(std::span<const double>(k_in.data(), n + 1), std::span(kp_in.data(), n));
        specfun::k_derivative_sequence(std::span<const double>(k_out.data(), n + 1), std::span(kp_out.data(), n));
        decay = std::exp(-lambda * (y - 1.0));
    }
};

struct ITables {
    Buffer i_in{}, i_out{}, ip_in{}, ip_out{};

    ITables(double lambda, double y, std::size_t n) {
        specfun::bessel_i_scaled_sequence(lambda, std::span(i_in.data(), n + 1));
        specfun::bessel_i_scaled_sequence(lambda * y, std::span(i_out.data(), n + 1));
        specfun::i_derivative_sequence(std::span<const double>(i_in.data(), n + 1), std::span(ip_in.data(), n));
        specfun::i_derivative_sequence(std::span<const double>(i_out.data(), n + 1), std::span(ip_out.data(), n));
    }
};

// Unscaled Bessel ratios at one order. Falls back to the small-argument limits when
// K_{m+1}(lambda) overflows (tiny lambda, large m).
struct Ratios {
    double k_out_over_k_in;    // K(ly)/K(l)
    double kp_out_over_kp_in;  // K'(ly)/K'(l)
    double kp_out_over_k_in;   // K'(ly)/K(l)
    double k_out_over_kp_in;   // K(ly)/K'(l)
};

Ratios ratios(const KTables& t, int m, double lambda, double y) {
    if (std::isfinite(t.k_in[m + 1]) || m == 0) {
        return {t.k_out[m] / t.k_in[m] * t.decay, t.kp_out[m] / t.kp_in[m] * t.decay,
                t.kp_out[m] / t.k_in[m] * t.decay, t.k_out[m] / t.kp_in[m] * t.decay};
    }
    const double power = std::pow(y, -m);
    return {power, power / y, -m / (lambda * y) * power, -lambda / m * power};
}

// te bracket without its leading factor m, and the full tm bracket, at order m >= 0.
struct OpenBracket {
    double te_reduced;
    double tm;
};

OpenBracket open_bracket(const KTables& t, int m, double eta, double kz, double y, double lambda) {
    const Ratios r = ratios(t, m, lambda, y);
    const double eta2 = eta * eta;
    const double kz2 = kz * kz;
    const double lambda2 = lambda * lambda;
    const double te_reduced = kz2 / (lambda2 * y) * r.k_out_over_k_in + eta2 / lambda2 * r.kp_out_over_kp_in;
    const double tm = kz2 / lambda * r.kp_out_over_k_in +
                      eta2 * double(m) * double(m) / (lambda2 * lambda * y) * r.k_out_over_kp_in;
    return {te_reduced, tm};
}

ConcentricSurface surface_from_tables(const KTables& k, const ITables& i, int m, double lambda, double y) {
    const double e2 = k.decay * k.decay;
    const double det = i.i_in[m] * k.k_out[m] * e2 - i.i_out[m] * k.k_in[m];
    const double det_prime = i.ip_in[m] * k.kp_out[m] * e2 - i.ip_out[m] * k.kp_in[m];
    if (std::isfinite(det) && std::isfinite(det_prime)) {
        if (std::abs(det) < kTinyDeterminant || std::abs(det_prime) < kTinyDeterminant) {
            throw ConsistencyError("concentric Green's function determinant vanished at m = " + std::to_string(m) +
                                   ", lambda = " + std::to_string(lambda));
        }
        return {k.decay / (y * det), k.decay / (lambda * lambda * y * det_prime)};
    }
    if (m == 0) {
        throw ConsistencyError("concentric determinant not finite at m = 0, lambda = " + std::to_string(lambda));
    }
    // lambda -> 0: Delta_m -> (y^-m - y^m)/(2m), Delta'_m -> -m^2/(lambda^2 y) Delta_m
    const double delta = (std::pow(y, -m) - std::pow(y, m)) / (2.0 * m);
    return {1.0 / (y * delta), -1.0 / (double(m) * m * delta)};
}

double concentric_from_surface(const ConcentricSurface& s, int m, double eta, double kz, double y, double lambda) {
    const double lambda2 = lambda * lambda;
    return kz * kz / lambda2 * s.dirichlet_cross - eta * eta * double(m) * double(m) / (lambda2 * y) * s.neumann_value;
}

// I(l r) K(l s) - K(l r) I(l s) and its variants, unscaled.
struct Cylinder {
    int m;
    double lambda;

    double i(double r) const { return specfun::bessel_i_scaled(m, lambda * r) * std::exp(lambda * r); }
    double k(double r) const { return specfun::bessel_k_scaled(m, lambda * r) * std::exp(-lambda * r); }
    double ip(double r) const { return specfun::bessel_derivatives(m, lambda * r).ip_scaled * std::exp(lambda * r); }
    double kp(double r) const { return specfun::bessel_derivatives(m, lambda * r).kp_scaled * std::exp(-lambda * r); }

    // Solutions vanishing (Dirichlet) or with vanishing slope (Neumann) at r = s.
    double dirichlet(double r, double s) const { return i(r) * k(s) - k(r) * i(s); }
    double dirichlet_dr(double r, double s) const { return lambda * (ip(r) * k(s) - kp(r) * i(s)); }
    double neumann(double r, double s) const { return i(r) * kp(s) - k(r) * ip(s); }
    double neumann_dr(double r, double s) const { return lambda * (ip(r) * kp(s) - kp(r) * ip(s)); }
};

void check_radial(int m, double lambda, double y, double r, double r_prime) {
    check_geometry(y);
    if (!(lambda > 0.0)) {
        throw SingularPointError("radial Green's function needs lambda > 0");
    }
    if (std::abs(m) > specfun::kMaxOrder) {
        throw RangeError("order out of range");
    }
    if (r < 1.0 || r > y || r_prime < 1.0 || r_prime > y) {
        throw GeometryError("radial coordinates must lie in [1, y]");
    }
}

}  // namespace

double KernelPoint::lambda() const { return std::hypot(eta, kz); }

void validate(const KernelPoint& p) {
    check_geometry(p.y);
    if (!std::isfinite(p.eta) || !std::isfinite(p.kz)) {
        throw DomainError("kernel point has non-finite eta or kz");
    }
    if (std::abs(p.m) > specfun::kMaxOrder) {
        throw RangeError("mode order " + std::to_string(p.m) + " outside supported range");
    }
    if (p.lambda() == 0.0) {
        throw SingularPointError("kernel evaluated at lambda = 0 (eta = kz = 0)");
    }
}

ModeFactor mode_factor(const KernelPoint& p) {
    validate(p);
    const int order = std::abs(p.m);
    const double lambda = p.lambda();
    const KTables t(lambda, p.y, static_cast<std::size_t>(order) + 1);
    const OpenBracket b = open_bracket(t, order, p.eta, p.kz, p.y, lambda);
    // sign(m) * |m| * bracket keeps the parity exact in floating point
    return {double(p.m) * b.te_reduced, b.tm};
}

double v1_factor(const KernelPoint& p) { return mode_factor(p).te_like; }

double v2_factor(const KernelPoint& p) { return mode_factor(p).tm_like; }

ConcentricSurface concentric_surface(int m, double lambda, double y) {
    check_geometry(y);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw SingularPointError("concentric surface values need finite lambda > 0");
    }
    const int order = std::abs(m);
    if (order > specfun::kMaxOrder) {
        throw RangeError("mode order " + std::to_string(m) + " outside supported range");
    }
    const auto n = static_cast<std::size_t>(order) + 1;
    const KTables k(lambda, y, n);
    const ITables i(lambda, y, n);
    return surface_from_tables(k, i, order, lambda, y);
}

double concentric_rr_kernel(const KernelPoint& p) {
    validate(p);
    const int order = std::abs(p.m);
    const double lambda = p.lambda();
    const auto s = concentric_surface(order, lambda, p.y);
    return concentric_from_surface(s, order, p.eta, p.kz, p.y, lambda);
}

void open_gear_brackets(double eta, double kz, double y, std::span<double> te, std::span<double> tm) {
    check_geometry(y);
    check_size(te.size());
    if (tm.size() != te.size()) {
        throw RangeError("te/tm batch sizes differ");
    }
    const double lambda = std::hypot(eta, kz);
    if (lambda == 0.0) {
        std::fill(te.begin(), te.end(), 0.0);
        std::fill(tm.begin(), tm.end(), 0.0);
        return;
    }
    const KTables t(lambda, y, te.size());
    for (std::size_t m = 0; m < te.size(); ++m) {
        const OpenBracket b = open_bracket(t, static_cast<int>(m), eta, kz, y, lambda);
        te[m] = double(m) * b.te_reduced;
        tm[m] = b.tm;
    }
}

void concentric_brackets(double eta, double kz, double y, std::span<double> rr) {
    check_geometry(y);
    check_size(rr.size());
    const double lambda = std::hypot(eta, kz);
    if (lambda == 0.0) {
        std::fill(rr.begin(), rr.end(), 0.0);
        return;
    }
    const KTables k(lambda, y, rr.size());
    const ITables i(lambda, y, rr.size());
    for (std::size_t m = 0; m < rr.size(); ++m) {
        const int order = static_cast<int>(m);
        const auto s = surface_from_tables(k, i, order, lambda, y);
        rr[m] = concentric_from_surface(s, order, eta, kz, y, lambda);
    }
}

double dirichlet_radial_green(int m, double lambda, double y, double r, double r_prime) {
    check_radial(m, lambda, y, r, r_prime);
    const Cylinder c{std::abs(m), lambda};
    const double lo = std::min(r, r_prime);
    const double hi = std::max(r, r_prime);
    return c.dirichlet(lo, 1.0) * c.dirichlet(hi, y) / c.dirichlet(1.0, y);
}

double dirichlet_radial_green_dr(int m, double lambda, double y, double r, double r_prime) {
    check_radial(m, lambda, y, r, r_prime);
    const Cylinder c{std::abs(m), lambda};
    const double delta = c.dirichlet(1.0, y);
    if (r < r_prime) {
        return c.dirichlet_dr(r, 1.0) * c.dirichlet(r_prime, y) / delta;
    }
    return c.dirichlet(r_prime, 1.0) * c.dirichlet_dr(r, y) / delta;
}

double neumann_radial_green(int m, double lambda, double y, double r, double r_prime) {
    check_radial(m, lambda, y, r, r_prime);
    const Cylinder c{std::abs(m), lambda};
    const double lo = std::min(r, r_prime);
    const double hi = std::max(r, r_prime);
    const double delta_prime = c.neumann_dr(1.0, y) / lambda;
    return c.neumann(lo, 1.0) * c.neumann(hi, y) / delta_prime;
}

double neumann_radial_green_dr(int m, double lambda, double y, double r, double r_prime) {
    check_radial(m, lambda, y, r, r_prime);
    const Cylinder c{std::abs(m), lambda};
    const double delta_prime = c.neumann_dr(1.0, y) / lambda;
    if (r < r_prime) {
        return c.neumann_dr(r, 1.0) * c.neumann(r_prime, y) / delta_prime;
    }
    return c.neumann(r_prime, 1.0) * c.neumann_dr(r, y) / delta_prime;
}

}  // namespace casimir::kernels
