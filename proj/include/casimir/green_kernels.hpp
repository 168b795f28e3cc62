#pragma once

#include <span>

namespace casimir::kernels {

/// One Euclidean evaluation point of a mode kernel, in cylinder-radius units (a = 1).
///
/// `y` is r/a for the open gear and b/a for the concentric gear.
struct KernelPoint {
    int m = 0;
    double eta = 0.0;
    double kz = 0.0;
    double y = 2.0;

    double lambda() const;
};

/// Throws GeometryError for y <= 1 and SingularPointError for lambda == 0.
void validate(const KernelPoint& p);

/// The two open-gear bracket factors at one point. te_like is odd in m, tm_like even.
struct ModeFactor {
    double te_like = 0.0;
    double tm_like = 0.0;
};

/// V1 bracket: m kz^2/(lambda^2 y) K_m(lambda y)/K_m(lambda) + m eta^2/lambda^2 K'_m(lambda y)/K'_m(lambda).
double v1_factor(const KernelPoint& p);

/// V2 bracket: kz^2/lambda K'_m(lambda y)/K_m(lambda) + eta^2 m^2/(lambda^3 y) K_m(lambda y)/K'_m(lambda).
double v2_factor(const KernelPoint& p);

ModeFactor mode_factor(const KernelPoint& p);

/// Surface values of the radial Green's functions between the inner cylinder (r = 1)
/// and the outer shell (r = y) for the operator (1/r)(r g')' - (m^2/r^2 + lambda^2) g = -delta(r - r')/r.
struct ConcentricSurface {
    double dirichlet_cross = 0.0;  ///< d_r d_r' g_D evaluated at r = y, r' = 1; equals 1/(y Delta_m)
    double neumann_value = 0.0;    ///< g_N(1, y); equals 1/(lambda^2 y Delta'_m)
};

ConcentricSurface concentric_surface(int m, double lambda, double y);

/// Euclidean rr kernel of the concentric gear, same sign convention as v2_factor:
///   c = (kz^2/lambda^2) d_r d_r' g_D - (eta^2 m^2/(lambda^2 y)) g_N.
double concentric_rr_kernel(const KernelPoint& p);

/// Closed-form radial Green's functions on [1, y] and their first r-derivative.
/// Intended for verification at moderate lambda * y (unscaled products).
double dirichlet_radial_green(int m, double lambda, double y, double r, double r_prime);
double dirichlet_radial_green_dr(int m, double lambda, double y, double r, double r_prime);
double neumann_radial_green(int m, double lambda, double y, double r, double r_prime);
double neumann_radial_green_dr(int m, double lambda, double y, double r, double r_prime);

/// Batch evaluation of all orders 0..te.size()-1 at one (eta, kz). Returns zeros at lambda = 0.
/// These are the quadrature integrands; the scalar functions above validate and throw instead.
void open_gear_brackets(double eta, double kz, double y, std::span<double> te, std::span<double> tm);
void concentric_brackets(double eta, double kz, double y, std::span<double> rr);

}  // namespace casimir::kernels
