#pragma once

#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace casimir {

enum class GearKind { open_gear, concentric };

/// Serial runs the same loops as Parallel with OpenMP disabled; results are bit-identical.
enum class Execution { serial, parallel };

const char* to_string(GearKind kind);

}  // namespace casimir

namespace casimir::quad {

/// Tolerances and domain truncation shared by every integral.
struct QuadratureSpec {
    double rel_tol = 1e-7;
    double abs_tol = 1e-12;
    int max_subdivisions = 200;
    /// Integrals stop at lambda (y - 1) = decay_cutoff; the integrands fall like e^{-lambda (y-1)}.
    double decay_cutoff = 50.0;

    void validate() const;
    /// Upper integration bound for eta or kz at radial ratio y.
    double upper_bound(double y) const;
};

/// Angular-mode truncation. With convergence_check on, results at m_max are compared
/// against m_max + 1 and rejected when the change exceeds truncation_tol relative to the
/// energy scale (see Truncation in scenarios.hpp).
struct ModeSumSpec {
    int m_max = 6;
    bool convergence_check = true;
    double truncation_tol = 5e-2;

    void validate() const;
};

enum class KernelKind { v1_bracket, v2_bracket, concentric };

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

struct VectorEstimate {
    std::vector<double> value;
    double error = 0.0;
    int panels = 0;
};

/// Error control of one adaptive integral. `l1_scale` measures the relative tolerance
/// against the integral of |f| rather than |integral of f| (for sign-changing integrands).
struct Tolerance {
    double rel = 1e-7;
    double abs = 1e-12;
    int max_panels = 200;
    bool l1_scale = false;
};

using VectorIntegrand = std::function<void(double x, std::span<double> out)>;
using ScalarIntegrand = std::function<double(double x)>;

/// 21-point Gauss-Kronrod rule with embedded 10-point Gauss rule on [-1, 1].
struct GaussKronrod21 {
    static constexpr int kPoints = 21;
    std::span<const double> nodes() const;           ///< Kronrod abscissae, ascending
    std::span<const double> kronrod_weights() const;
    std::span<const double> gauss_weights() const;   ///< zero at Kronrod-only nodes

    static const GaussKronrod21& instance();

private:
    GaussKronrod21();
    std::vector<double> x_, wk_, wg_;
};

/// Globally adaptive vector quadrature over [breaks.front(), breaks.back()].
/// Panels are refined in deterministic batches; the result does not depend on
/// scheduling. Throws QuadratureError when the panel budget is exhausted.
VectorEstimate integrate(const VectorIntegrand& f, std::size_t dim, std::span<const double> breaks,
                         const Tolerance& tol);

Estimate integrate(const ScalarIntegrand& f, std::span<const double> breaks, const Tolerance& tol);

/// Breakpoints 0 < ... < upper in units of the decay length 1/(y - 1), with an extra
/// break at `feature` (also in physical units) when it lies inside the domain.
std::vector<double> decay_breakpoints(double y, const QuadratureSpec& spec, double feature = 0.0);

/// (1/2pi) * integral over kz in (-inf, inf) of one kernel, folded to [0, inf).
double kz_profile(int m, double eta, double y, KernelKind which, const QuadratureSpec& spec);

/// All k_z profiles of orders 0..max_order at one eta. For the open gear `out` holds
/// the V1 profiles followed by the V2 profiles (2 (max_order+1) values); for the
/// concentric gear only the rr profiles (max_order+1 values).
void kz_profiles(GearKind kind, double eta, double y, int max_order, const QuadratureSpec& spec,
                 std::span<double> out);

std::size_t profile_width(GearKind kind, int max_order);

/// Angular sums of the open-gear profiles at one eta.
/// sum_m e^{i m beta} P_V1(m) = i * s1 (pure imaginary, V1 odd in m) and
/// sum_m e^{i m beta} P_V2(m) = s2 (real, V2 even in m).
struct ModeSums {
    double s1 = 0.0;
    double s2 = 0.0;
};

ModeSums mode_sums(double eta, double beta, double y, const ModeSumSpec& mspec, const QuadratureSpec& spec);

/// Dimensionless open-gear energy F(y, beta) from the factorized eta integral.
double eta_integral(double beta, double y, const ModeSumSpec& mspec, const QuadratureSpec& spec);

/// Literal triple integral over (eta, kz1, kz2) with the double mode sum inside.
/// Slow; a verification oracle for eta_integral. Coarse tolerances only.
double brute_force_triple(double beta, double y, const ModeSumSpec& mspec, const QuadratureSpec& coarse);

/// Overall factor of the eta integral: F = -kEnergyPrefactor * integral_0^inf (s1^2 + s2^2) d eta.
inline constexpr double kEnergyPrefactor = 1.0 / (2.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi);

}  // namespace casimir::quad
