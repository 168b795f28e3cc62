#pragma once

#include <span>

namespace casimir::specfun {

/// Largest supported |order|. Kernels need m_max + 1 for derivatives.
inline constexpr int kMaxOrder = 64;

/// Exponentially scaled modified Bessel values at integer order m and x > 0.
///
/// k_scaled = e^x K_m(x), i_scaled = e^-x I_m(x); derivatives carry the same
/// scale factors, so products such as i_scaled * kp_scaled are unscaled.
struct ScaledBesselValue {
    int order = 0;
    double argument = 0.0;
    double k_scaled = 0.0;
    double i_scaled = 0.0;
    double kp_scaled = 0.0;
    double ip_scaled = 0.0;
};

struct ScaledDerivatives {
    double kp_scaled = 0.0;
    double ip_scaled = 0.0;
};

/// e^x K_m(x). Negative orders map to |m| (K_{-m} = K_m).
double bessel_k_scaled(int m, double x);

/// e^-x I_m(x). Negative orders map to |m| (I_{-m} = I_m for integer m).
double bessel_i_scaled(int m, double x);

/// (e^x K'_m(x), e^-x I'_m(x)) from the order recurrences.
ScaledDerivatives bessel_derivatives(int m, double x);

ScaledBesselValue scaled_bessel(int m, double x);

/// |I_m K'_m - I'_m K_m + 1/x|; zero in exact arithmetic.
double wronskian_residual(int m, double x);

/// Fills out[n] = e^x K_n(x) for n = 0 .. out.size()-1 (upward recurrence).
/// Entries may be +inf when K_n(x) overflows at tiny x.
void bessel_k_scaled_sequence(double x, std::span<double> out);

/// Fills out[n] = e^-x I_n(x) for n = 0 .. out.size()-1.
void bessel_i_scaled_sequence(double x, std::span<double> out);

/// Converts scaled sequences of orders 0..N into derivative sequences of orders
/// 0..N-1 (kp.size() == k.size() - 1).
void k_derivative_sequence(std::span<const double> k, std::span<double> kp);
void i_derivative_sequence(std::span<const double> i, std::span<double> ip);

}  // namespace casimir::specfun
