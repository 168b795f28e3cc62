#include "casimir/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEulerGamma = std::numbers::egamma;
constexpr double kSeriesLimitK = 2.0;
constexpr double kAsymptoticLimitI0 = 20.0;
constexpr double kMaxSeriesArgumentI = 700.0;
constexpr int kMaxIterations = 200000;
// Sequences extend one order past kMaxOrder so derivatives of order kMaxOrder exist.
constexpr std::size_t kMaxSequence = kMaxOrder + 2;

void check_argument(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("modified Bessel argument must be finite and positive, got " +
                          std::to_string(x));
    }
}

int checked_order(int m) {
    const int order = std::abs(m);
    if (order > kMaxOrder) {
        throw RangeError("Bessel order " + std::to_string(m) + " outside supported range [-" +
                         std::to_string(kMaxOrder) + ", " + std::to_string(kMaxOrder) + "]");
    }
    return order;
}

// e^x K_0(x), e^x K_1(x) from the logarithmic power series (x <= 2).
std::array<double, 2> k01_series(double x) {
    const double q = 0.25 * x * x;
    const double log_half = std::log(0.5 * x);

    // K_0 = -(ln(x/2) + gamma) I_0 + sum_{k>=1} H_k q^k / (k!)^2
    double term = 1.0;
    double i0 = 1.0;
    double harmonic = 0.0;
    double k0_tail = 0.0;
    // K_1 = 1/x + ln(x/2) I_1 - (x/4) sum_k (psi(k+1) + psi(k+2)) q^k / (k!(k+1)!)
    double term1 = 1.0;
    double i1_sum = 1.0;
    double psi_sum = -2.0 * kEulerGamma + 1.0;
    double k1_tail = psi_sum;
    for (int k = 1; k < 200; ++k) {
        term *= q / (double(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        k0_tail += harmonic * term;

        term1 *= q / (double(k) * (k + 1));
        i1_sum += term1;
        psi_sum = -2.0 * kEulerGamma + 2.0 * harmonic + 1.0 / (k + 1);
        k1_tail += psi_sum * term1;
        if (term * harmonic < 1e-3 * kEps && term1 * psi_sum < 1e-3 * kEps) {
            break;
        }
    }
    const double i1 = 0.5 * x * i1_sum;
    const double k0 = -(log_half + kEulerGamma) * i0 + k0_tail;
    const double k1 = 1.0 / x + log_half * i1 - 0.25 * x * k1_tail;
    const double scale = std::exp(x);
    return {k0 * scale, k1 * scale};
}

// Steed's continued fraction CF2 for e^x K_0, e^x K_1 (x > 2).
std::array<double, 2> k01_continued_fraction(double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i < kMaxIterations; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) {
            break;
        }
    }
    if (i == kMaxIterations) {
        throw ConsistencyError("K continued fraction failed to converge at x = " + std::to_string(x));
    }
    h *= a1;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

// e^-x I_m(x) by its positive power series.
double i_series(int m, double x) {
    double term = std::exp(-x);
    const double half = 0.5 * x;
    for (int j = 1; j <= m; ++j) {
        term *= half / j;
    }
    const double q = half * half;
    double sum = term;
    for (int k = 1; k < kMaxIterations; ++k) {
        term *= q / (double(k) * (m + k));
        sum += term;
        if (term < kEps * 0.25 * sum && k > half) {
            break;
        }
    }
    return sum;
}

// e^-x I_0(x) from the large-argument expansion (x > 20: all terms positive).
double i0_asymptotic(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if (next > term) {
            break;
        }
        term = next;
        sum += term;
        if (term < kEps * 0.25 * sum) {
            break;
        }
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

// I_{n+1}(x) / I_n(x) by the modified Lentz algorithm.
double i_ratio_continued_fraction(int n, double x) {
    constexpr double tiny = 1e-300;
    double f = tiny;
    double c = f;
    double d = 0.0;
    int k = 1;
    for (; k < kMaxIterations; ++k) {
        const double b = 2.0 * (n + k) / x;
        d = b + d;
        if (d == 0.0) d = tiny;
        d = 1.0 / d;
        c = b + 1.0 / c;
        if (c == 0.0) c = tiny;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            break;
        }
    }
    if (k == kMaxIterations) {
        throw ConsistencyError("I ratio continued fraction failed to converge at x = " + std::to_string(x));
    }
    return f;
}

bool use_i_series(int m, double x) {
    return x <= kMaxSeriesArgumentI && x <= std::max(kAsymptoticLimitI0, 0.25 * m * m);
}

// Miller-style downward recurrence seeded by CF1, normalised by the independent
// e^-x I_0(x). Fills out[0..n].
void i_downward(double x, std::span<double> out) {
    const int top = static_cast<int>(out.size()) - 1;
    double upper = i_ratio_continued_fraction(top, x);
    double current = 1.0;
    out[top] = current;
    for (int n = top; n >= 1; --n) {
        const double lower = upper + (2.0 * n / x) * current;
        upper = current;
        current = lower;
        out[n - 1] = current;
    }
    const double norm = (x > kAsymptoticLimitI0 ? i0_asymptotic(x) : i_series(0, x)) / out[0];
    for (auto& v : out) {
        v *= norm;
    }
}

}  // namespace

void bessel_k_scaled_sequence(double x, std::span<double> out) {
    check_argument(x);
    if (out.empty()) {
        return;
    }
    if (out.size() > kMaxSequence) {
        throw RangeError("Bessel sequence longer than supported order range");
    }
    const auto k01 = x <= kSeriesLimitK ? k01_series(x) : k01_continued_fraction(x);
    out[0] = k01[0];
    if (out.size() == 1) {
        return;
    }
    out[1] = k01[1];
    for (std::size_t n = 1; n + 1 < out.size(); ++n) {
        out[n + 1] = out[n - 1] + (2.0 * n / x) * out[n];
    }
}

void bessel_i_scaled_sequence(double x, std::span<double> out) {
    check_argument(x);
    if (out.empty()) {
        return;
    }
    if (out.size() > kMaxSequence) {
        throw RangeError("Bessel sequence longer than supported order range");
    }
    if (x <= kAsymptoticLimitI0) {
        for (std::size_t n = 0; n < out.size(); ++n) {
            out[n] = i_series(static_cast<int>(n), x);
        }
        return;
    }
    i_downward(x, out);
}

void k_derivative_sequence(std::span<const double> k, std::span<double> kp) {
    if (kp.size() + 1 != k.size()) {
        throw RangeError("derivative sequence needs one more input order than outputs");
    }
    if (kp.empty()) {
        return;
    }
    kp[0] = -k[1];
    for (std::size_t n = 1; n < kp.size(); ++n) {
        kp[n] = -0.5 * (k[n - 1] + k[n + 1]);
    }
}

void i_derivative_sequence(std::span<const double> i, std::span<double> ip) {
    if (ip.size() + 1 != i.size()) {
        throw RangeError("derivative sequence needs one more input order than outputs");
    }
    if (ip.empty()) {
        return;
    }
    ip[0] = i[1];
    for (std::size_t n = 1; n < ip.size(); ++n) {
        ip[n] = 0.5 * (i[n - 1] + i[n + 1]);
    }
}

namespace {

double k_scaled_unchecked(int order, double x) {
    std::array<double, kMaxSequence> buffer{};
    std::span<double> seq(buffer.data(), static_cast<std::size_t>(order) + 1);
    bessel_k_scaled_sequence(x, seq);
    return seq[order];
}

double i_scaled_unchecked(int order, double x) {
    if (use_i_series(order, x)) {
        return i_series(order, x);
    }
    std::array<double, kMaxSequence> buffer{};
    std::span<double> seq(buffer.data(), static_cast<std::size_t>(order) + 1);
    i_downward(x, seq);
    return seq[order];
}

}  // namespace

double bessel_k_scaled(int m, double x) {
    const int order = checked_order(m);
    check_argument(x);
    return k_scaled_unchecked(order, x);
}

double bessel_i_scaled(int m, double x) {
    const int order = checked_order(m);
    check_argument(x);
    return i_scaled_unchecked(order, x);
}

ScaledDerivatives bessel_derivatives(int m, double x) {
    const int order = checked_order(m);
    check_argument(x);
    const double k_up = k_scaled_unchecked(order + 1, x);
    const double i_up = i_scaled_unchecked(order + 1, x);
    if (order == 0) {
        return {-k_up, i_up};
    }
    return {-0.5 * (k_scaled_unchecked(order - 1, x) + k_up),
            0.5 * (i_scaled_unchecked(order - 1, x) + i_up)};
}

ScaledBesselValue scaled_bessel(int m, double x) {
    const auto d = bessel_derivatives(m, x);
    return {m, x, bessel_k_scaled(m, x), bessel_i_scaled(m, x), d.kp_scaled, d.ip_scaled};
}

double wronskian_residual(int m, double x) {
    const auto v = scaled_bessel(m, x);
    return std::abs(v.i_scaled * v.kp_scaled - v.ip_scaled * v.k_scaled + 1.0 / x);
}

}  // namespace casimir::specfun
