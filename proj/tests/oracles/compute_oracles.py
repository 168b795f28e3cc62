#!/usr/bin/env python3
"""Independent arbitrary-precision reference values frozen into the C++ tests.

Nothing here shares code with the C++ library. Bessel values come from mpmath's
own implementations, the concentric kernel from a Taylor-series ODE solve of the
radial boundary-value problem, and the energies from scipy nested quadrature over exponentially scaled Bessel functions.

Run: python3 tests/oracles/compute_oracles.py
"""
import mpmath as mp

mp.mp.dps = 40


def kscaled(m, x):
    return mp.e**x * mp.besselk(m, x)


def iscaled(m, x):
    return mp.e**(-x) * mp.besseli(m, x)


def kprime(m, x):
    return mp.diff(lambda t: mp.besselk(m, t), x)


def v1_bracket(m, eta, kz, y):
    lam = mp.sqrt(eta**2 + kz**2)
    return (m * kz**2 / (lam**2 * y) * mp.besselk(m, lam * y) / mp.besselk(m, lam)
            + m * eta**2 / lam**2 * kprime(m, lam * y) / kprime(m, lam))


def v2_bracket(m, eta, kz, y):
    lam = mp.sqrt(eta**2 + kz**2)
    return (kz**2 / lam * kprime(m, lam * y) / mp.besselk(m, lam)
            + eta**2 * m**2 / (lam**3 * y) * mp.besselk(m, lam * y) / kprime(m, lam))


def shoot(m, lam, y, u0, du0):
    # u'' = -u'/r + (m^2/r^2 + lam^2) u on [1, y]
    f = mp.odefun(lambda r, s: [s[1], -s[1] / r + (m**2 / r**2 + lam**2) * s[0]],
                  1, [u0, du0])
    return f(y)


def concentric_ode(m, eta, kz, y):
    lam = mp.sqrt(eta**2 + kz**2)
    u = shoot(m, lam, y, mp.mpf(0), mp.mpf(1))   # Dirichlet at r = 1
    v = shoot(m, lam, y, mp.mpf(1), mp.mpf(0))   # Neumann at r = 1
    cross_dirichlet = -1 / (y * u[0])            # d_r d_r' g_D at (1, y)
    neumann_surface = 1 / (y * v[1])             # g_N at (1, y)
    return (kz**2 / lam**2) * cross_dirichlet - (eta**2 * m**2 / (lam**2 * y)) * neumann_surface


def concentric_bessel(m, eta, kz, y):
    lam = mp.sqrt(eta**2 + kz**2)
    I, K = mp.besseli, mp.besselk
    Ip = lambda n, x: mp.diff(lambda t: I(n, t), x)
    delta = I(m, lam) * K(m, lam * y) - I(m, lam * y) * K(m, lam)
    dprime = Ip(m, lam) * kprime(m, lam * y) - Ip(m, lam * y) * kprime(m, lam)
    return kz**2 / (lam**2 * y * delta) - eta**2 * m**2 / (lam**4 * y**2 * dprime)


def kz_profile_v2(m, eta, y):
    return mp.quad(lambda k: v2_bracket(m, eta, k, y), [0, 1, 4, mp.inf]) / mp.pi


def mode_sum_pair(eta, beta, y, M):
    # literal double sum over signed orders; returns (S1, S2, double_sum)
    mp.mp.dps = 20
    p1 = {m: mp.quad(lambda k: v1_bracket(m, eta, k, y), [0, 1, 4, mp.inf]) / mp.pi for m in range(-M, M + 1)}
    p2 = {m: mp.quad(lambda k: v2_bracket(abs(m), eta, k, y), [0, 1, 4, mp.inf]) / mp.pi for m in range(-M, M + 1)}
    mp.mp.dps = 40
    ph = {m: mp.expj(m * beta) for m in range(-M, M + 1)}
    s1 = sum(ph[m] * p1[m] for m in p1)
    s2 = sum(ph[m] * p2[m] for m in p2)
    double = sum(ph[a] * ph[b] * (-p1[a] * p1[b] + p2[a] * p2[b]) for a in p1 for b in p1)
    return mp.im(s1), mp.re(s2), mp.re(double)


def scipy_energy(kind, y, beta, M):
    import numpy as np
    from scipy.special import ive, kve
    from scipy.integrate import quad, quad_vec

    def kp(m, x):
        return -(kve(m - 1, x) + kve(m + 1, x)) / 2

    def ip(m, x):
        return (ive(m - 1, x) + ive(m + 1, x)) / 2

    def brackets(m, eta, k):
        lam = np.hypot(eta, k)
        e = np.exp(-lam * (y - 1))
        if kind == "open":
            f1 = (m * k * k / (lam * lam * y) * kve(m, lam * y) / kve(m, lam)
                  + m * eta * eta / lam**2 * kp(m, lam * y) / kp(m, lam)) * e
            f2 = (k * k / lam * kp(m, lam * y) / kve(m, lam)
                  + eta * eta * m * m / (lam**3 * y) * kve(m, lam * y) / kp(m, lam)) * e
            return f1, f2
        e2 = e * e
        inv_delta = e / (ive(m, lam) * kve(m, lam * y) * e2 - ive(m, lam * y) * kve(m, lam))
        inv_dprime = e / (ip(m, lam) * kp(m, lam * y) * e2 - ip(m, lam * y) * kp(m, lam))
        return 0.0, k * k / (lam**2 * y) * inv_delta - eta * eta * m * m / (lam**4 * y * y) * inv_dprime

    upper = 60 / (y - 1)

    def profile(which, m, eta):
        return quad(lambda k: brackets(m, eta, k)[which], 0, upper, points=[eta] if 0 < eta < upper else None,
                    limit=400, epsabs=1e-16, epsrel=1e-11)[0] / np.pi

    def integrand(eta):
        s1 = 2 * sum(np.sin(m * beta) * profile(0, m, eta) for m in range(1, M + 1)) if kind == "open" else 0.0
        s2 = profile(1, 0, eta) + 2 * sum(np.cos(m * beta) * profile(1, m, eta) for m in range(1, M + 1))
        return s1 * s1 + s2 * s2

    val = quad(integrand, 0, upper, points=[0.5 / (y - 1), 2 / (y - 1), 6 / (y - 1)], limit=400, epsabs=0,
               epsrel=1e-10)[0]
    return -val / (2 * np.pi**3)


def main():
    print("e*K0(1)            ", mp.nstr(kscaled(0, 1), 20))
    print("e^-1*I1(1)         ", mp.nstr(iscaled(1, 1), 20))
    print("e^50*K2(50)        ", mp.nstr(kscaled(2, 50), 20))
    print("e^-30*I3(30)       ", mp.nstr(iscaled(3, 30), 20))
    print("e^2*K1'(2)         ", mp.nstr(mp.e**2 * kprime(1, 2), 20))
    print("e^-2*I1'(2)        ", mp.nstr(mp.e**-2 * mp.diff(lambda t: mp.besseli(1, t), 2), 20))
    for m, x in [(0, 0.01), (5, 0.3), (12, 7.5), (7, 120), (40, 700), (64, 33.0)]:
        print(f"k({m},{x})".ljust(19), mp.nstr(kscaled(m, x), 20),
              f" i({m},{x})", mp.nstr(iscaled(m, x), 20))
    print("f1(1,1,1,5)        ", mp.nstr(v1_bracket(1, 1, 1, 5), 20))
    print("f2(2,.5,1.5,10)    ", mp.nstr(v2_bracket(2, mp.mpf('0.5'), mp.mpf('1.5'), 10), 20))
    print("c ode (1,1,1,3)    ", mp.nstr(concentric_ode(1, 1, 1, 3), 20))
    print("c bessel (1,1,1,3) ", mp.nstr(concentric_bessel(1, 1, 1, 3), 20))
    print("P_v2(1,1,5)        ", mp.nstr(kz_profile_v2(1, 1, 5), 20))
    s1, s2, double = mode_sum_pair(mp.mpf(1), mp.pi / 4, mp.mpf(10), 6)
    print("S1,S2,sum (1,pi/4,10,6)", mp.nstr(s1, 17), mp.nstr(s2, 17), mp.nstr(double, 17))
    print("F open (5,1,6)     ", repr(scipy_energy("open", 5.0, 1.0, 6)))
    print("F conc (5,1,6)     ", repr(scipy_energy("concentric", 5.0, 1.0, 6)))


if __name__ == "__main__":
    main()
