#include <doctest.h>

#include <cmath>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/green_kernels.hpp"
#include "casimir/validation.hpp"

using namespace casimir::kernels;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("green_kernels") {

// mpmath, 40 digits (tests/oracles/compute_oracles.py)
TEST_CASE("brackets against arbitrary-precision references") {
    CHECK(rel(v1_factor({1, 1.0, 1.0, 5.0}), 0.00062512105203088516836) < 1e-12);
    CHECK(rel(v2_factor({2, 0.5, 1.5, 10.0}), -1.4196801972199479682e-7) < 1e-12);
    // the ODE shooting and the Bessel closed form agree to 20 digits on this value
    CHECK(rel(concentric_rr_kernel({1, 1.0, 1.0, 3.0}), -0.049131211080330334669) < 1e-12);
}

TEST_CASE("parity under m -> -m is exact") {
    for (int m = 1; m <= 9; ++m) {
        const KernelPoint p{m, 0.7, -1.3, 2.5};
        const KernelPoint q{-m, 0.7, -1.3, 2.5};
        CHECK(v1_factor(q) == -v1_factor(p));
        CHECK(v2_factor(q) == v2_factor(p));
        CHECK(concentric_rr_kernel(q) == concentric_rr_kernel(p));
    }
    CHECK(v1_factor({0, 0.7, 1.3, 2.5}) == 0.0);
}

TEST_CASE("brackets are even in kz") {
    CHECK(v1_factor({3, 0.4, 2.0, 4.0}) == v1_factor({3, 0.4, -2.0, 4.0}));
    CHECK(v2_factor({3, 0.4, 2.0, 4.0}) == v2_factor({3, 0.4, -2.0, 4.0}));
}

TEST_CASE("the even bracket is negative") {
    for (int m = 0; m <= 6; ++m) {
        for (double lam : {0.01, 0.3, 2.0, 15.0}) {
            CHECK(v2_factor({m, lam * 0.6, lam * 0.8, 3.0}) < 0.0);
            CHECK(concentric_rr_kernel({m, lam * 0.6, lam * 0.8, 3.0}) < 0.0);
        }
    }
}

TEST_CASE("invalid points") {
    CHECK_THROWS_AS(v1_factor({1, 0.0, 0.0, 5.0}), casimir::SingularPointError);
    CHECK_THROWS_AS(v2_factor({1, 1.0, 1.0, 1.0}), casimir::GeometryError);
    CHECK_THROWS_AS(concentric_rr_kernel({1, 1.0, 1.0, 0.5}), casimir::GeometryError);
    CHECK_THROWS_AS(v2_factor({65, 1.0, 1.0, 2.0}), casimir::RangeError);
    CHECK_THROWS_AS(v2_factor({1, std::nan(""), 1.0, 2.0}), casimir::DomainError);
}

TEST_CASE("batch evaluation matches the scalar kernels") {
    const int n = 13;
    std::vector<double> te(n), tm(n), rr(n);
    for (double y : {1.2, 3.0, 10.0}) {
        for (double eta : {0.05, 1.0, 7.0}) {
            for (double kz : {0.0, 0.3, 4.0}) {
                open_gear_brackets(eta, kz, y, te, tm);
                concentric_brackets(eta, kz, y, rr);
                for (int m = 0; m < n; ++m) {
                    const KernelPoint p{m, eta, kz, y};
                    CAPTURE(m);
                    CHECK(te[m] == doctest::Approx(v1_factor(p)).epsilon(1e-12));
                    CHECK(tm[m] == doctest::Approx(v2_factor(p)).epsilon(1e-12));
                    CHECK(rr[m] == doctest::Approx(concentric_rr_kernel(p)).epsilon(1e-12));
                }
            }
        }
    }
    open_gear_brackets(0.0, 0.0, 2.0, te, tm);
    concentric_brackets(0.0, 0.0, 2.0, rr);
    for (int m = 0; m < n; ++m) {
        CHECK(te[m] == 0.0);
        CHECK(tm[m] == 0.0);
        CHECK(rr[m] == 0.0);
    }
}

TEST_CASE("brackets decay like exp(-lambda (y - 1))") {
    const double y = 4.0;
    for (int m : {0, 2, 5}) {
        const double a = v2_factor({m, 0.0, 30.0, y});
        const double b = v2_factor({m, 0.0, 31.0, y});
        CHECK(b / a == doctest::Approx(std::exp(-(y - 1.0))).epsilon(0.05));
    }
}

TEST_CASE("small lambda stays finite and continuous at high order") {
    const int n = 65;
    std::vector<double> te(n), tm(n), rr(n), te_prev(n), tm_prev(n), rr_prev(n);
    bool first = true;
    for (int k = 0; k <= 240; ++k) {
        const double lam = std::pow(10.0, -8.0 + k * 0.025);
        open_gear_brackets(lam * 0.6, lam * 0.8, 1.5, te, tm);
        concentric_brackets(lam * 0.6, lam * 0.8, 1.5, rr);
        for (int m = 0; m < n; ++m) {
            CAPTURE(m);
            CAPTURE(lam);
            REQUIRE(std::isfinite(te[m]));
            REQUIRE(std::isfinite(tm[m]));
            REQUIRE(std::isfinite(rr[m]));
            if (!first && tm_prev[m] != 0.0) {
                CHECK(std::abs(tm[m] / tm_prev[m] - 1.0) < 0.1);
                CHECK(std::abs(rr[m] / rr_prev[m] - 1.0) < 0.1);
            }
        }
        te_prev = te;
        tm_prev = tm;
        rr_prev = rr;
        first = false;
    }
}

TEST_CASE("brackets fall monotonically deep in the decay region") {
    const double y = 2.0;
    for (int m : {0, 1, 4}) {
        double f1 = INFINITY, f2 = INFINITY, c = INFINITY;
        for (double lam = 20.0; lam < 60.0; lam += 0.5) {
            const KernelPoint p{m, 0.6 * lam, 0.8 * lam, y};
            CHECK(std::abs(v1_factor(p)) <= f1);
            CHECK(std::abs(v2_factor(p)) < f2);
            CHECK(std::abs(concentric_rr_kernel(p)) < c);
            f1 = std::abs(v1_factor(p));
            f2 = std::abs(v2_factor(p));
            c = std::abs(concentric_rr_kernel(p));
        }
    }
}

TEST_CASE("outer-shell reflection off the inner cylinder becomes negligible") {
    // drop I_m(lambda) K_m(lambda y) against I_m(lambda y) K_m(lambda): only the shell's own
    // boundary remains
    const double y = 50.0;
    for (int m : {0, 1, 4}) {
        for (double lam : {0.3, 1.0}) {
            const double eta = 0.6 * lam;
            const double kz = 0.8 * lam;
            const double i_out = std::cyl_bessel_i(m, lam * y);
            const double k_in = std::cyl_bessel_k(m, lam);
            const double ip_out = 0.5 * (std::cyl_bessel_i(std::abs(m - 1), lam * y) + std::cyl_bessel_i(m + 1, lam * y));
            const double kp_in = -0.5 * (std::cyl_bessel_k(std::abs(m - 1), lam) + std::cyl_bessel_k(m + 1, lam));
            const double delta = -i_out * k_in;
            const double delta_prime = -ip_out * kp_in;
            const double reduced = kz * kz / (lam * lam * y * delta) -
                                   eta * eta * m * m / (lam * lam * lam * lam * y * y * delta_prime);
            CAPTURE(m);
            CAPTURE(lam);
            CHECK(concentric_rr_kernel({m, eta, kz, y}) == doctest::Approx(reduced).epsilon(1e-6));
        }
    }
}

TEST_CASE("concentric surface values match the radial ODE") {
    for (int m : {0, 1, 3, 8}) {
        for (double lambda : {0.2, 1.0, 4.0}) {
            for (double y : {1.3, 2.0, 6.0}) {
                const auto closed = concentric_surface(m, lambda, y);
                const auto ode = casimir::validation::ode_concentric_surface(m, lambda, y);
                CAPTURE(m);
                CAPTURE(lambda);
                CAPTURE(y);
                CHECK(rel(closed.dirichlet_cross, ode.dirichlet_cross) < 1e-9);
                CHECK(rel(closed.neumann_value, ode.neumann_value) < 1e-9);
            }
        }
    }
}

TEST_CASE("a distant outer shell doubles the open-gear even bracket") {
    // the off-surface cog sits on the shell wall, where the reflected field equals the incident one
    for (int m : {0, 1, 3}) {
        const KernelPoint p{m, 0.6, 0.8, 200.0};
        CAPTURE(m);
        CHECK(concentric_rr_kernel(p) / v2_factor(p) == doctest::Approx(2.0).epsilon(0.01));
    }
}

TEST_CASE("radial Green's functions: boundary values, symmetry and jump") {
    for (int m : {0, 2, 5}) {
        for (double lambda : {0.4, 2.0}) {
            const double y = 3.0;
            const double rp = 1.7;
            CAPTURE(m);
            CAPTURE(lambda);
            const double g = dirichlet_radial_green(m, lambda, y, rp, rp);
            CHECK(std::abs(dirichlet_radial_green(m, lambda, y, 1.0, rp)) < 1e-12 * g);
            CHECK(std::abs(dirichlet_radial_green(m, lambda, y, y, rp)) < 1e-12 * g);
            CHECK(std::abs(neumann_radial_green_dr(m, lambda, y, 1.0, rp)) < 1e-12);
            CHECK(std::abs(neumann_radial_green_dr(m, lambda, y, y, rp)) < 1e-12);
            CHECK(dirichlet_radial_green(m, lambda, y, 2.4, rp) ==
                  doctest::Approx(dirichlet_radial_green(m, lambda, y, rp, 2.4)).epsilon(1e-13));
            CHECK(neumann_radial_green(m, lambda, y, 2.4, rp) ==
                  doctest::Approx(neumann_radial_green(m, lambda, y, rp, 2.4)).epsilon(1e-13));
            const double eps = 1e-9;
            const double jump_d = dirichlet_radial_green_dr(m, lambda, y, rp + eps, rp) -
                                  dirichlet_radial_green_dr(m, lambda, y, rp - eps, rp);
            const double jump_n =
                neumann_radial_green_dr(m, lambda, y, rp + eps, rp) - neumann_radial_green_dr(m, lambda, y, rp - eps, rp);
            CHECK(jump_d == doctest::Approx(-1.0 / rp).epsilon(1e-6));
            CHECK(jump_n == doctest::Approx(-1.0 / rp).epsilon(1e-6));
        }
    }
}

TEST_CASE("surface values are limits of the radial Green's functions") {
    const int m = 2;
    const double lambda = 0.9;
    const double y = 2.5;
    const auto s = concentric_surface(m, lambda, y);
    CHECK(neumann_radial_green(m, lambda, y, 1.0, y) == doctest::Approx(s.neumann_value).epsilon(1e-12));
    // d_r d_r' g_D at (y, 1) by a one-sided difference in r'
    const double h = 1e-6;
    const double cross = (dirichlet_radial_green_dr(m, lambda, y, y, 1.0 + h) - dirichlet_radial_green_dr(m, lambda, y, y, 1.0)) / h;
    CHECK(cross == doctest::Approx(s.dirichlet_cross).epsilon(1e-5));
}

}
