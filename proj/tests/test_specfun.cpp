#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/specfun.hpp"

using namespace casimir::specfun;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("specfun") {

// mpmath, 40 digits (tests/oracles/compute_oracles.py)
TEST_CASE("scaled values against arbitrary-precision references") {
    CHECK(rel(bessel_k_scaled(0, 1.0), 1.1444630798068950147) < 1e-14);
    CHECK(rel(bessel_i_scaled(1, 1.0), 0.20791041534970844887) < 1e-14);
    CHECK(rel(bessel_k_scaled(2, 50.0), 0.1839498181997819611) < 1e-14);
    CHECK(rel(bessel_i_scaled(3, 30.0), 0.062802794006337227113) < 1e-14);
    CHECK(rel(bessel_derivatives(1, 2.0).kp_scaled, -1.3583066386051157045) < 1e-14);
    CHECK(rel(bessel_derivatives(1, 2.0).ip_scaled, 0.20087367792920220995) < 1e-14);

    struct Row {
        int m;
        double x, k, i;
    };
    const Row rows[] = {
        {0, 0.01, 4.7686940285444618845, 0.9900745851497074988},
        {5, 0.3, 212115.62969740903149, 4.7055985464040291623e-7},
        {12, 7.5, 1393.0531593861534463, 2.5352407322574049099e-5},
        {7, 120.0, 0.14005434447526302949, 0.029700120061775990049},
        {40, 700.0, 0.14834798203765865422, 0.0048070930910707588653},
        {64, 33.0, 3.9095317995025861325e21, 1.7760876238598131751e-24},
    };
    for (const auto& r : rows) {
        CAPTURE(r.m);
        CAPTURE(r.x);
        CHECK(rel(bessel_k_scaled(r.m, r.x), r.k) < 1e-13);
        CHECK(rel(bessel_i_scaled(r.m, r.x), r.i) < 1e-13);
    }
}

TEST_CASE("agrees with boost cyl_bessel over orders and arguments") {
    double worst_k = 0.0;
    double worst_i = 0.0;
    for (int m = 0; m <= 30; m += 3) {
        for (double x : {0.05, 0.4, 1.0, 3.3, 9.0, 25.0, 80.0, 300.0}) {
            const double k = boost::math::cyl_bessel_k(m, x) * std::exp(x);
            const double i = boost::math::cyl_bessel_i(m, x) * std::exp(-x);
            if (std::isfinite(k) && k > 0.0 && k < 1e300) {
                worst_k = std::max(worst_k, rel(bessel_k_scaled(m, x), k));
            }
            if (std::isfinite(i) && i > 1e-300) {
                worst_i = std::max(worst_i, rel(bessel_i_scaled(m, x), i));
            }
        }
    }
    CHECK(worst_k < 1e-12);
    CHECK(worst_i < 1e-12);
}

TEST_CASE("Wronskian holds across the full order range") {
    for (int m : {0, 1, 13, 30, 64}) {
        for (double x : {0.02, 0.7, 5.0, 19.9, 20.1, 64.0, 500.0, 2000.0}) {
            CAPTURE(m);
            CAPTURE(x);
            CHECK(wronskian_residual(m, x) * x < 1e-12);
        }
    }
}

TEST_CASE("derivatives match central differences") {
    for (int m : {0, 1, 4, 9}) {
        for (double x : {0.3, 2.0, 11.0}) {
            const double h = 1e-5 * x;
            const double k_fd =
                (bessel_k_scaled(m, x + h) * std::exp(-h) - bessel_k_scaled(m, x - h) * std::exp(h)) / (2.0 * h);
            const double i_fd =
                (bessel_i_scaled(m, x + h) * std::exp(h) - bessel_i_scaled(m, x - h) * std::exp(-h)) / (2.0 * h);
            const auto d = bessel_derivatives(m, x);
            CHECK(rel(d.kp_scaled, k_fd) < 1e-8);
            CHECK(rel(d.ip_scaled, i_fd) < 1e-8);
        }
    }
}

TEST_CASE("K grows and I falls with order") {
    for (double x : {0.1, 1.0, 10.0, 100.0}) {
        for (int m = 0; m < 20; ++m) {
            CHECK(bessel_k_scaled(m + 1, x) > bessel_k_scaled(m, x));
            CHECK(bessel_i_scaled(m + 1, x) < bessel_i_scaled(m, x));
        }
    }
}

TEST_CASE("negative orders reflect") {
    CHECK(bessel_k_scaled(-3, 2.5) == bessel_k_scaled(3, 2.5));
    CHECK(bessel_i_scaled(-3, 2.5) == bessel_i_scaled(3, 2.5));
}

TEST_CASE("sequences agree with the scalar functions") {
    std::vector<double> k(kMaxOrder + 2), i(kMaxOrder + 2), kp(kMaxOrder + 1), ip(kMaxOrder + 1);
    for (double x : {0.5, 6.0, 45.0}) {
        bessel_k_scaled_sequence(x, k);
        bessel_i_scaled_sequence(x, i);
        k_derivative_sequence(k, kp);
        i_derivative_sequence(i, ip);
        for (int m = 0; m <= kMaxOrder; ++m) {
            CAPTURE(m);
            if (std::isfinite(k[m]) && k[m] < 1e290) {
                CHECK(rel(k[m], bessel_k_scaled(m, x)) < 1e-13);
            }
            if (i[m] > 1e-290) {
                CHECK(rel(i[m], bessel_i_scaled(m, x)) < 1e-13);
                CHECK(rel(ip[m], bessel_derivatives(m, x).ip_scaled) < 1e-12);
            }
        }
    }
}

TEST_CASE("tiny arguments overflow to infinity in sequences") {
    std::vector<double> k(kMaxOrder + 2);
    bessel_k_scaled_sequence(1e-6, k);
    CHECK(std::isinf(k.back()));
    CHECK(std::isfinite(k[0]));
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(bessel_k_scaled(0, 0.0), casimir::DomainError);
    CHECK_THROWS_AS(bessel_i_scaled(0, -1.0), casimir::DomainError);
    CHECK_THROWS_AS(bessel_k_scaled(0, std::numeric_limits<double>::quiet_NaN()), casimir::DomainError);
    CHECK_THROWS_AS(bessel_k_scaled(kMaxOrder + 1, 1.0), casimir::RangeError);
    CHECK_NOTHROW(bessel_derivatives(kMaxOrder, 1.0));
    std::vector<double> too_long(kMaxOrder + 3);
    CHECK_THROWS_AS(bessel_k_scaled_sequence(1.0, too_long), casimir::RangeError);
}

}
