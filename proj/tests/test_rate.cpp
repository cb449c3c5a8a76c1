#include "doctest.h"

#include <betawalk/rate.hpp>
#include <betawalk/steep.hpp>

#include <cmath>
#include <numbers>

using namespace betawalk;

namespace {

// Psi_k from its defining series with an Euler-Maclaurin tail, k >= 1.
double series_polygamma(int k, double z) {
    const int N = 4000;
    double s = 0;
    for (int n = N - 1; n >= 0; --n) s += std::pow(z + n, -(k + 1));
    const double zN = z + N;
    s += std::pow(zN, -k) / k + 0.5 * std::pow(zN, -(k + 1)) + (k + 1) / 12.0 * std::pow(zN, -(k + 2));
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return (k % 2 ? 1 : -1) * f * s;
}

// Uniform weights: every Psi_k difference telescopes into rationals.
double x_uniform(double th) { return (2 * th + 1) / (2 * th * th + 2 * th + 1); }

double I_uniform(double th) {
    const double den = 2 * th * th + 2 * th + 1;
    return -th * th / den * (2 * th + 1) / (th * (th + 1)) + 1 / (th + 1);
}

double sigma3_uniform(double th) {
    const double w = th * th / (2 * th * th + 2 * th + 1);
    const double h3 = -2 / std::pow(th + 1, 3) + w * (2 / std::pow(th, 3) + 2 / std::pow(th + 1, 3));
    return h3 / 2;
}

}  // namespace

TEST_CASE("uniform weights: closed forms") {
    for (double th : {0.05, 0.1, 0.25, 0.3, 0.45}) {
        ModelParams p{1, 1, th};
        CHECK(x_of_theta(p) == doctest::Approx(x_uniform(th)).epsilon(1e-13));
        CHECK(rate_I(p) == doctest::Approx(I_uniform(th)).epsilon(1e-13));
        CHECK(std::pow(sigma_of_theta(p), 3) == doctest::Approx(sigma3_uniform(th)).epsilon(1e-12));
    }
    CHECK(x_of_theta({1, 1, 0.25}) == doctest::Approx(12.0 / 13).epsilon(1e-15));
    CHECK(rate_I({1, 1, 0.25}) == doctest::Approx(8.0 / 13).epsilon(1e-14));
}

TEST_CASE("general parameters against series polygammas") {
    for (double a : {0.7, 2.0, 10.0})
        for (double b : {0.5, 5.0})
            for (double th : {0.1, 0.3}) {
                ModelParams p{a, b, th};
                const double B = th + a, C = th + a + b;
                const double t1 = series_polygamma(1, th), b1 = series_polygamma(1, B), c1 = series_polygamma(1, C);
                const double x = (c1 + t1 - 2 * b1) / (t1 - c1);
                CHECK(x_of_theta(p) == doctest::Approx(x).epsilon(1e-11));
                const double w = (b1 - c1) / (t1 - c1);
                CHECK(left_weight(p) == doctest::Approx(w).epsilon(1e-11));
                const double h3 = series_polygamma(2, B) - series_polygamma(2, C) +
                                  w * (series_polygamma(2, C) - series_polygamma(2, th));
                CHECK(h_deriv_theta(3, p) == doctest::Approx(h3).epsilon(1e-10));
                CHECK(sigma_of_theta(p) == doctest::Approx(std::cbrt(h3 / 2)).epsilon(1e-10));
            }
}

TEST_CASE("theta is a double critical point of h") {
    for (double th : {0.05, 0.2, 0.45}) {
        ModelParams p{2, 0.5, th};
        const double scale = std::abs(h_deriv_theta(3, p)) * th * th;
        CHECK(std::abs(h_deriv_theta(1, p)) < 1e-12 * std::max(1.0, scale));
        CHECK(std::abs(h_deriv_theta(2, p)) < 1e-11 * std::max(1.0, scale));
        CHECK(std::abs(h_prime(th, p)) < 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("h_prime agrees with differences of h") {
    ModelParams p{1, 1, 0.3};
    const double eps = 1e-5;
    for (cplx z : {cplx(0.3, 0.5), cplx(0.6, -1.2), cplx(1.5, 0.1)}) {
        cplx fd = (h_eval(z + eps, p) - h_eval(z - eps, p)) / (2 * eps);
        CHECK(std::abs(fd - h_prime(z, p)) < 1e-8);
    }
}

TEST_CASE("h_along removes branch jumps") {
    ModelParams p{1, 1, 0.3};
    std::vector<cplx> path;
    for (int i = 0; i <= 400; ++i) {
        const double phi = std::numbers::pi * i / 400;
        path.push_back(0.3 * std::exp(cplx(0, phi)) + cplx(0, 4 * std::sin(phi)));
    }
    auto h = h_along(path, p);
    for (std::size_t i = 1; i < h.size(); ++i) CHECK(std::abs(h[i].imag() - h[i - 1].imag()) < 1.0);
}

TEST_CASE("windows and errors") {
    CHECK(ModelParams{1, 1, 0.3}.in_window());
    CHECK_FALSE(ModelParams{0.5, 0.5, 0.6}.in_window());
    CHECK_FALSE(ModelParams{0.1, 0.1, 0.3}.in_window());
    CHECK(ModelParams{1, 1, 0.45}.theorem_one_range());
    CHECK_FALSE(ModelParams{0.3, 5, 0.25}.theorem_one_range());  // 0.72 alpha = 0.216
    CHECK_THROWS_AS(ModelParams({0.5, 0.5, 0.6}).check_window(), std::domain_error);
    CHECK_THROWS_AS(x_of_theta({-1, 1, 0.3}), std::domain_error);
    CHECK_THROWS_AS(h_deriv_theta(0, {1, 1, 0.3}), OrderError);
    // formulas themselves do not need the window
    CHECK(std::isfinite(x_of_theta({1, 1, 50})));
}

TEST_CASE("x(theta) decreases and stays in (0, 1)") {
    for (double a : {0.7, 1.0, 10.0}) {
        double prev = 1;
        for (double th = 0.02; th < 0.5; th += 0.02) {
            double x = x_of_theta({a, 1, th});
            CHECK(x < prev);
            CHECK(x > 0);
            prev = x;
        }
    }
}

TEST_CASE("steep-descent suites pass on the default grid") {
    const SteepGrid g = SteepGrid::defaults();
    for (const auto& r : verify_polygamma_suite(g)) {
        INFO(r.suite);
        CHECK(r.pass);
        CHECK(r.min_margin > 0);
    }
    for (const auto& r : verify_steep_descent(g)) {
        INFO(r.suite);
        CHECK(r.pass);
        CHECK(r.min_margin > 0);
    }
}

TEST_CASE("the fault hook is caught") {
    VerifyOptions o;
    o.inject_fault = true;
    bool any_fail = false;
    for (const auto& r : verify_steep_descent(SteepGrid::defaults(), o)) any_fail = any_fail || !r.pass;
    CHECK(any_fail);
}

TEST_CASE("circle and vertical helpers") {
    ModelParams p{1, 1, 0.3};
    // Re h on the circle decreases away from theta, so the margin is positive
    for (double phi : {0.1, 1.0, 2.5}) CHECK(steep_circle_margin(phi, p) > 0);
    // H is Im h'(theta + iy) / y
    for (double y : {0.05, 1.0, 7.0})
        CHECK(steep_vertical_H(y, p) == doctest::Approx(steep_vertical(y, p) / y).epsilon(1e-8));
    // direct sum for the phi series
    double direct = 0;
    for (int n = 0; n < 200000; ++n) direct += 1 / ((n + 0.4) * (n + 0.4) + 0.09);
    direct += 1 / (200000 + 0.4);
    CHECK(phi_series(0.4, 0.3) == doctest::Approx(direct).epsilon(1e-9));
}
