#include "doctest.h"

#include <betawalk/moments.hpp>
#include <betawalk/specfun.hpp>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <numeric>

using namespace betawalk;

namespace {

double dg(double x) { return boost::math::digamma(x); }
double tg(double x) { return boost::math::trigamma(x); }
double pg(int k, double x) { return boost::math::polygamma(k, x); }

}  // namespace

TEST_CASE("first and second log-moments in closed form") {
    const std::vector<double> a{0.7, 2.0, 1.3};
    const double S = 4.0;
    const std::vector<double> M{0.1, -0.4, 0.0};
    for (int i = 0; i < 3; ++i) {
        std::vector<int> e(3, 0);
        e[i] = 1;
        CHECK(dirichlet_log_moment(a, e, {0, 0, 0}) == doctest::Approx(dg(a[i]) - dg(S)).epsilon(1e-13));
        const double m = dg(a[i]) - dg(S) - M[i];
        e[i] = 2;
        CHECK(dirichlet_log_moment(a, e, M) == doctest::Approx(tg(a[i]) - tg(S) + m * m).epsilon(1e-12));
    }
    // mixed second moment: covariance is -Psi_1(S)
    const double m0 = dg(a[0]) - dg(S) - M[0], m1 = dg(a[1]) - dg(S) - M[1];
    CHECK(dirichlet_log_moment(a, {1, 1, 0}, M) == doctest::Approx(-tg(S) + m0 * m1).epsilon(1e-12));
}

TEST_CASE("centered moments reduce to cumulants") {
    const std::vector<double> a{1.7, 0.4};
    const double S = 2.1;
    const auto c = centered_shifts(a);
    CHECK(dirichlet_log_moment(a, {1, 0}, c) == 0.0);
    CHECK(dirichlet_log_moment(a, {0, 1}, c) == 0.0);
    // third central moment is the third cumulant
    CHECK(dirichlet_log_moment(a, {3, 0}, c) == doctest::Approx(pg(2, a[0]) - pg(2, S)).epsilon(1e-11));
    // fourth central moment: kappa_4 + 3 kappa_2^2
    const double k2 = tg(a[1]) - tg(S), k4 = pg(3, a[1]) - pg(3, S);
    CHECK(dirichlet_log_moment(a, {0, 4}, c) == doctest::Approx(k4 + 3 * k2 * k2).epsilon(1e-11));
}

TEST_CASE("uniform weights: log U has unit variance") {
    const std::vector<double> a{1, 1};
    const auto c = centered_shifts(a);
    CHECK(dirichlet_log_moment(a, {2, 0}, c) == doctest::Approx(1).epsilon(1e-13));
    auto mc = sample_log_moments(a, {{2, 0}}, c, 200000, 5);
    CHECK(std::abs(mc[0].mean - 1) < 4 * mc[0].se);
}

TEST_CASE("recursion against sampling") {
    for (const auto& a : {std::vector<double>{0.5, 2.0}, std::vector<double>{2.0, 2.0, 0.5, 0.5}}) {
        const auto idx = multi_indices(static_cast<int>(a.size()), 3);
        std::vector<double> shifts(a.size(), -1.0);
        auto mc = sample_log_moments(a, idx, shifts, 200000, 11);
        for (std::size_t q = 0; q < idx.size(); ++q) {
            const double exact = dirichlet_log_moment(a, idx[q], shifts);
            CHECK(std::abs(exact - mc[q].mean) < 5 * mc[q].se);
        }
    }
}

TEST_CASE("expansion structure") {
    // L_{2 e1} = A_{e1}^2 + A_{2 e1}
    auto terms = log_moment_expansion({2, 0});
    REQUIRE(terms.size() == 2);
    double coeff_sum = 0;
    for (const auto& t : terms) coeff_sum += t.coeff;
    CHECK(coeff_sum == 2);
    // the number of terms of L_{n e1} is the number of partitions of n
    CHECK(log_moment_expansion({4}).size() == 5);
    CHECK(log_moment_expansion({6}).size() == 11);
    // coefficients count set partitions (Bell numbers)
    auto bell = log_moment_expansion({5});
    double total = 0;
    for (const auto& t : bell) total += t.coeff;
    CHECK(total == 52);
}

TEST_CASE("index enumeration and errors") {
    auto idx = multi_indices(2, 2);
    CHECK(idx.size() == 5);  // (1,0) (0,1) (2,0) (1,1) (0,2)
    CHECK(multi_indices(4, 4).size() == 69);
    CHECK_THROWS_AS(dirichlet_log_moment({1, 1}, {5, 4}, {0, 0}), OrderError);
    CHECK_THROWS(dirichlet_log_moment({1, -1}, {1, 0}, {0, 0}));
    CHECK_THROWS(dirichlet_log_moment({1, 1}, {1, 0, 0}, {0, 0}));
}

TEST_CASE("decimal exponents are parsed exactly") {
    auto r = Rational::from_decimal("0.6");
    CHECK(r.num == 3);
    CHECK(r.den == 5);
    r = Rational::from_decimal("0.30");
    CHECK(r.num == 3);
    CHECK(r.den == 10);
    CHECK(Rational::from_decimal("1").den == 1);
    CHECK_THROWS(Rational::from_decimal("0.a"));
    CHECK_THROWS(Rational::from_decimal("-0.5"));
}

TEST_CASE("threshold arithmetic") {
    struct Row {
        const char* r;
        long long half, k, pn, pd, text, scaling;
    };
    // ceil(5/(3r) - 1/3), 2 ceil(...) - 1, r (ceil(...) - 1)
    for (const Row& row : {Row{"0.3", 6, 11, 3, 2, 13, 11}, Row{"0.5", 3, 5, 1, 1, 9, 7}, Row{"0.6", 3, 5, 6, 5, 7, 7},
                           Row{"0.9", 2, 3, 9, 10, 5, 5}}) {
        INFO("r = " << row.r);
        auto d = moment_decay_check(Rational::from_decimal(row.r), 2);
        CHECK(d.half_order == row.half);
        CHECK(d.k_min == row.k);
        CHECK(d.p_threshold.num == row.pn);
        CHECK(d.p_threshold.den == row.pd);
        CHECK(d.k_tta_text == row.text);
        CHECK(d.k_tta_scaling == row.scaling);
    }
}

TEST_CASE("decay products stay bounded along alpha = sqrt(t)") {
    auto d = moment_decay_check(Rational::from_decimal("0.5"), 4);
    CHECK(d.pass);
    CHECK(d.rows.size() == 3 + 4 + 5);
    for (const auto& row : d.rows) {
        CHECK(row.max_drift <= 0.5);
        for (double v : row.products) CHECK(std::isfinite(v));
    }
}
