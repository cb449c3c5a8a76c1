#include "doctest.h"

#include <betawalk/experiments.hpp>
#include <betawalk/rng.hpp>
#include <betawalk/specfun.hpp>

#include <cmath>

using namespace betawalk;

TEST_CASE("normalized statistic is the affine map") {
    const ModelParams p{1, 1, 0.3};
    const int t = 1000;
    const double I = rate_I(p), s = sigma_of_theta(p);
    CHECK(normalized_statistic(-I * t, t, p) == doctest::Approx(0).scale(1));
    CHECK(normalized_statistic(-I * t + std::cbrt(1000.0) * s, t, p) == doctest::Approx(1).epsilon(1e-12));
    const double a = -500, b = -480;
    CHECK(normalized_statistic(a, t, p) - normalized_statistic(b, t, p) ==
          doctest::Approx((a - b) / (10 * s)).epsilon(1e-12));
}

TEST_CASE("Kolmogorov-Smirnov distance") {
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_distance({0.3}, uniform) == doctest::Approx(0.7));
    CHECK(ks_distance({0.8}, uniform) == doctest::Approx(0.8));
    std::vector<double> u;
    SiteStream s(2024);
    for (int i = 0; i < 10000; ++i) u.push_back(s.uniform());
    CHECK(ks_distance(u, uniform) < 0.05);
    std::vector<double> shifted;
    for (int i = 0; i < 200; ++i) shifted.push_back(10 + s.normal());
    auto normal_cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    CHECK(ks_distance(shifted, normal_cdf) > 0.99);
    CHECK_THROWS_AS(ks_distance({}, uniform), std::invalid_argument);
}

TEST_CASE("schedule flags by hand") {
    struct Case {
        double r, s;
        bool as1, gcond;
    };
    for (const Case& c : {Case{0.3, 0.3, true, true}, Case{0.9, 0.1, true, false}, Case{0.5, 0.5, true, true},
                          Case{0.7, 0.3, true, false}, Case{0.4, 0.6, true, true}, Case{0.45, 0.0, false, true},
                          Case{0.0, 0.5, false, true}, Case{0.99, 0.99, true, true}, Case{1.0, 1.0, true, false},
                          Case{0.6, 0.1, true, false}}) {
        INFO("r = " << c.r << ", s = " << c.s);
        const Schedule sch = Schedule::power(c.r, c.s);
        CHECK(sch.as1_ok() == c.as1);
        CHECK(sch.gcond_ok() == c.gcond);
        CHECK(sch.as2_ok() == c.gcond);
    }
    const Schedule f = Schedule::fixed(1, 1);
    CHECK(f.as1_ok());
    CHECK(f.gcond_ok());
}

TEST_CASE("schedule evaluation") {
    const Schedule sch = Schedule::power(0.3, 0.3);
    for (double t : {10.0, 1e3, 1e5}) {
        auto v = schedule_eval(sch, 0.3, t);
        CHECK(v.alpha_t == doctest::Approx(std::pow(t, 0.3)));
        CHECK(v.t_g == doctest::Approx(std::pow(t, 0.7) / 2).epsilon(1e-12));
        CHECK(v.sigma_t == doctest::Approx(sigma_of_theta({v.alpha_t, v.beta_t, 0.3})));
        CHECK(v.valid);
    }
    // sigma^3 t grows
    CHECK(schedule_eval(sch, 0.3, 1e4).sigma3_t > schedule_eval(sch, 0.3, 1e3).sigma3_t);
    CHECK_FALSE(schedule_eval(Schedule::power(0.9, 0.1), 0.3, 100).valid);
}

TEST_CASE("velocity inversion") {
    for (double a : {1.0, 8.0})
        for (double th : {0.1, 0.3, 0.45}) {
            const ModelParams p{a, a, th};
            CHECK(theta_for_velocity(x_of_theta(p), p) == doctest::Approx(th).epsilon(1e-12));
            CHECK(theta_for_velocity(x_of_theta(p), {a, a, 0.2}) == doctest::Approx(th).epsilon(1e-12));
        }
    CHECK_THROWS(theta_for_velocity(1.5, {1, 1, 0.3}));
}

TEST_CASE("configuration checks") {
    ExperimentConfig c;
    c.ts = {64};
    c.n_samples = 50;
    CHECK_NOTHROW(c.validate());
    c.n_samples = 49;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.n_samples = 50;
    c.schedule = Schedule::power(0.9, 0.1);
    CHECK_THROWS_AS(c.validate(), InvalidSchedule);
    c.schedule = Schedule::fixed(0.3, 1);  // 0.72 alpha = 0.216 < theta
    CHECK_THROWS_AS(c.validate(), InvalidSchedule);
    c.schedule = Schedule::power(0.6, 0.6);
    c.kind = EnvKind::Dirichlet2D;
    CHECK_THROWS_AS(c.validate(), InvalidSchedule);  // needs p
    c.p = 1.2;
    CHECK_NOTHROW(c.validate());
    c.ts = {};
    CHECK_THROWS(c.validate());
}

TEST_CASE("experiments are reproducible and thread-independent") {
    ExperimentConfig c;
    c.ts = {32, 64};
    c.n_samples = 60;
    c.master_seed = 77;
    c.threads = 1;
    auto a = run_fluctuation_experiment(c);
    c.threads = 4;
    auto b = run_fluctuation_experiment(c);
    REQUIRE(a.samples.size() == 120);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].seed == b.samples[i].seed);
        CHECK(a.samples[i].log_tail_prob == b.samples[i].log_tail_prob);
        CHECK(a.samples[i].x_t == b.samples[i].x_t);
        CHECK((a.samples[i].t - a.samples[i].x_target) % 2 == 0);
        CHECK(std::isfinite(a.samples[i].x_t));
    }
    for (std::size_t i = 0; i < a.ks.size(); ++i) {
        CHECK(a.ks[i].ks_distance == b.ks[i].ks_distance);
        CHECK(a.ks[i].ks_distance >= 0);
        CHECK(a.ks[i].ks_distance <= 1);
    }
    CHECK(a.samples[0].seed == counter_key(77, 32, 0, 2));
    CHECK(experiment_env(c, 64, 3).seed != experiment_env(c, 64, 4).seed);
}

TEST_CASE("planar pipeline runs") {
    ExperimentConfig c;
    c.kind = EnvKind::Dirichlet2D;
    c.schedule = Schedule::power(0.6, 0.6);
    c.p = 1.2;
    c.ts = {16, 32};
    c.n_samples = 50;
    auto r = run_fluctuation_experiment(c);
    CHECK(r.samples.size() == 100);
    for (const auto& s : r.samples) {
        CHECK(std::isfinite(s.x_t));
        CHECK((s.t - s.x_target) % 2 == 0);
    }
    auto env = experiment_env(c, 32, 0);
    CHECK(env.dirichlet[2] == doctest::Approx(std::pow(32.0, -1.2)));
    CHECK(env.dirichlet[0] == doctest::Approx(std::pow(32.0, 0.6)));
}
