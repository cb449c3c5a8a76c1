#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "betawalk/rate.hpp"
#include "betawalk/rwre.hpp"

namespace betawalk {

struct InvalidSchedule : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Schedule {
    enum class Mode { Fixed, Power };
    Mode mode = Mode::Fixed;
    double alpha = 1, beta = 1;          // Fixed
    double r = 0, s = 0, c1 = 1, c2 = 1;  // Power: alpha_t = c1 t^r, beta_t = c2 t^s

    static Schedule fixed(double alpha, double beta);
    static Schedule power(double r, double s, double c1 = 1, double c2 = 1);

    bool as1_ok() const;    // both exponents positive
    bool gcond_ok() const;  // r + max(r - s, 0) < 1
    bool as2_ok() const;    // t g(alpha_t, beta_t) diverges; implied by gcond
};

struct ScheduleValue {
    double t = 0;
    double alpha_t = 0, beta_t = 0;
    double sigma_t = 0;
    double t_g = 0;      // t * g(alpha_t, beta_t)
    double sigma3_t = 0;  // sigma^3 t, diverges under intermediate disorder
    bool valid = false;
};

ScheduleValue schedule_eval(const Schedule& sch, double theta, double t);

double normalized_statistic(double log_tail, int t, const ModelParams& p);

// sup_i max(|i/n - F(x_i)|, |(i-1)/n - F(x_i)|) over the sorted samples
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf);

struct StatSample {
    int t = 0;
    int sample_index = 0;
    std::uint64_t seed = 0;
    int x_target = 0;
    double log_tail_prob = 0;
    double x_t = 0;
};

struct KSReport {
    int t = 0;
    int n_samples = 0;
    double ks_distance = 0;
    double sample_mean = 0;
    double sample_sd = 0;
};

struct ExperimentConfig {
    EnvKind kind = EnvKind::Beta1D;
    Schedule schedule;
    double theta = 0.3;
    double p = 0;  // Dirichlet2D: the backward weights are t^-p
    std::vector<int> ts;
    int n_samples = 400;
    std::uint64_t master_seed = 1;
    int threads = 1;

    void validate() const;  // throws InvalidSchedule or std::invalid_argument
};

struct ExperimentResult {
    std::vector<StatSample> samples;  // ordered by (t, sample_index)
    std::vector<KSReport> ks;
    std::vector<ScheduleValue> schedule;
};

// theta with x(theta) = velocity, for the given alpha, beta
double theta_for_velocity(double velocity, const ModelParams& base);

// Environment used for sample `index` at time t.
EnvSpec experiment_env(const ExperimentConfig& cfg, int t, int index);

ExperimentResult run_fluctuation_experiment(const ExperimentConfig& cfg);

}  // namespace betawalk
