#include "betawalk/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "betawalk/fredholm.hpp"
#include "betawalk/parallel.hpp"
#include "betawalk/rng.hpp"
#include "betawalk/specfun.hpp"

namespace betawalk {

Schedule Schedule::fixed(double alpha, double beta) {
    Schedule s;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

Schedule Schedule::power(double r, double s, double c1, double c2) {
    Schedule out;
    out.mode = Mode::Power;
    out.r = r;
    out.s = s;
    out.c1 = c1;
    out.c2 = c2;
    return out;
}

bool Schedule::as1_ok() const { return mode == Mode::Fixed || (r > 0 && s > 0); }

bool Schedule::gcond_ok() const {
    if (mode == Mode::Fixed) return true;
    return r + std::max(r - s, 0.0) < 1;
}

bool Schedule::as2_ok() const { return mode == Mode::Fixed || gcond_ok(); }

ScheduleValue schedule_eval(const Schedule& sch, double theta, double t) {
    ScheduleValue v;
    v.t = t;
    if (sch.mode == Schedule::Mode::Fixed) {
        v.alpha_t = sch.alpha;
        v.beta_t = sch.beta;
    } else {
        v.alpha_t = sch.c1 * std::pow(t, sch.r);
        v.beta_t = sch.c2 * std::pow(t, sch.s);
    }
    v.t_g = t * frak_g(v.alpha_t, v.beta_t);
    const ModelParams p{v.alpha_t, v.beta_t, theta};
    v.valid = t >= 1 && sch.as1_ok() && sch.gcond_ok() && p.in_window();
    try {
        v.sigma_t = sigma_of_theta(p);
        v.sigma3_t = v.sigma_t * v.sigma_t * v.sigma_t * t;
    } catch (const std::exception&) {
        v.valid = false;
    }
    return v;
}

double normalized_statistic(double log_tail, int t, const ModelParams& p) {
    const double sigma = sigma_of_theta(p);
    return (log_tail + rate_I(p) * t) / (std::cbrt(static_cast<double>(t)) * sigma);
}

double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
    if (xs.empty()) throw std::invalid_argument("ks_distance needs at least one sample");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max({d, std::abs((i + 1) / n - f), std::abs(i / n - f)});
    }
    return std::min(d, 1.0);
}

void ExperimentConfig::validate() const {
    if (ts.empty()) throw std::invalid_argument("no times configured");
    for (int t : ts)
        if (t < 1) throw std::invalid_argument("times must be positive");
    if (n_samples < 50) throw std::invalid_argument("at least 50 samples per time");
    if (!(theta > 0)) throw std::invalid_argument("theta must be positive");
    if (schedule.mode == Schedule::Mode::Fixed) {
        const ModelParams mp{schedule.alpha, schedule.beta, theta};
        mp.check_positive();
        if (!mp.theorem_one_range()) throw InvalidSchedule("theta outside (0, min(1/2, 0.72 alpha))");
    } else {
        if (!schedule.as1_ok()) throw InvalidSchedule("power schedule needs r, s > 0");
        if (!schedule.gcond_ok()) throw InvalidSchedule("power schedule violates r + max(r - s, 0) < 1");
        if (!(schedule.c1 > 0) || !(schedule.c2 > 0)) throw InvalidSchedule("schedule constants must be positive");
        if (!(theta < 0.5)) throw InvalidSchedule("theta must lie in (0, 1/2)");
    }
    if (kind == EnvKind::Dirichlet2D && !(p > 0)) throw InvalidSchedule("Dirichlet runs need p > 0");
}

EnvSpec experiment_env(const ExperimentConfig& cfg, int t, int index) {
    const ScheduleValue v = schedule_eval(cfg.schedule, cfg.theta, t);
    const std::uint64_t seed = counter_key(cfg.master_seed, t, index, 2);
    if (cfg.kind == EnvKind::Beta1D) return EnvSpec::beta1d(v.alpha_t, v.beta_t, seed, t);
    const double back = std::pow(static_cast<double>(t), -cfg.p);
    return EnvSpec::dirichlet2d({v.alpha_t, v.beta_t, back, back}, seed, t);
}

double theta_for_velocity(double velocity, const ModelParams& base) {
    auto f = [&](double th) { return x_of_theta({base.alpha, base.beta, th}) - velocity; };
    double lo = base.theta, hi = base.theta;
    // x(theta) decreases in theta
    for (int i = 0; i < 80 && f(lo) < 0; ++i) lo /= 2;
    for (int i = 0; i < 80 && f(hi) > 0; ++i) hi *= 2;
    if (f(lo) < 0 || f(hi) > 0) throw std::domain_error("velocity outside the range of x(theta)");
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ExperimentResult run_fluctuation_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    static const GueTable table;
    ExperimentResult res;
    const int threads = resolve_threads(cfg.threads);
    for (int t : cfg.ts) {
        const ScheduleValue sv = schedule_eval(cfg.schedule, cfg.theta, t);
        res.schedule.push_back(sv);
        const ModelParams nominal{sv.alpha_t, sv.beta_t, cfg.theta};
        const double x = x_of_theta(nominal);
        // The planar event z1 >= (t + t x)/2 is, for directed paths, the
        // projected tail at 2 ceil((t + t x)/2) - t.
        const int x_target = cfg.kind == EnvKind::Beta1D
                                 ? nearest_same_parity(x * t, t)
                                 : 2 * static_cast<int>(std::ceil((t + t * x) / 2)) - t;
        // Centre at the velocity actually probed.  Near the edge of the cone
        // one lattice step moves the statistic by O(1), so rounding x t would
        // otherwise leave a bias that does not shrink with t.
        // On the edge of the cone there is no such velocity; keep the nominal one.
        ModelParams mp = nominal;
        if (std::abs(x_target) < t) mp.theta = theta_for_velocity(static_cast<double>(x_target) / t, nominal);
        std::vector<StatSample> batch(cfg.n_samples);
        parallel_for(batch.size(), threads, [&](std::size_t i) {
            const EnvSpec env = experiment_env(cfg, t, static_cast<int>(i));
            StatSample& s = batch[i];
            s.t = t;
            s.sample_index = static_cast<int>(i);
            s.seed = env.seed;
            s.x_target = x_target;
            s.log_tail_prob = cfg.kind == EnvKind::Beta1D ? beta_tail_logprob(env, t, x_target)
                                                          : dirichlet_event_logprob(env, t, x);
            s.x_t = normalized_statistic(s.log_tail_prob, t, mp);
        });
        std::vector<double> xs;
        double sum = 0, sum2 = 0;
        for (const auto& s : batch) {
            if (!std::isfinite(s.x_t)) throw std::runtime_error("non-finite statistic");
            xs.push_back(s.x_t);
            sum += s.x_t;
        }
        const double n = static_cast<double>(xs.size());
        const double mean = sum / n;
        for (double v : xs) sum2 += (v - mean) * (v - mean);
        KSReport k;
        k.t = t;
        k.n_samples = cfg.n_samples;
        k.ks_distance = ks_distance(xs, [](double y) { return table(y); });
        k.sample_mean = mean;
        k.sample_sd = std::sqrt(sum2 / (n - 1));
        res.ks.push_back(k);
        res.samples.insert(res.samples.end(), batch.begin(), batch.end());
    }
    return res;
}

}  // namespace betawalk
