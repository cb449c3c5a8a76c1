#include "betawalk/rate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace betawalk {

bool ModelParams::in_window() const {
    return alpha > 0 && beta > 0 && theta > 0 && theta < std::min(alpha + beta, 0.5);
}

bool ModelParams::theorem_one_range() const {
    return in_window() && theta < std::min(0.5, 0.72 * alpha);
}

void ModelParams::check_positive() const {
    if (!(alpha > 0) || !(beta > 0) || !(theta > 0))
        throw std::domain_error("alpha, beta and theta must be positive");
}

void ModelParams::check_window() const {
    check_positive();
    if (!in_window())
        throw std::domain_error("theta = " + std::to_string(theta) +
                                " outside (0, min(alpha+beta, 1/2))");
}

double left_weight(const ModelParams& p) {
    p.check_positive();
    const double a = p.theta + p.alpha, c = a + p.beta;
    return (trigamma(a) - trigamma(c)) / (trigamma(p.theta) - trigamma(c));
}

double x_of_theta(const ModelParams& p) {
    p.check_positive();
    const double th = p.theta, a = th + p.alpha, c = a + p.beta;
    const double t0 = trigamma(th), ta = trigamma(a), tc = trigamma(c);
    return (tc + t0 - 2 * ta) / (t0 - tc);
}

double rate_I(const ModelParams& p) {
    p.check_positive();
    const double th = p.theta, a = th + p.alpha, c = a + p.beta;
    const double frac = (trigamma(c) - trigamma(a)) / (trigamma(th) - trigamma(c));
    return frac * (digamma(c) - digamma(th)) + digamma(c) - digamma(a);
}

double h_deriv_theta(int k, const ModelParams& p) {
    if (k < 1) throw OrderError("h derivative order must be positive");
    p.check_positive();
    const double th = p.theta, a = th + p.alpha, c = a + p.beta;
    const double w = left_weight(p);
    const double d = polygamma(k - 1, a) - polygamma(k - 1, c) + w * (polygamma(k - 1, c) - polygamma(k - 1, th));
    return k == 1 ? rate_I(p) + d : d;  // the linear term only enters h'
}

double sigma_of_theta(const ModelParams& p) {
    double two_sigma3 = h_deriv_theta(3, p);
    if (!(two_sigma3 > 0))
        throw std::runtime_error("non-positive cube-root variance coefficient");
    return std::cbrt(two_sigma3 / 2);
}

DriftPoint drift_point(const ModelParams& p) {
    return {p.theta, x_of_theta(p), rate_I(p), sigma_of_theta(p)};
}

cplx h_eval(cplx z, const ModelParams& p) {
    const double x = x_of_theta(p);
    const double I = rate_I(p);
    cplx lga = log_gamma(p.alpha + z);
    return I * z + 0.5 * (1 - x) * (lga - log_gamma(z)) +
           0.5 * (1 + x) * (lga - log_gamma(p.alpha + p.beta + z));
}

std::vector<cplx> h_along(const std::vector<cplx>& path, const ModelParams& p) {
    const double x = x_of_theta(p);
    const double I = rate_I(p);
    const std::size_t n = path.size();
    std::vector<cplx> la(n), l0(n), lc(n);
    for (std::size_t i = 0; i < n; ++i) {
        la[i] = log_gamma(p.alpha + path[i]);
        l0[i] = log_gamma(path[i]);
        lc[i] = log_gamma(p.alpha + p.beta + path[i]);
    }
    unwrap_branch(la);
    unwrap_branch(l0);
    unwrap_branch(lc);
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = I * path[i] + 0.5 * (1 - x) * (la[i] - l0[i]) + 0.5 * (1 + x) * (la[i] - lc[i]);
    return out;
}

cplx h_prime(cplx z, const ModelParams& p) {
    const double x = x_of_theta(p);
    const double I = rate_I(p);
    cplx da = polygamma(0, p.alpha + z);
    return I + 0.5 * (1 - x) * (da - polygamma(0, z)) +
           0.5 * (1 + x) * (da - polygamma(0, p.alpha + p.beta + z));
}

}  // namespace betawalk
