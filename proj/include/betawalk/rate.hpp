#pragma once

#include <complex>
#include <vector>

#include "betawalk/specfun.hpp"

namespace betawalk {

struct ModelParams {
    double alpha = 1;
    double beta = 1;
    double theta = 0.25;

    // theta < min(alpha + beta, 1/2): contours avoid the poles
    bool in_window() const;
    // theta < min(0.5, 0.72 alpha): range of the fixed-parameter fluctuation theorem
    bool theorem_one_range() const;
    // throws std::domain_error unless alpha, beta, theta > 0
    void check_positive() const;
    void check_window() const;
};

struct DriftPoint {
    double theta = 0;
    double x_theta = 0;
    double rate_I = 0;
    double sigma = 0;
};

// The closed forms below only need alpha, beta, theta > 0; the window is
// checked by callers that deform contours.
double x_of_theta(const ModelParams& p);
double rate_I(const ModelParams& p);
double sigma_of_theta(const ModelParams& p);
DriftPoint drift_point(const ModelParams& p);

// (1 - x(theta)) / 2, the weight of the log(Gamma(alpha+z)/Gamma(z)) term
double left_weight(const ModelParams& p);

cplx h_eval(cplx z, const ModelParams& p);
// h along an ordered path, with 2 pi i jumps removed
std::vector<cplx> h_along(const std::vector<cplx>& path, const ModelParams& p);
cplx h_prime(cplx z, const ModelParams& p);
double h_deriv_theta(int k, const ModelParams& p);

}  // namespace betawalk
