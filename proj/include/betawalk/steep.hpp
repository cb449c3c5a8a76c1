#pragma once

#include <string>
#include <vector>

#include "betawalk/rate.hpp"

namespace betawalk {

struct SteepWitness {
    std::string point;
    double margin = 0;
};

struct SteepDescentReport {
    std::string suite;
    std::string grid;
    double min_margin = 0;
    std::vector<SteepWitness> witnesses;  // worst points, smallest margin first
    bool pass = false;
};

// Re(i theta e^{i phi} h'(theta e^{i phi})), with h' from digamma differences
double steep_circle_margin(double phi, const ModelParams& p);
// the same divided by theta^2 sin(phi) (1 - cos(phi)) g(alpha+1, beta)
double steep_circle_ratio(double phi, const ModelParams& p);

// Im h'(theta + i y)
double steep_vertical(double y, const ModelParams& p);
// H = Im h'(theta + i y) / y, through the cancellation-free series form
double steep_vertical_H(double y, const ModelParams& p);
// lower bound for H: ratio-weighted integral of the sextic series
double steep_vertical_H_bound(double y, const ModelParams& p);

// sum_{n>=0} 1 / ((n+x)^2 + y^2)
double phi_series(double x, double y);
// -sum_{n>=0} (t^2 + 2 t x_n cos(phi)) / ((t^2 + 2 t x_n cos(phi) + x_n^2) (t + x_n)^2),
// x_n = n + x.  x = 0 is accepted: the n = 0 term is finite there.
double script_P(double x, double phi, double theta);
// P(alpha) - P(alpha+beta) + w (P(alpha+beta) - P(0)), w = (1 - x(theta)) / 2
double circle_combination(double phi, const ModelParams& p);

struct SteepGrid {
    std::vector<double> thetas, alphas, betas, phis, ys;
    std::vector<double> poly_args;  // x and y values for the polygamma bracket suite
    int k_max = 4;

    static SteepGrid defaults();
    std::string describe() const;
};

struct VerifyOptions {
    // test hook: scale h' by 1.5 at a single grid point of the circle suites
    bool inject_fault = false;
    std::size_t max_witnesses = 5;
};

std::vector<SteepDescentReport> verify_polygamma_suite(const SteepGrid& g, const VerifyOptions& o = {});
std::vector<SteepDescentReport> verify_steep_descent(const SteepGrid& g, const VerifyOptions& o = {});

}  // namespace betawalk
