#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "betawalk/contour.hpp"

namespace betawalk {

struct FredholmResult {
    double value = 0;
    double imag_residual = 0;
    int m = 0;
    double err_est = 0;  // |value(m) - value(m/2)|
};

struct NonFiniteKernel : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PoleProximityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContourIntersectionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Kernel = std::function<cplx(cplx, cplx)>;

// det(I + sign * K diag(w)), the matrix being similar to the symmetrized
// sqrt(w_i) K_ij sqrt(w_j) form so no square-root branch is involved
cplx nystrom_det(const Eigen::MatrixXcd& K, const std::vector<cplx>& w, int sign);
// kernel on L^2 of the contour with measure scale * dz
FredholmResult nystrom_det(const Kernel& kernel, const Contour& contour, int m, int sign, cplx scale = 1.0);

// nearest integer to target with the parity of t; ties go to the candidate
// whose offset (t - n)/2 is even
int nearest_same_parity(double target, int t);

struct LaplaceParams {
    int t = 8;
    int x = 4;
    cplx u = -1.0;
    double alpha = 1;
    double beta = 1;

    void validate() const;  // ParityError / std::invalid_argument
};

struct LaplaceOptions {
    int circle_nodes = 48;
    int s_nodes_per_panel = 16;
    double s_panel_width = 0.5;
    double tol = 1e-12;
    double s_truncation = 0;  // 0: chosen from tol, then extended while the integrand is above tol
    double radius = 0;        // 0: min(1, alpha + beta) / 8
};

double default_circle_radius(double alpha, double beta);
double default_s_truncation(double tol);

// inner integral over Re s = 1/2, |Im s| <= s_truncation, with m_s nodes per
// panel of width 1/2; includes the 1/(2 pi i) in front of the s-integral
cplx kernel_KuRW(cplx v, cplx vp, const LaplaceParams& lp, double s_truncation, int m_s);

// det(I - K_u) on L^2 of a small circle around 0 with measure dv / (2 pi i)
FredholmResult laplace_transform(const LaplaceParams& lp, const LaplaceOptions& opt = {});

// Ai(x), Ai'(x) from contour integrals through the saddle points
std::pair<double, double> airy_ai(double x);

struct AiryKernelValue {
    double value = 0;
    double truncation_change = 0;  // |K(R) - K(2R)|
    bool truncation_ok = true;     // change below 1e-9
};
// double wedge contours: z from 1/2 at angles +-pi/3, w from -1/2 at +-2pi/3
AiryKernelValue airy_kernel(double u, double v, double truncation = 6, int nodes_per_ray = 60);

// det(I - K_Ai) on L^2(y, inf); m quadrature nodes
FredholmResult f_gue(double y, int m = 80);

// det(I + K_y) on the wedge through -1/2 at angles +-(pi - phi); m nodes per ray
FredholmResult limit_det(double y, double phi, int m = 60);

// Monotone cubic interpolant of F_GUE on a fixed grid
class GueTable {
public:
    GueTable(double lo = -10, double hi = 6, int n = 2000, int m = 120);
    double operator()(double y) const;
    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    double lo_, hi_, h_;
    std::vector<double> f_, d_;
};

}  // namespace betawalk
