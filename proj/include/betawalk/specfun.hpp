#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace betawalk {

using cplx = std::complex<double>;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

struct OrderError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct AccuracyPolicy {
    double rel_tol = 1e-12;
    double shift_threshold = 10.0;  // asymptotic tails only beyond this real part
    int max_terms = 256;

    void validate() const;
};

inline constexpr int kMaxPolygammaOrder = 8;

// Principal branch, cut along the nonpositive real axis.  For real arguments
// the double overload returns log|Gamma(z)|.
template <class T>
T log_gamma(T z, const AccuracyPolicy& pol = {});

// k-th derivative of the digamma function; k = 0 is the digamma itself.
template <class T>
T polygamma(int k, T z, const AccuracyPolicy& pol = {});

inline double digamma(double x) { return polygamma(0, x); }
inline double trigamma(double x) { return polygamma(1, x); }

// y / (x (x + y))
double frak_g(double x, double y);

struct PolyBoundReport {
    int k = 0;
    double x = 0, y = 0;
    double lower = 0, value = 0, upper = 0;
    bool holds = false;
};

// first: single-argument bracket of (-1)^{k+1} Psi_k(x)
// second: difference bracket of (-1)^{k+1} (Psi_k(x) - Psi_k(x+y))
std::pair<PolyBoundReport, PolyBoundReport> check_polygamma_bounds(int k, double x, double y);

// Shifts imaginary parts by multiples of 2*pi so that consecutive entries
// differ by less than pi.  Used to keep log-gamma continuous along a contour.
void unwrap_branch(std::vector<cplx>& logs);

}  // namespace betawalk
