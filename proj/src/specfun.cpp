#include "betawalk/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace betawalk {

namespace {

// B_2, B_4, ..., B_40
constexpr std::array<double, 20> kBernoulli = {
    0.16666666666666666,  -0.033333333333333333, 0.023809523809523808,
    -0.033333333333333333, 0.07575757575757576,   -0.2531135531135531,
    1.1666666666666667,   -7.0921568627450977,   54.971177944862156,
    -529.12424242424242,  6192.123188405797,     -86580.253113553117,
    1425517.1666666667,   -27298231.067816094,   601580873.9006424,
    -15116315767.092157,  429614643061.16669,    -13711655205088.332,
    488332318973593.19,   -19296579341940068.0};

double real_part(double v) { return v; }
double real_part(const cplx& v) { return v.real(); }
double imag_part(double) { return 0.0; }
double imag_part(const cplx& v) { return v.imag(); }

template <class T>
void check_pole(T z) {
    double re = real_part(z);
    if (imag_part(z) == 0.0 && re <= 0.0 && re == std::round(re))
        throw PoleError("pole of the gamma function at z = " + std::to_string(re));
}

template <class T>
int shift_count(T z, const AccuracyPolicy& pol) {
    double re = real_part(z);
    if (re >= pol.shift_threshold) return 0;
    double n = std::ceil(pol.shift_threshold - re);
    if (n > pol.max_terms)
        throw std::domain_error("argument too far left for the recurrence shift cap");
    return static_cast<int>(n);
}

double log_abs(double v) { return std::log(std::abs(v)); }
cplx log_abs(const cplx& v) { return std::log(v); }

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

template <class T>
T stirling_log_gamma(T z, double tol) {
    const double half_log_2pi = 0.5 * std::log(2 * std::numbers::pi);
    T res = (z - 0.5) * std::log(z) - z + half_log_2pi;
    T zinv = 1.0 / z;
    T z2inv = zinv * zinv;
    T pw = zinv;
    for (std::size_t n = 1; n <= kBernoulli.size(); ++n) {
        double c = kBernoulli[n - 1] / (2.0 * n * (2.0 * n - 1));
        T term = c * pw;
        res += term;
        if (std::abs(term) < tol * std::abs(res)) break;
        pw *= z2inv;
    }
    return res;
}

template <class T>
T asymptotic_polygamma(int k, T z, double tol) {
    T zinv = 1.0 / z;
    T z2inv = zinv * zinv;
    if (k == 0) {
        T res = std::log(z) - 0.5 * zinv;
        T pw = z2inv;
        for (std::size_t n = 1; n <= kBernoulli.size(); ++n) {
            T term = kBernoulli[n - 1] / (2.0 * n) * pw;
            res -= term;
            if (std::abs(term) < tol * std::abs(res)) break;
            pw *= z2inv;
        }
        return res;
    }
    // (-1)^{k+1} [ (k-1)!/z^k + k!/(2 z^{k+1}) + sum B_2n (2n+k-1)!/((2n)! z^{2n+k}) ]
    T zk = std::pow(zinv, k);
    T res = factorial(k - 1) * zk + 0.5 * factorial(k) * zk * zinv;
    T pw = zk * z2inv;
    double ratio = factorial(k + 1) / 2;  // (2n+k-1)!/(2n)! at n = 1
    for (std::size_t n = 1; n <= kBernoulli.size(); ++n) {
        if (n > 1) {
            double m = 2.0 * n;
            ratio *= (m + k - 2) * (m + k - 1) / ((m - 1) * m);
        }
        T term = kBernoulli[n - 1] * ratio * pw;
        res += term;
        if (std::abs(term) < tol * std::abs(res)) break;
        pw *= z2inv;
    }
    return (k % 2 == 1) ? res : -res;
}

}  // namespace

void AccuracyPolicy::validate() const {
    if (!(rel_tol > 0) || !(shift_threshold >= 8) || max_terms < 64)
        throw std::invalid_argument("invalid accuracy policy");
}

template <class T>
T log_gamma(T z, const AccuracyPolicy& pol) {
    check_pole(z);
    int n = shift_count(z, pol);
    T acc = 0.0;
    for (int j = 0; j < n; ++j) acc += log_abs(z + double(j));
    return stirling_log_gamma(z + double(n), pol.rel_tol * 1e-3) - acc;
}

template <class T>
T polygamma(int k, T z, const AccuracyPolicy& pol) {
    if (k < 0 || k > kMaxPolygammaOrder)
        throw OrderError("polygamma order " + std::to_string(k) + " outside [0, 8]");
    check_pole(z);
    int n = shift_count(z, pol);
    T acc = 0.0;
    const double sign_fact = ((k % 2 == 0) ? 1.0 : -1.0) * factorial(k);
    for (int j = 0; j < n; ++j) acc += std::pow(1.0 / (z + double(j)), k + 1);
    // Psi_k(z) = Psi_k(z+n) - (-1)^k k! sum 1/(z+j)^{k+1}
    return asymptotic_polygamma(k, z + double(n), pol.rel_tol * 1e-3) - sign_fact * acc;
}

template double log_gamma<double>(double, const AccuracyPolicy&);
template cplx log_gamma<cplx>(cplx, const AccuracyPolicy&);
template double polygamma<double>(int, double, const AccuracyPolicy&);
template cplx polygamma<cplx>(int, cplx, const AccuracyPolicy&);

double frak_g(double x, double y) {
    if (!(x > 0) || !(y > 0)) throw std::domain_error("frak_g needs positive arguments");
    return y / (x * (x + y));
}

std::pair<PolyBoundReport, PolyBoundReport> check_polygamma_bounds(int k, double x, double y) {
    if (k < 1) throw OrderError("bounds are stated for k >= 1");
    if (!(x > 0) || !(y > 0)) throw std::domain_error("bounds need x, y > 0");
    const double kf = factorial(k);
    const double sgn = (k % 2 == 1) ? 1.0 : -1.0;

    PolyBoundReport single{k, x, y};
    single.value = sgn * polygamma(k, x);
    single.lower = kf * (std::pow(x, -(k + 1)) + std::pow(x + 1, -k) / k);
    single.upper = kf * (std::pow(x, -(k + 1)) + std::pow(x, -k) / k);
    single.holds = single.lower <= single.value && single.value <= single.upper;

    PolyBoundReport diff{k, x, y};
    diff.value = sgn * (polygamma(k, x) - polygamma(k, x + y));
    double weak = kf * frak_g(x + 1, y) * (std::pow(x, -k) + std::pow(x + 1, -(k - 1)) / k);
    double strong = kf * frak_g(x, y) * std::pow(x, -k) +
                    factorial(k - 1) * std::pow(x + 1, -(k - 1)) * frak_g(x + 1, y);
    diff.lower = strong;
    diff.upper = factorial(k + 1) * frak_g(x, y) * (std::pow(x, -k) + std::pow(x, -(k - 1)) / (k + 1));
    diff.holds = weak <= strong && diff.lower <= diff.value && diff.value <= diff.upper;
    return {single, diff};
}

void unwrap_branch(std::vector<cplx>& logs) {
    const double two_pi = 2 * std::numbers::pi;
    for (std::size_t i = 1; i < logs.size(); ++i) {
        double d = logs[i].imag() - logs[i - 1].imag();
        double shift = two_pi * std::round(d / two_pi);
        if (shift != 0.0) logs[i] -= cplx(0.0, shift);
    }
}

}  // namespace betawalk
