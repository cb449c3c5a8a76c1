#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace betawalk {

// E[prod_i (log X_i - M_i)^{m_i}] for X ~ Dirichlet(alpha), via the
// derivative recursion of the log partition function.  Degree <= 8.
double dirichlet_log_moment(const std::vector<double>& alpha, const std::vector<int>& multi_index,
                            const std::vector<double>& shifts);

// shifts that make every degree-one moment vanish
std::vector<double> centered_shifts(const std::vector<double>& alpha);

// The symbolic expansion: coefficient times a product of partition-function
// derivatives, each named by its multi-index.
struct MomentTerm {
    double coeff;
    std::vector<std::vector<int>> factors;
};
std::vector<MomentTerm> log_moment_expansion(const std::vector<int>& multi_index);

struct MonteCarloMoment {
    double mean;
    double se;
};
// plain sampling estimate from n Dirichlet draws (seeded, counter-based)
std::vector<MonteCarloMoment> sample_log_moments(const std::vector<double>& alpha,
                                                 const std::vector<std::vector<int>>& indices,
                                                 const std::vector<double>& shifts, std::int64_t n,
                                                 std::uint64_t seed);

// all multi-indices of the given length with degree in [1, max_degree]
std::vector<std::vector<int>> multi_indices(int length, int max_degree);

struct Rational {
    long long num = 0, den = 1;
    static Rational from_decimal(const std::string& s);
    double value() const { return double(num) / double(den); }
};

struct DecayRow {
    int degree;
    int i1, i2;
    std::vector<double> ts;
    std::vector<double> products;  // |L| * alpha^{ceil(k/2)}
    double max_drift;              // max |P_t / P_last - 1|
    bool bounded;                  // max_drift <= 0.5
};

struct DecayReport {
    Rational r;
    long long half_order;      // ceil(5/(3r) - 1/3), the choice made for the corollary
    long long k_min;           // smallest k with ceil(k/2) = half_order
    Rational p_threshold;      // r * half_order - r
    long long k_tta_text;      // smallest k with ceil(k/2) > 5/(3r) + 1
    long long k_tta_scaling;   // smallest k with ceil(k/2) > 5/(3r) + 1/3 (sigma^3 ~ t^{-r})
    std::vector<DecayRow> rows;
    bool pass;
};

// r = s power schedule, alpha_1 = alpha_2 = t^r, alpha_3 = alpha_4 = min(1, t^{-p});
// shifts M_1 = M_2 = log(1/2)
DecayReport moment_decay_check(const Rational& r, int k_max, const std::vector<double>& ts = {1e2, 1e3, 1e4});

}  // namespace betawalk
