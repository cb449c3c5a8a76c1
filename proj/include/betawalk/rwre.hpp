#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace betawalk {

enum class EnvKind { Beta1D, Dirichlet2D };

struct HorizonError : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct EnumerationSizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EnvSpec {
    EnvKind kind = EnvKind::Beta1D;
    double alpha = 1, beta = 1;                  // Beta1D
    std::array<double, 4> dirichlet{1, 1, 1, 1};  // Dirichlet2D, order e1, e2, -e1, -e2
    std::uint64_t seed = 0;
    int t_max = 0;

    static EnvSpec beta1d(double alpha, double beta, std::uint64_t seed, int t_max);
    static EnvSpec dirichlet2d(std::array<double, 4> a, std::uint64_t seed, int t_max);
    void validate() const;
};

struct BetaWeight {
    double b;          // probability of the +1 step
    double log_b;      // log b
    double log_1mb;    // log(1 - b), accurate when b is near 1
};

struct DirichletWeight {
    std::array<double, 4> p;      // e1, e2, -e1, -e2
    std::array<double, 4> log_p;  // accurate even when p underflows
};

// Beta1D: the space-time field B_{x,t}
BetaWeight site_weight(const EnvSpec& spec, int x, int t);
// Dirichlet2D: the static field omega(z)
DirichletWeight dirichlet_site_weight(const EnvSpec& spec, int z1, int z2);

struct QuenchedRow {
    int t = 0;
    int x_min = 0;                // leftmost site; entries step by 2
    std::vector<double> log_probs;

    double log_prob(int x) const;  // -inf off the support
};

// log-space forward recursion; the callback sees rows 0..t_max in order
void quenched_forward(const EnvSpec& spec, const std::function<void(const QuenchedRow&)>& on_row);
std::vector<QuenchedRow> quenched_forward(const EnvSpec& spec);

double log_sum_exp(const std::vector<double>& v);
double tail_logprob(const QuenchedRow& row, int x);

// log P(X_t >= x) with the DP restricted to sites that can still reach x.
// Linear long double arithmetic with per-row rescaling, falling back to the
// log-space recursion if anything underflows.
double beta_tail_logprob(const EnvSpec& spec, int t, int x);
double beta_tail_logprob_logspace(const EnvSpec& spec, int t, int x);

// log P(X_t in A_{t,y}), A_{t,y} = {|z|_1 = t, z_1 >= (t + t y)/2}
double dirichlet_event_logprob(const EnvSpec& spec, int t, double y);

// exhaustive sums over step sequences; 1D up to t = 12, 2D up to t = 8
double brute_force_enum(const EnvSpec& spec, int t, const std::function<bool(int)>& accept);
double brute_force_enum_2d(const EnvSpec& spec, int t, const std::function<bool(int, int)>& accept);

}  // namespace betawalk
