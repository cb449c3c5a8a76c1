#include "betawalk/rwre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "betawalk/rng.hpp"

namespace betawalk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double lse2(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    double m = std::max(a, b);
    return m + std::log1p(std::exp(-std::abs(a - b)));
}

void require_kind(const EnvSpec& spec, EnvKind k) {
    if (spec.kind != k)
        throw std::invalid_argument(k == EnvKind::Beta1D ? "operation needs a Beta1D environment"
                                                         : "operation needs a Dirichlet2D environment");
}

}  // namespace

EnvSpec EnvSpec::beta1d(double alpha, double beta, std::uint64_t seed, int t_max) {
    EnvSpec s;
    s.kind = EnvKind::Beta1D;
    s.alpha = alpha;
    s.beta = beta;
    s.seed = seed;
    s.t_max = t_max;
    s.validate();
    return s;
}

EnvSpec EnvSpec::dirichlet2d(std::array<double, 4> a, std::uint64_t seed, int t_max) {
    EnvSpec s;
    s.kind = EnvKind::Dirichlet2D;
    s.dirichlet = a;
    s.seed = seed;
    s.t_max = t_max;
    s.validate();
    return s;
}

void EnvSpec::validate() const {
    if (t_max < 0) throw std::invalid_argument("negative horizon");
    if (kind == EnvKind::Beta1D) {
        if (!(alpha > 0) || !(beta > 0)) throw std::invalid_argument("Beta parameters must be positive");
    } else {
        for (double a : dirichlet)
            if (!(a > 0)) throw std::invalid_argument("Dirichlet parameters must be positive");
    }
}

BetaWeight site_weight(const EnvSpec& spec, int x, int t) {
    require_kind(spec, EnvKind::Beta1D);
    if (t < 0 || t >= spec.t_max)
        throw HorizonError("time " + std::to_string(t) + " outside the horizon " + std::to_string(spec.t_max));
    SiteStream s(counter_key(spec.seed, x, t, 0));
    const double la = s.log_gamma_variate(spec.alpha);
    const double lb = s.log_gamma_variate(spec.beta);
    const double lse = lse2(la, lb);
    BetaWeight w;
    w.log_b = la - lse;
    w.log_1mb = lb - lse;
    w.b = std::exp(w.log_b);
    return w;
}

DirichletWeight dirichlet_site_weight(const EnvSpec& spec, int z1, int z2) {
    require_kind(spec, EnvKind::Dirichlet2D);
    if (std::abs(z1) + std::abs(z2) >= spec.t_max)
        throw HorizonError("site outside the horizon " + std::to_string(spec.t_max));
    SiteStream s(counter_key(spec.seed, z1, z2, 1));
    std::array<double, 4> lg;
    for (int i = 0; i < 4; ++i) lg[i] = s.log_gamma_variate(spec.dirichlet[i]);
    const double m = *std::max_element(lg.begin(), lg.end());
    double acc = 0;
    for (double v : lg) acc += std::exp(v - m);
    const double lse = m + std::log(acc);
    DirichletWeight w;
    for (int i = 0; i < 4; ++i) {
        w.log_p[i] = lg[i] - lse;
        w.p[i] = std::exp(w.log_p[i]);
    }
    return w;
}

double QuenchedRow::log_prob(int x) const {
    int off = x - x_min;
    if (off < 0 || off % 2 != 0) return kNegInf;
    std::size_t i = static_cast<std::size_t>(off / 2);
    return i < log_probs.size() ? log_probs[i] : kNegInf;
}

double log_sum_exp(const std::vector<double>& v) {
    double m = kNegInf;
    for (double x : v) m = std::max(m, x);
    if (m == kNegInf) return kNegInf;
    double acc = 0;
    for (double x : v) acc += std::exp(x - m);
    return m + std::log(acc);
}

void quenched_forward(const EnvSpec& spec, const std::function<void(const QuenchedRow&)>& on_row) {
    require_kind(spec, EnvKind::Beta1D);
    spec.validate();
    QuenchedRow row{0, 0, {0.0}};
    on_row(row);
    std::vector<double> up, down;
    for (int t = 0; t < spec.t_max; ++t) {
        const std::size_t n = row.log_probs.size();
        up.resize(n);
        down.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            BetaWeight w = site_weight(spec, row.x_min + 2 * static_cast<int>(i), t);
            up[i] = row.log_probs[i] + w.log_b;
            down[i] = row.log_probs[i] + w.log_1mb;
        }
        QuenchedRow next{t + 1, row.x_min - 1, std::vector<double>(n + 1, kNegInf)};
        for (std::size_t i = 0; i <= n; ++i) {
            double from_left = i > 0 ? up[i - 1] : kNegInf;  // site x-1 stepping up
            double from_right = i < n ? down[i] : kNegInf;   // site x+1 stepping down
            next.log_probs[i] = lse2(from_left, from_right);
        }
        row = std::move(next);
        on_row(row);
    }
}

std::vector<QuenchedRow> quenched_forward(const EnvSpec& spec) {
    std::vector<QuenchedRow> rows;
    quenched_forward(spec, [&](const QuenchedRow& r) { rows.push_back(r); });
    return rows;
}

double tail_logprob(const QuenchedRow& row, int x) {
    if (x <= -row.t) return 0.0;
    if (x > row.t) return kNegInf;
    std::vector<double> kept;
    for (std::size_t i = 0; i < row.log_probs.size(); ++i)
        if (row.x_min + 2 * static_cast<int>(i) >= x) kept.push_back(row.log_probs[i]);
    return log_sum_exp(kept);
}

namespace {

// sites y >= x - (t - s) at time s can still reach x by time t
int cone_low(int s, int t, int x) { return std::max(-s, x - (t - s)); }

}  // namespace

double beta_tail_logprob_logspace(const EnvSpec& spec, int t, int x) {
    require_kind(spec, EnvKind::Beta1D);
    if (t > spec.t_max) throw HorizonError("t beyond the environment horizon");
    if (x <= -t) return 0.0;
    if (x > t) return kNegInf;
    if ((t - x) % 2 != 0) ++x;  // X_t >= x is X_t >= x+1 when parities differ
    std::vector<double> cur{0.0}, nxt;
    int lo = 0;
    for (int s = 0; s < t; ++s) {
        const int nlo = cone_low(s + 1, t, x);
        const int nn = (s + 1 - nlo) / 2 + 1;
        nxt.assign(nn, kNegInf);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == kNegInf) continue;
            const int y = lo + 2 * static_cast<int>(i);
            BetaWeight w = site_weight(spec, y, s);
            int up = (y + 1 - nlo) / 2, dn = (y - 1 - nlo) / 2;
            if (y + 1 >= nlo) nxt[up] = lse2(nxt[up], cur[i] + w.log_b);
            if (y - 1 >= nlo) nxt[dn] = lse2(nxt[dn], cur[i] + w.log_1mb);
        }
        cur.swap(nxt);
        lo = nlo;
    }
    return log_sum_exp(cur);
}

double beta_tail_logprob(const EnvSpec& spec, int t, int x) {
    require_kind(spec, EnvKind::Beta1D);
    if (t > spec.t_max) throw HorizonError("t beyond the environment horizon");
    if (x <= -t) return 0.0;
    if (x > t) return kNegInf;
    if ((t - x) % 2 != 0) ++x;
    std::vector<long double> cur{1.0L}, nxt;
    long double log_scale = 0;
    int lo = 0;
    for (int s = 0; s < t; ++s) {
        const int nlo = cone_low(s + 1, t, x);
        const int nn = (s + 1 - nlo) / 2 + 1;
        nxt.assign(nn, 0.0L);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const int y = lo + 2 * static_cast<int>(i);
            BetaWeight w = site_weight(spec, y, s);
            // a weight that underflows in double leaves a zero cell and triggers the fallback
            if (y + 1 >= nlo) nxt[(y + 1 - nlo) / 2] += cur[i] * w.b;
            if (y - 1 >= nlo) nxt[(y - 1 - nlo) / 2] += cur[i] * std::exp(w.log_1mb);
        }
        long double mx = 0;
        bool lost = false;
        for (long double v : nxt) {
            mx = std::max(mx, v);
            lost |= !(v >= std::numeric_limits<long double>::min());
        }
        // every reachable cell has positive mass; a zero or subnormal means underflow
        if (lost || !(mx > 0)) return beta_tail_logprob_logspace(spec, t, x);
        for (long double& v : nxt) v /= mx;
        log_scale += std::log(mx);
        cur.swap(nxt);
        lo = nlo;
    }
    long double total = 0;
    for (long double v : cur) total += v;
    return static_cast<double>(log_scale + std::log(total));
}

double dirichlet_event_logprob(const EnvSpec& spec, int t, double y) {
    require_kind(spec, EnvKind::Dirichlet2D);
    if (t > spec.t_max) throw HorizonError("t beyond the environment horizon");
    if (t == 0) return 0.0;  // the origin has |z|_1 = 0 = t and z_1 = 0 >= 0
    const double thr = (t + t * y) / 2;
    const double need_real = std::ceil(thr);
    if (need_real > t) return kNegInf;
    const int need = static_cast<int>(std::max(0.0, need_real));

    // directed DP over rows s = z1 + |z2|, indexed by z1; `side` is +1 for
    // steps {e1, e2} and -1 for steps {e1, -e2}
    auto directed = [&](int side) {
        const int second = side > 0 ? 1 : 3;
        std::vector<double> cur{0.0}, nxt;
        int lo = 0;
        for (int s = 0; s < t; ++s) {
            const int nlo = std::max(0, need - (t - s - 1));
            nxt.assign(s + 1 - nlo + 1, kNegInf);
            for (std::size_t i = 0; i < cur.size(); ++i) {
                if (cur[i] == kNegInf) continue;
                const int z1 = lo + static_cast<int>(i);
                const int z2 = side * (s - z1);
                DirichletWeight w = dirichlet_site_weight(spec, z1, z2);
                if (z1 + 1 >= nlo) {
                    double& c = nxt[z1 + 1 - nlo];
                    c = lse2(c, cur[i] + w.log_p[0]);
                }
                if (z1 >= nlo) {
                    double& c = nxt[z1 - nlo];
                    c = lse2(c, cur[i] + w.log_p[second]);
                }
            }
            cur.swap(nxt);
            lo = nlo;
        }
        return log_sum_exp(cur);
    };
    const double l_plus = directed(+1), l_minus = directed(-1);
    double l_axis = 0;  // the all-e1 path lies in both sublattices
    for (int k = 0; k < t; ++k) l_axis += dirichlet_site_weight(spec, k, 0).log_p[0];
    const double both = lse2(l_plus, l_minus);
    // each directed sum contains the axis path, so the ratio is at most 1/2
    return both + std::log1p(-std::exp(l_axis - both));
}

double brute_force_enum(const EnvSpec& spec, int t, const std::function<bool(int)>& accept) {
    require_kind(spec, EnvKind::Beta1D);
    if (t < 0 || t > 12) throw EnumerationSizeError("1D enumeration is limited to t <= 12");
    if (t > spec.t_max) throw HorizonError("t beyond the environment horizon");
    std::vector<double> logs;
    for (unsigned path = 0; path < (1u << t); ++path) {
        int x = 0;
        double lw = 0;
        for (int s = 0; s < t; ++s) {
            BetaWeight w = site_weight(spec, x, s);
            if (path >> s & 1u) {
                lw += w.log_b;
                ++x;
            } else {
                lw += w.log_1mb;
                --x;
            }
        }
        if (accept(x)) logs.push_back(lw);
    }
    return log_sum_exp(logs);
}

double brute_force_enum_2d(const EnvSpec& spec, int t, const std::function<bool(int, int)>& accept) {
    require_kind(spec, EnvKind::Dirichlet2D);
    if (t < 0 || t > 8) throw EnumerationSizeError("2D enumeration is limited to t <= 8");
    if (t > spec.t_max) throw HorizonError("t beyond the environment horizon");
    static constexpr int dz1[4] = {1, 0, -1, 0}, dz2[4] = {0, 1, 0, -1};
    std::vector<double> logs;
    const unsigned total = 1u << (2 * t);
    for (unsigned path = 0; path < total; ++path) {
        int z1 = 0, z2 = 0;
        double lw = 0;
        for (int s = 0; s < t; ++s) {
            int d = (path >> (2 * s)) & 3u;
            lw += dirichlet_site_weight(spec, z1, z2).log_p[d];
            z1 += dz1[d];
            z2 += dz2[d];
        }
        if (accept(z1, z2)) logs.push_back(lw);
    }
    return log_sum_exp(logs);
}

}  // namespace betawalk
