#include "betawalk/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "betawalk/rng.hpp"
#include "betawalk/specfun.hpp"

namespace betawalk {

namespace {

using Atom = std::vector<int>;
using Monomial = std::vector<Atom>;  // sorted product of atoms
using Poly = std::map<Monomial, double>;

Poly times_first_order(const Poly& p, std::size_t j, std::size_t len) {
    Poly out;
    Atom e(len, 0);
    e[j] = 1;
    for (const auto& [mono, c] : p) {
        Monomial m = mono;
        m.insert(std::upper_bound(m.begin(), m.end(), e), e);
        out[m] += c;
    }
    return out;
}

Poly derivative(const Poly& p, std::size_t j) {
    Poly out;
    for (const auto& [mono, c] : p)
        for (std::size_t f = 0; f < mono.size(); ++f) {
            Monomial m = mono;
            m[f][j] += 1;
            std::sort(m.begin(), m.end());
            out[m] += c;
        }
    return out;
}

const Poly& expansion(const std::vector<int>& idx) {
    static std::mutex mu;
    static std::map<std::vector<int>, Poly> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(idx);
    if (it != cache.end()) return it->second;
    const std::size_t len = idx.size();
    Poly p{{Monomial{}, 1.0}};
    for (std::size_t j = 0; j < len; ++j)
        for (int c = 0; c < idx[j]; ++c) {
            Poly next = times_first_order(p, j, len);
            for (const auto& [m, v] : derivative(p, j)) next[m] += v;
            p = std::move(next);
        }
    return cache.emplace(idx, std::move(p)).first->second;
}

void check_index(const std::vector<double>& alpha, const std::vector<int>& idx) {
    if (idx.size() != alpha.size()) throw std::invalid_argument("multi-index length must match alpha");
    for (double a : alpha)
        if (!(a > 0)) throw std::domain_error("Dirichlet parameters must be positive");
    int deg = 0;
    for (int i : idx) {
        if (i < 0) throw std::invalid_argument("negative multi-index entry");
        deg += i;
    }
    if (deg > 8) throw OrderError("log-moment degree above 8");
}

}  // namespace

std::vector<MomentTerm> log_moment_expansion(const std::vector<int>& multi_index) {
    std::vector<MomentTerm> out;
    for (const auto& [mono, c] : expansion(multi_index))
        if (c != 0) out.push_back({c, mono});
    return out;
}

double dirichlet_log_moment(const std::vector<double>& alpha, const std::vector<int>& multi_index,
                            const std::vector<double>& shifts) {
    check_index(alpha, multi_index);
    if (shifts.size() != alpha.size()) throw std::invalid_argument("one shift per component");
    const double total = std::accumulate(alpha.begin(), alpha.end(), 0.0);
    std::map<Atom, double> atom_cache;
    auto atom = [&](const Atom& m) {
        auto it = atom_cache.find(m);
        if (it != atom_cache.end()) return it->second;
        int deg = 0, nonzero = 0, which = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            deg += m[i];
            if (m[i]) {
                ++nonzero;
                which = static_cast<int>(i);
            }
        }
        double v;
        if (deg == 1)
            v = (polygamma(0, alpha[which]) - polygamma(0, total)) - shifts[which];
        else
            v = (nonzero == 1 ? polygamma(deg - 1, alpha[which]) : 0.0) - polygamma(deg - 1, total);
        atom_cache.emplace(m, v);
        return v;
    };
    double sum = 0;
    for (const auto& [mono, c] : expansion(multi_index)) {
        double term = c;
        for (const Atom& a : mono) term *= atom(a);
        sum += term;
    }
    return sum;
}

std::vector<double> centered_shifts(const std::vector<double>& alpha) {
    const double total = std::accumulate(alpha.begin(), alpha.end(), 0.0);
    std::vector<double> m;
    for (double a : alpha) m.push_back(polygamma(0, a) - polygamma(0, total));
    return m;
}

std::vector<std::vector<int>> multi_indices(int length, int max_degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(length, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == length) {
            int deg = max_degree - left;
            if (deg >= 1) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, max_degree);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    return out;
}

std::vector<MonteCarloMoment> sample_log_moments(const std::vector<double>& alpha,
                                                 const std::vector<std::vector<int>>& indices,
                                                 const std::vector<double>& shifts, std::int64_t n,
                                                 std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two samples");
    const std::size_t k = alpha.size();
    for (const auto& idx : indices) check_index(alpha, idx);
    std::vector<long double> s1(indices.size(), 0), s2(indices.size(), 0);
    std::vector<double> xi(k), lg(k);
    for (std::int64_t i = 0; i < n; ++i) {
        SiteStream s(counter_key(seed, i, 0, 3));
        double m = -INFINITY;
        for (std::size_t j = 0; j < k; ++j) {
            lg[j] = s.log_gamma_variate(alpha[j]);
            m = std::max(m, lg[j]);
        }
        double acc = 0;
        for (double v : lg) acc += std::exp(v - m);
        const double lse = m + std::log(acc);
        for (std::size_t j = 0; j < k; ++j) xi[j] = lg[j] - lse - shifts[j];
        for (std::size_t q = 0; q < indices.size(); ++q) {
            double prod = 1;
            for (std::size_t j = 0; j < k; ++j)
                for (int e = 0; e < indices[q][j]; ++e) prod *= xi[j];
            s1[q] += prod;
            s2[q] += static_cast<long double>(prod) * prod;
        }
    }
    std::vector<MonteCarloMoment> out;
    for (std::size_t q = 0; q < indices.size(); ++q) {
        long double mean = s1[q] / n;
        long double var = (s2[q] - n * mean * mean) / (n - 1);
        out.push_back({static_cast<double>(mean), static_cast<double>(std::sqrt(std::max(0.0L, var) / n))});
    }
    return out;
}

Rational Rational::from_decimal(const std::string& s) {
    Rational r;
    std::size_t dot = s.find('.');
    std::string digits = s;
    long long den = 1;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a nonnegative decimal: " + s);
    long long num = std::stoll(digits);
    long long g = std::gcd(num, den);
    r.num = num / g;
    r.den = den / g;
    return r;
}

namespace {

long long ceil_div(long long a, long long b) {  // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

long long floor_div(long long a, long long b) {  // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace

DecayReport moment_decay_check(const Rational& r, int k_max, const std::vector<double>& ts) {
    if (r.num <= 0 || r.num >= r.den) throw std::invalid_argument("r must lie in (0, 1)");
    DecayReport rep;
    rep.r = r;
    const long long p = r.num, q = r.den;
    // 5/(3r) - 1/3 = (5q - p) / (3p)
    rep.half_order = ceil_div(5 * q - p, 3 * p);
    rep.k_min = 2 * rep.half_order - 1;
    {
        long long num = p * (rep.half_order - 1), den = q, g = std::gcd(num, den);
        rep.p_threshold = {num / g, den / g};
    }
    // ceil(k/2) > (5q + 3p)/(3p)  and  ceil(k/2) > (5q + p)/(3p)
    rep.k_tta_text = 2 * (floor_div(5 * q + 3 * p, 3 * p) + 1) - 1;
    rep.k_tta_scaling = 2 * (floor_div(5 * q + p, 3 * p) + 1) - 1;

    const double rv = r.value(), pv = rep.p_threshold.value();
    rep.pass = true;
    for (int k = 2; k <= k_max; ++k)
        for (int i1 = k; i1 >= 0; --i1) {
            DecayRow row{k, i1, k - i1, ts, {}, 0, true};
            const int half = (k + 1) / 2;
            for (double t : ts) {
                double a = std::pow(t, rv), small = std::min(1.0, std::pow(t, -pv));
                std::vector<double> alpha{a, a, small, small};
                // self-matching: each family is compared with its own centered log-weights
                std::vector<double> shifts = centered_shifts(alpha);
                double L = dirichlet_log_moment(alpha, {i1, k - i1, 0, 0}, shifts);
                row.products.push_back(std::abs(L) * std::pow(a, half));
            }
            const double last = row.products.back();
            for (double v : row.products) row.max_drift = std::max(row.max_drift, std::abs(v / last - 1));
            row.bounded = std::isfinite(row.max_drift) && row.max_drift <= 0.5;
            rep.pass = rep.pass && row.bounded;
            rep.rows.push_back(row);
        }
    return rep;
}

}  // namespace betawalk
