#include "betawalk/steep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "betawalk/quadrature.hpp"

namespace betawalk {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return v;
}

std::string fmt_point(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream os;
    os.precision(6);
    bool first = true;
    for (auto& [k, v] : kv) {
        os << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

class Collector {
public:
    Collector(std::string suite, std::string grid, std::size_t keep)
        : suite_(std::move(suite)), grid_(std::move(grid)), keep_(keep) {}

    void add(std::string point, double margin) {
        if (std::isnan(margin)) margin = -std::numeric_limits<double>::infinity();
        all_.push_back({std::move(point), margin});
    }

    SteepDescentReport finish() {
        SteepDescentReport r;
        r.suite = suite_;
        r.grid = grid_;
        std::stable_sort(all_.begin(), all_.end(),
                         [](const SteepWitness& a, const SteepWitness& b) { return a.margin < b.margin; });
        r.min_margin = all_.empty() ? std::numeric_limits<double>::infinity() : all_.front().margin;
        r.pass = !all_.empty() && r.min_margin > 0;
        for (std::size_t i = 0; i < std::min(keep_, all_.size()); ++i) r.witnesses.push_back(all_[i]);
        return r;
    }

private:
    std::string suite_, grid_;
    std::size_t keep_;
    std::vector<SteepWitness> all_;
};

// sum 1 / ((n+x)^2 ((n+x)^2 + y^2))
double xi_series(double x, double y) {
    const double y2 = y * y;
    return sum_with_tail([&](double n) {
        double a2 = (n + x) * (n + x);
        return 1.0 / (a2 * (a2 + y2));
    });
}

double fact(int k) {
    double f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// the circle suites see h' through this, so the fault hook can reach it
cplx circle_h_prime(cplx z, const ModelParams& p, bool fault) {
    cplx d = h_prime(z, p);
    return fault ? 1.5 * d : d;
}

double circle_term_size(cplx z, const ModelParams& p) {
    const double w = left_weight(p);
    cplx da = polygamma(0, p.alpha + z);
    return std::abs(rate_I(p)) + w * std::abs(da - polygamma(0, z)) +
           (1 - w) * std::abs(da - polygamma(0, p.alpha + p.beta + z));
}

double vertical_term_size(double y, const ModelParams& p) {
    return circle_term_size(cplx(p.theta, y), p);
}

}  // namespace

double steep_circle_margin(double phi, const ModelParams& p) {
    cplx e = std::polar(1.0, phi);
    return (cplx(0, p.theta) * e * h_prime(p.theta * e, p)).real();
}

double steep_circle_ratio(double phi, const ModelParams& p) {
    double s = std::sin(phi) * (1 - std::cos(phi));
    return steep_circle_margin(phi, p) / (p.theta * p.theta * s * frak_g(p.alpha + 1, p.beta));
}

double steep_vertical(double y, const ModelParams& p) {
    return h_prime(cplx(p.theta, y), p).imag();
}

double steep_vertical_H(double y, const ModelParams& p) {
    const double w = left_weight(p);
    const double th = p.theta, b = th + p.alpha, c = b + p.beta;
    const double xb = xi_series(b, y);
    return y * y * (w * (xi_series(th, y) - xb) + (1 - w) * (xi_series(c, y) - xb));
}

double steep_vertical_H_bound(double y, const ModelParams& p) {
    const double w = left_weight(p);
    const double th = p.theta, al = p.alpha, y2 = y * y;
    const GaussRule& g = gauss_legendre(20);
    const int N = 200;
    double total = 0;
    for (int n = N - 1; n >= 0; --n) {
        // integral over s in [0, alpha] of y^2 s / ((s + c)^2 + y^2)^3, c = theta + n,
        // on panels growing geometrically away from s = 0
        const double c = th + n;
        double lo = 0, width = std::min(c, al), sum = 0;
        while (lo < al) {
            double hi = std::min(lo + width, al);
            double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
            for (std::size_t i = 0; i < g.nodes.size(); ++i) {
                double s = mid + half * g.nodes[i];
                double d = (s + c) * (s + c) + y2;
                sum += half * g.weights[i] * y2 * s / (d * d * d);
            }
            lo = hi;
            width *= 2;
        }
        total += sum;
    }
    // sum over n >= N bounded by y^2 (alpha^2/2) / (5 (N - 1 + theta)^5); added, so the
    // bound only gets harder to satisfy
    total += y2 * 0.5 * al * al / (5 * std::pow(N - 1 + th, 5));
    return 8 * w * total;
}

double phi_series(double x, double y) {
    if (!(x > 0)) throw std::domain_error("phi_series needs x > 0");
    const double y2 = y * y;
    return sum_with_tail([&](double n) { return 1.0 / ((n + x) * (n + x) + y2); });
}

double script_P(double x, double phi, double theta) {
    if (!(x >= 0) || !(theta > 0)) throw std::domain_error("script_P needs x >= 0, theta > 0");
    const double c = std::cos(phi), t2 = theta * theta;
    auto term = [&](double n) {
        double xn = n + x;
        double num = t2 + 2 * theta * xn * c;
        return num / ((num + xn * xn) * (theta + xn) * (theta + xn));
    };
    return -sum_with_tail(term);
}

double circle_combination(double phi, const ModelParams& p) {
    const double w = left_weight(p);
    const double pa = script_P(p.alpha, phi, p.theta);
    const double pc = script_P(p.alpha + p.beta, phi, p.theta);
    return pa - pc + w * (pc - script_P(0.0, phi, p.theta));
}

SteepGrid SteepGrid::defaults() {
    SteepGrid g;
    for (int i = 1; i <= 9; ++i) g.thetas.push_back(0.05 * i);
    g.alphas = {0.7, 1, 2, 10};
    g.betas = {0.5, 1, 5};
    g.phis.push_back(1e-3 * kPi);
    for (int i = 1; i <= 25; ++i) g.phis.push_back(kPi * i / 26.0);
    g.phis.push_back((1 - 1e-3) * kPi);
    for (double y : log_grid(0.01, 10, 13)) {
        g.ys.push_back(-y);
        g.ys.push_back(y);
    }
    std::sort(g.ys.begin(), g.ys.end());
    g.poly_args = log_grid(0.05, 50, 25);
    return g;
}

std::string SteepGrid::describe() const {
    std::ostringstream os;
    os << thetas.size() << " theta x " << alphas.size() << " alpha x " << betas.size() << " beta, "
       << phis.size() << " phi, " << ys.size() << " y, " << poly_args.size() << " poly args, k<=" << k_max;
    return os.str();
}

std::vector<SteepDescentReport> verify_polygamma_suite(const SteepGrid& g, const VerifyOptions& o) {
    Collector single("poly_single", g.describe(), o.max_witnesses);
    Collector diff("poly_difference", g.describe(), o.max_witnesses);
    for (int k = 1; k <= g.k_max; ++k)
        for (double x : g.poly_args)
            for (double y : g.poly_args) {
                auto [s, d] = check_polygamma_bounds(k, x, y);
                auto pt = fmt_point({{"k", k}, {"x", x}, {"y", y}});
                single.add(pt, std::min(s.value - s.lower, s.upper - s.value) / std::abs(s.value));
                double dm = std::min(d.value - d.lower, d.upper - d.value) / std::abs(d.value);
                diff.add(pt, d.holds ? dm : std::min(dm, -1.0));
            }
    return {single.finish(), diff.finish()};
}

std::vector<SteepDescentReport> verify_steep_descent(const SteepGrid& g, const VerifyOptions& o) {
    if (g.thetas.empty() || g.alphas.empty() || g.betas.empty() || g.phis.empty() || g.ys.empty())
        throw std::invalid_argument("verification grids must be nonempty");
    const std::string desc = g.describe();
    const std::size_t keep = o.max_witnesses;
    Collector c1("corcor_i", desc, keep), c2("corcor_ii", desc, keep), c3("corcor_iii", desc, keep);
    Collector c4("corcor_iv", desc, keep), c6("corcor_vi", desc, keep);
    Collector fo("fo", desc, keep), fo_id("fo_identity", desc, keep), comb("circle_combination", desc, keep);
    Collector im_sign("im_sign", desc, keep), im_route("im_routes", desc, keep), im_bound("im_bound", desc, keep);
    Collector pest("pestimate", desc, keep), tay("taylor1", desc, keep);

    bool fault_pending = o.inject_fault;

    for (double al : g.alphas)
        for (double be : g.betas) {
            const double gab = frak_g(al, be);
            {
                double v = trigamma(al) - trigamma(al + be), bound = frak_g(al + 1, be);
                c1.add(fmt_point({{"alpha", al}, {"beta", be}}), (v - bound) / v);
            }
            for (double th : g.thetas) {
                ModelParams p{al, be, th};
                if (!p.theorem_one_range()) continue;
                auto pt = [&](std::initializer_list<std::pair<const char*, double>> extra) {
                    std::string s = fmt_point({{"theta", th}, {"alpha", al}, {"beta", be}});
                    if (extra.size()) s += " " + fmt_point(extra);
                    return s;
                };

                for (int k = 1; k <= g.k_max; ++k) {
                    double v = std::abs(polygamma(k, th + al) - polygamma(k, th + al + be));
                    double bound = fact(k + 1) * gab * (1 + 1 / th) / std::pow(th, k - 1);
                    c2.add(pt({{"k", k}}), (bound - v) / bound);
                }
                for (int k = 3; k <= kMaxPolygammaOrder + 1; ++k) {
                    double v = std::abs(h_deriv_theta(k, p));
                    double bound = 64 * gab * fact(k) / std::pow(th, k + 2);
                    c3.add(pt({{"k", k}}), (bound - v) / bound);
                }
                const double sigma = sigma_of_theta(p);
                const double s3 = sigma * sigma * sigma;
                const double h3 = h_deriv_theta(3, p), h4 = h_deriv_theta(4, p);
                c4.add(pt({}), (s3 / (2 * th) + h4 / 24) / gab);
                c6.add(pt({}), std::min(h3, -h4) / std::max(std::abs(h3), std::abs(h4)));

                // circle |z| = theta
                const double w = left_weight(p);
                for (double phi : g.phis) {
                    cplx e = std::polar(1.0, phi);
                    bool fault = fault_pending && phi > 0.4 * kPi;
                    if (fault) fault_pending = false;
                    double lhs = (cplx(0, th) * e * circle_h_prime(th * e, p, fault)).real();
                    double shape = th * th * std::sin(phi) * (1 - std::cos(phi));
                    fo.add(pt({{"phi", phi}}), lhs / (shape * frak_g(al + 1, be)));
                    double cmb = circle_combination(phi, p);
                    comb.add(pt({{"phi", phi}}), cmb / (std::abs(script_P(0.0, phi, th)) * w));
                    double other = 2 * shape * cmb;
                    // the direct route subtracts O(1) digamma values, so its rounding floor
                    // is set by the size of the individual terms, not by the result
                    double floor = 1e-12 * th * circle_term_size(th * e, p);
                    double tol = 1e-8 * std::max(std::abs(lhs), std::abs(other)) + floor;
                    fo_id.add(pt({{"phi", phi}}), 1 - std::abs(lhs - other) / tol);
                }

                // vertical line theta + i y
                for (double y : g.ys) {
                    double im = steep_vertical(y, p);
                    double H = steep_vertical_H(y, p);
                    im_sign.add(pt({{"y", y}}), im * (y > 0 ? 1 : -1) / (std::abs(y) * H));
                    double tol = 1e-8 * std::abs(y * H) + 1e-12 * vertical_term_size(y, p);
                    im_route.add(pt({{"y", y}}), 1 - std::abs(im - y * H) / tol);
                    double rhs = steep_vertical_H_bound(y, p);
                    im_bound.add(pt({{"y", y}}), (H - rhs) / H);
                }

                // P(x) properties on the circle angles
                for (double phi : g.phis) {
                    double c = std::cos(phi);
                    double prev = std::numeric_limits<double>::quiet_NaN();
                    for (double x : g.poly_args) {
                        double mp = -script_P(x, phi, th);
                        if (c >= 0) {
                            pest.add(pt({{"phi", phi}, {"x", x}}), mp / std::abs(mp));
                            if (!std::isnan(prev))
                                pest.add(pt({{"phi", phi}, {"x", x}}), (prev - mp) / std::abs(prev));
                            prev = mp;
                        } else if (c <= -th / (2 * x)) {
                            pest.add(pt({{"phi", phi}, {"x", x}}), -mp / std::abs(mp));
                        }
                    }
                }

                // t-deformed vertical contour: semicircle of radius 1/(sigma t^{1/3}) plus the
                // vertical line outside it
                const double t0 = std::ceil(std::pow(2 / (sigma * th), 3));
                const double h_theta = h_eval(cplx(th, 0), p).real();
                for (double t : {t0, 4 * t0}) {
                    const double bound = 128 * gab / (std::pow(th, 5) * s3 * t);
                    const double rho = 1 / (sigma * std::cbrt(t));
                    for (int i = 0; i <= 32; ++i) {
                        double psi = -kPi / 2 + kPi * i / 32;
                        cplx z = th + std::polar(rho, psi);
                        double d = std::abs(h_eval(z, p) - h_theta);
                        tay.add(pt({{"t", t}, {"psi", psi}}), (bound - d) / bound);
                    }
                    for (double f : {1.0, 1.25, 1.5, 2.0, 4.0, 10.0, 100.0})
                        for (double sgn : {-1.0, 1.0}) {
                            double y = sgn * f * rho;
                            double d = h_eval(cplx(th, y), p).real() - h_theta;
                            tay.add(pt({{"t", t}, {"y", y}}), (bound - d) / bound);
                        }
                }
            }
        }

    return {c1.finish(),  c2.finish(),      c3.finish(),      c4.finish(),       c6.finish(),
            fo.finish(),  fo_id.finish(),   comb.finish(),    im_sign.finish(),  im_route.finish(),
            im_bound.finish(), pest.finish(), tay.finish()};
}

}  // namespace betawalk
