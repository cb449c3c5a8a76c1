#include "betawalk/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "betawalk/quadrature.hpp"

namespace betawalk {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kTwoPiI(0, 2 * kPi);

FredholmResult to_result(cplx d, cplx d_half, int m) {
    return {d.real(), std::abs(d.imag()), m, std::abs(d.real() - d_half.real())};
}

// integral of f over z = c + r e^{i ang}, r in [0, R], split into equal panels
template <class F>
cplx ray_integral(F f, cplx c, double ang, double R, int panels, int n) {
    const GaussRule& g = gauss_legendre(n);
    const cplx e = std::polar(1.0, ang);
    const double h = R / panels;
    cplx sum = 0;
    for (int p = 0; p < panels; ++p)
        for (int i = 0; i < n; ++i) {
            double r = h * (p + 0.5 * (g.nodes[i] + 1));
            sum += 0.5 * h * g.weights[i] * f(c + r * e) * e;
        }
    return sum;
}

double airy_ray_length(double quad, double cubic_floor = 45) {
    // smallest R with quad * R^2 + R^3 / 3 >= cubic_floor
    double R = 0.5;
    while (quad * R * R + R * R * R / 3 < cubic_floor) R += 0.25;
    return R;
}

}  // namespace

cplx nystrom_det(const Eigen::MatrixXcd& K, const std::vector<cplx>& w, int sign) {
    const Eigen::Index n = K.rows();
    if (K.cols() != n || static_cast<std::size_t>(n) != w.size())
        throw std::invalid_argument("kernel matrix and weights disagree in size");
    if (!K.allFinite()) throw NonFiniteKernel("non-finite kernel entry");
    Eigen::Map<const Eigen::VectorXcd> wv(w.data(), n);
    Eigen::MatrixXcd A = double(sign) * K * wv.asDiagonal();
    A.diagonal().array() += 1.0;
    return A.partialPivLu().determinant();
}

FredholmResult nystrom_det(const Kernel& kernel, const Contour& contour, int m, int sign, cplx scale) {
    auto det_at = [&](int mm) {
        QuadratureGrid q = discretize(contour, mm);
        const std::size_t n = q.nodes.size();
        Eigen::MatrixXcd K(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) K(i, j) = kernel(q.nodes[i], q.nodes[j]);
        for (auto& w : q.weights) w *= scale;
        return nystrom_det(K, q.weights, sign);
    };
    return to_result(det_at(m), det_at(std::max(4, m / 2)), m);
}

int nearest_same_parity(double target, int t) {
    double lo = std::floor(target), hi = lo + 1;
    int a = static_cast<int>(lo), b = static_cast<int>(hi);
    // exactly one of a, b has the parity of t
    int same = ((a - t) % 2 == 0) ? a : b;
    int other = (same == a) ? b : a;
    // the nearest same-parity integers are `same` and `other` +- 1 on the far side
    int alt = (other > same) ? other + 1 : other - 1;
    double d1 = std::abs(target - same), d2 = std::abs(target - alt);
    if (d1 < d2) return same;
    if (d2 < d1) return alt;
    return (((t - same) / 2) % 2 == 0) ? same : alt;
}

void LaplaceParams::validate() const {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    if (x < -t || x > t || (t - x) % 2 != 0)
        throw ParityError("x = " + std::to_string(x) + " is not in {-t, ..., t} with the parity of t = " +
                          std::to_string(t));
    if (!(alpha > 0) || !(beta > 0)) throw std::invalid_argument("alpha and beta must be positive");
    if (u.imag() == 0 && u.real() > 0) throw std::invalid_argument("u must not be a positive real");
}

double default_circle_radius(double alpha, double beta) { return std::min(1.0, alpha + beta) / 8; }

double default_s_truncation(double tol) { return 2 * std::log(1 / tol) / kPi + 4; }

namespace {

struct LaplaceSetup {
    const LaplaceParams& lp;
    cplx log_mu;  // log(-u)
    int n1, n2;

    explicit LaplaceSetup(const LaplaceParams& p)
        : lp(p), log_mu(std::log(-p.u)), n1((p.t - p.x) / 2), n2((p.t + p.x) / 2) {}

    cplx log_g(cplx v) const {
        cplx l0 = log_gamma(v), la = log_gamma(lp.alpha + v), lc = log_gamma(lp.alpha + lp.beta + v);
        return double(n1) * (l0 - la) + double(n2) * (lc - la) + l0;
    }

    // pi / sin(pi s) (-u)^s g(v) / g(v+s)
    cplx integrand(cplx v, cplx s) const {
        return kPi / std::sin(kPi * s) * std::exp(s * log_mu + log_g(v) - log_g(v + s));
    }
};

struct SLine {
    std::vector<cplx> s, ds;
};

SLine s_line(double T, int per_panel, double width) {
    const GaussRule& g = gauss_legendre(per_panel);
    const int panels = static_cast<int>(std::ceil(2 * T / width));
    const double h = 2 * T / panels;
    SLine line;
    for (int p = 0; p < panels; ++p)
        for (int i = 0; i < per_panel; ++i) {
            double y = -T + h * (p + 0.5 * (g.nodes[i] + 1));
            line.s.emplace_back(0.5, y);
            line.ds.emplace_back(0, 0.5 * h * g.weights[i]);
        }
    return line;
}

}  // namespace

cplx kernel_KuRW(cplx v, cplx vp, const LaplaceParams& lp, double s_truncation, int m_s) {
    lp.validate();
    if (lp.u == 0.0) return 0;
    LaplaceSetup S(lp);
    SLine line = s_line(s_truncation, m_s, 0.5);
    cplx sum = 0;
    for (std::size_t k = 0; k < line.s.size(); ++k) {
        cplx den = line.s[k] + v - vp;
        if (std::abs(den) < 1e-8) throw PoleProximityError("s-node too close to the pole s = v' - v");
        sum += S.integrand(v, line.s[k]) * line.ds[k] / den;
    }
    return sum / kTwoPiI;
}

FredholmResult laplace_transform(const LaplaceParams& lp, const LaplaceOptions& opt) {
    lp.validate();
    if (lp.u == 0.0) return {1.0, 0.0, opt.circle_nodes, 0.0};
    const double r0 = opt.radius > 0 ? opt.radius : default_circle_radius(lp.alpha, lp.beta);
    LaplaceSetup S(lp);

    double T = opt.s_truncation > 0 ? opt.s_truncation : default_s_truncation(opt.tol);
    if (opt.s_truncation <= 0) {
        // extend until the integrand at the cut is negligible for every point of the circle
        auto env = [&](double y) {
            double m = 0;
            for (int i = 0; i < 16; ++i) {
                cplx v = std::polar(r0, 2 * kPi * (i + 0.5) / 16);
                m = std::max(m, std::abs(S.integrand(v, cplx(0.5, y))));
                m = std::max(m, std::abs(S.integrand(v, cplx(0.5, -y))));
            }
            return m;
        };
        const double peak = std::max(env(0.0), env(1.0));
        while (env(T) > opt.tol * peak && T < 400) T += 4;
    }
    SLine line = s_line(T, opt.s_nodes_per_panel, opt.s_panel_width);
    const std::size_t ns = line.s.size();

    auto det_at = [&](int m) {
        QuadratureGrid q = discretize(Contour::circle(0.0, r0), m);
        const std::size_t n = q.nodes.size();
        Eigen::MatrixXcd E(n, ns);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < ns; ++k) E(i, k) = S.integrand(q.nodes[i], line.s[k]) * line.ds[k];
        Eigen::MatrixXcd K(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx acc = 0;
                const cplx shift = q.nodes[i] - q.nodes[j];
                for (std::size_t k = 0; k < ns; ++k) {
                    cplx den = line.s[k] + shift;
                    if (std::abs(den) < 1e-8) throw PoleProximityError("s-node too close to the pole");
                    acc += E(i, k) / den;
                }
                K(i, j) = acc / kTwoPiI;
            }
        for (auto& w : q.weights) w /= kTwoPiI;
        return nystrom_det(K, q.weights, -1);
    };
    return to_result(det_at(opt.circle_nodes), det_at(std::max(4, opt.circle_nodes / 2)), opt.circle_nodes);
}

std::pair<double, double> airy_ai(double x) {
    // Ai(x) = (1/2 pi i) int exp(z^3/3 - x z) dz from e^{-i pi/3} inf to e^{i pi/3} inf.
    // The contour is symmetric under conjugation, so only the upper half is integrated:
    // Ai = Im(U) / pi with U the integral from the real axis upward.
    auto f = [x](cplx z) { return std::exp(z * z * z / 3.0 - x * z); };
    auto fp = [x](cplx z) { return -z * std::exp(z * z * z / 3.0 - x * z); };
    const double s = std::sqrt(std::abs(x));
    cplx U = 0, Up = 0;
    if (x >= 0) {
        // through the real saddle sqrt(x)
        double R = airy_ray_length(0.5 * s);
        int panels = static_cast<int>(std::ceil(R / 0.75));
        U = ray_integral(f, s, kPi / 3, R, panels, 20);
        Up = ray_integral(fp, s, kPi / 3, R, panels, 20);
    } else {
        // up the imaginary axis to the saddle i sqrt(-x), then out at angle pi/3
        double R = airy_ray_length(std::sin(kPi / 3) * s);
        int panels = static_cast<int>(std::ceil(R / 0.75));
        int vpanels = static_cast<int>(std::ceil(s * s * s / 3)) + 1;
        U = ray_integral(f, 0.0, kPi / 2, s, vpanels, 20) + ray_integral(f, cplx(0, s), kPi / 3, R, panels, 20);
        Up = ray_integral(fp, 0.0, kPi / 2, s, vpanels, 20) + ray_integral(fp, cplx(0, s), kPi / 3, R, panels, 20);
    }
    return {U.imag() / kPi, Up.imag() / kPi};
}

AiryKernelValue airy_kernel(double u, double v, double truncation, int nodes_per_ray) {
    if (!(truncation > 0)) throw std::invalid_argument("truncation radius must be positive");
    auto eval = [&](double R, int m) {
        Contour cz = Contour::wedge(0.5, kPi / 3, R), cw = Contour::wedge(-0.5, 2 * kPi / 3, R);
        cz.panels_per_segment = cw.panels_per_segment = std::max(1, static_cast<int>(std::ceil(R / 3)));
        QuadratureGrid qz = discretize(cz, m), qw = discretize(cw, m);
        cplx sum = 0;
        for (std::size_t a = 0; a < qz.nodes.size(); ++a) {
            cplx z = qz.nodes[a];
            cplx fz = qz.weights[a] * std::exp(z * z * z / 3.0 - z * u);
            cplx inner = 0;
            for (std::size_t b = 0; b < qw.nodes.size(); ++b) {
                cplx w = qw.nodes[b];
                inner += qw.weights[b] * std::exp(-w * w * w / 3.0 + w * v) / (z - w);
            }
            sum += fz * inner;
        }
        return (sum / (kTwoPiI * kTwoPiI)).real();
    };
    AiryKernelValue r;
    r.value = eval(truncation, nodes_per_ray);
    double doubled = eval(2 * truncation, nodes_per_ray);
    r.truncation_change = std::abs(doubled - r.value);
    r.truncation_ok = r.truncation_change <= 1e-9;
    return r;
}

FredholmResult f_gue(double y, int m) {
    if (!std::isfinite(y)) throw std::invalid_argument("f_gue needs a finite argument");
    auto det_at = [y](int mm) {
        // u = y + L tau / (1 - tau) on [0, tau_max]; beyond the cut the kernel is below 1e-18
        const double L = 6.0;
        const double span = std::max(10.0, y + 4.0) - y;
        const double tau_max = span / (L + span);
        const GaussRule& g = gauss_legendre(mm);
        std::vector<double> u(mm), ai(mm), aip(mm);
        std::vector<cplx> w(mm);
        for (int i = 0; i < mm; ++i) {
            double tau = 0.5 * tau_max * (g.nodes[i] + 1);
            u[i] = y + L * tau / (1 - tau);
            w[i] = 0.5 * tau_max * g.weights[i] * L / ((1 - tau) * (1 - tau));
            std::tie(ai[i], aip[i]) = airy_ai(u[i]);
        }
        Eigen::MatrixXcd K(mm, mm);
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < mm; ++j)
                K(i, j) = (i == j) ? aip[i] * aip[i] - u[i] * ai[i] * ai[i]
                                   : (ai[i] * aip[j] - aip[i] * ai[j]) / (u[i] - u[j]);
        return nystrom_det(K, w, -1);
    };
    return to_result(det_at(m), det_at(std::max(4, m / 2)), m);
}

FredholmResult limit_det(double y, double phi, int m) {
    if (!(phi > kPi / 6 && phi < kPi / 2)) throw std::invalid_argument("wedge angle must lie in (pi/6, pi/2)");
    auto det_at = [&](int mm) {
        const double R = 6.0;
        Contour cz = Contour::wedge(0.5, kPi / 3, R), cw = Contour::wedge(-0.5, kPi - phi, R);
        QuadratureGrid qz = discretize(cz, mm), qw = discretize(cw, mm);
        const std::size_t nz = qz.nodes.size(), nw = qw.nodes.size();
        for (cplx z : qz.nodes)
            for (cplx w : qw.nodes)
                if (std::abs(z - w) < 1e-3) throw ContourIntersectionError("z and w contours overlap");
        std::vector<cplx> F(nz);
        for (std::size_t k = 0; k < nz; ++k) {
            cplx z = qz.nodes[k];
            F[k] = qz.weights[k] * std::exp(z * z * z / 3.0 - y * z) / kTwoPiI;
        }
        Eigen::MatrixXcd K(nw, nw);
        for (std::size_t i = 0; i < nw; ++i) {
            cplx wi = qw.nodes[i];
            cplx pre = std::exp(-wi * wi * wi / 3.0 + y * wi);
            for (std::size_t j = 0; j < nw; ++j) {
                cplx wj = qw.nodes[j], acc = 0;
                for (std::size_t k = 0; k < nz; ++k) acc += F[k] / ((wi - qz.nodes[k]) * (qz.nodes[k] - wj));
                K(i, j) = pre * acc;
            }
        }
        for (auto& w : qw.weights) w /= kTwoPiI;
        return nystrom_det(K, qw.weights, +1);
    };
    return to_result(det_at(m), det_at(std::max(4, m / 2)), m);
}

GueTable::GueTable(double lo, double hi, int n, int m) : lo_(lo), hi_(hi), h_((hi - lo) / (n - 1)) {
    if (n < 3 || !(hi > lo)) throw std::invalid_argument("bad F_GUE table layout");
    f_.resize(n);
    for (int i = 0; i < n; ++i) f_[i] = std::clamp(f_gue(lo + i * h_, m).value, 0.0, 1.0);
    // rounding can leave 1e-16 wiggles; the interpolant needs monotone data
    for (int i = 1; i < n; ++i) f_[i] = std::max(f_[i], f_[i - 1]);
    // Fritsch-Carlson slopes
    std::vector<double> delta(n - 1);
    for (int i = 0; i + 1 < n; ++i) delta[i] = (f_[i + 1] - f_[i]) / h_;
    d_.assign(n, 0.0);
    d_[0] = delta[0];
    d_[n - 1] = delta[n - 2];
    for (int i = 1; i + 1 < n; ++i)
        if (delta[i - 1] * delta[i] > 0) d_[i] = 2 / (1 / delta[i - 1] + 1 / delta[i]);
}

double GueTable::operator()(double y) const {
    if (y <= lo_) return f_.front();
    if (y >= hi_) return f_.back();
    double pos = (y - lo_) / h_;
    std::size_t i = std::min(static_cast<std::size_t>(pos), f_.size() - 2);
    double s = pos - i;
    double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
    double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
    return h00 * f_[i] + h10 * h_ * d_[i] + h01 * f_[i + 1] + h11 * h_ * d_[i + 1];
}

}  // namespace betawalk
