#include "betawalk/contour.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "betawalk/quadrature.hpp"

namespace betawalk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

// position and derivative of a segment at parameter s in [0, 1]
std::pair<cplx, cplx> eval(const Segment& seg, double s) {
    return std::visit(
        overloaded{
            [s](const LineSegment& l) { return std::pair{l.a + s * (l.b - l.a), l.b - l.a}; },
            [s](const CircularArc& c) {
                double span = c.phi_end - c.phi_start;
                cplx e = std::polar(1.0, c.phi_start + s * span);
                return std::pair{c.center + c.radius * e, cplx(0, span) * c.radius * e};
            },
            [s](const TruncatedRay& r) {
                if (r.inward)
                    return std::pair{r.origin + (1 - s) * r.length * r.direction, -r.length * r.direction};
                return std::pair{r.origin + s * r.length * r.direction, r.length * r.direction};
            }},
        seg);
}

double segment_size(const Segment& seg) {
    return std::visit(overloaded{[](const LineSegment& l) { return std::abs(l.b - l.a); },
                                 [](const CircularArc& c) { return c.radius * std::abs(c.phi_end - c.phi_start); },
                                 [](const TruncatedRay& r) { return r.length; }},
                      seg);
}

}  // namespace

cplx Contour::start() const {
    if (segments.empty()) throw std::invalid_argument("empty contour");
    return reversed ? eval(segments.back(), 1).first : eval(segments.front(), 0).first;
}

cplx Contour::end() const {
    if (segments.empty()) throw std::invalid_argument("empty contour");
    return reversed ? eval(segments.front(), 0).first : eval(segments.back(), 1).first;
}

bool Contour::closed(double tol) const { return std::abs(start() - end()) <= tol; }

void Contour::check_connected(double tol) const {
    for (std::size_t i = 1; i < segments.size(); ++i)
        if (std::abs(eval(segments[i - 1], 1).first - eval(segments[i], 0).first) > tol)
            throw std::invalid_argument("contour segments do not share endpoints");
}

Contour Contour::circle(cplx center, double radius) {
    Contour c;
    c.segments.push_back(CircularArc{center, radius, -std::numbers::pi, std::numbers::pi});
    return c;
}

Contour Contour::wedge(cplx vertex, double angle, double length) {
    Contour c;
    c.segments.push_back(TruncatedRay{vertex, std::polar(1.0, -angle), length, true});
    c.segments.push_back(TruncatedRay{vertex, std::polar(1.0, angle), length, false});
    return c;
}

Contour Contour::vertical(double re, double half_height) {
    Contour c;
    c.segments.push_back(LineSegment{cplx(re, -half_height), cplx(re, half_height)});
    return c;
}

QuadratureGrid discretize(const Contour& c, int m) {
    if (m < 4) throw std::invalid_argument("need at least 4 nodes per segment");
    c.check_connected(1e-9);
    const GaussRule& g = gauss_legendre(m);
    QuadratureGrid q;
    q.m = m;
    const int panels = std::max(1, c.panels_per_segment);
    for (const Segment& seg : c.segments) {
        if (!(segment_size(seg) > 0)) throw std::invalid_argument("degenerate contour segment");
        for (int p = 0; p < panels; ++p)
            for (int i = 0; i < m; ++i) {
                double s = (p + 0.5 * (g.nodes[i] + 1)) / panels;
                auto [z, dz] = eval(seg, s);
                q.nodes.push_back(z);
                q.weights.push_back(0.5 * g.weights[i] * dz / double(panels));
            }
    }
    if (c.reversed)
        for (auto& w : q.weights) w = -w;
    return q;
}

}  // namespace betawalk
