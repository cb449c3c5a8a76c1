#pragma once

#include <variant>
#include <vector>

#include "betawalk/specfun.hpp"

namespace betawalk {

struct LineSegment {
    cplx a, b;
};

struct CircularArc {
    cplx center;
    double radius;
    double phi_start, phi_end;
};

struct TruncatedRay {
    cplx origin;
    cplx direction;  // unit modulus
    double length;
    bool inward = false;  // traverse from the far end to the origin
};

using Segment = std::variant<LineSegment, CircularArc, TruncatedRay>;

struct Contour {
    std::vector<Segment> segments;
    bool reversed = false;
    double tail_bound = 0;  // recorded estimate of what the ray truncation drops
    int panels_per_segment = 1;

    cplx start() const;
    cplx end() const;
    bool closed(double tol = 1e-12) const;
    // throws std::invalid_argument if consecutive segments do not share endpoints
    void check_connected(double tol = 1e-12) const;

    static Contour circle(cplx center, double radius);
    // vertex, then rays at angles +-angle, from far below to far above
    static Contour wedge(cplx vertex, double angle, double length);
    static Contour vertical(double re, double half_height);
};

struct QuadratureGrid {
    std::vector<cplx> nodes;
    std::vector<cplx> weights;  // dz, including the parametrization derivative
    int m = 0;                  // nodes per segment panel
};

QuadratureGrid discretize(const Contour& c, int m);

}  // namespace betawalk
