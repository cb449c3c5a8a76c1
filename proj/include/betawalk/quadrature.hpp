#pragma once

#include <vector>

namespace betawalk {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Newton iteration on the Legendre recurrence; rules are cached per n.
const GaussRule& gauss_legendre(int n);

// Sum_{n >= n0} f(n) for a smooth, decaying f: explicit terms up to n0+cut,
// then an Euler-Maclaurin tail whose integral is done by mapped Gauss-Legendre.
template <class F>
double sum_with_tail(F f, double n0 = 0.0, int cut = 200);

}  // namespace betawalk

#include "betawalk/detail/quadrature_impl.hpp"
