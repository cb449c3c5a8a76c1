#pragma once

namespace betawalk {

template <class F>
double sum_with_tail(F f, double n0, int cut) {
    double head = 0;
    for (int n = cut - 1; n >= 0; --n) head += f(n0 + n);  // small terms first
    const double N = n0 + cut;
    // integral of f over [N, inf): u = N / s, du = N / s^2 ds
    const GaussRule& g = gauss_legendre(40);
    double integral = 0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        double s = 0.5 * (g.nodes[i] + 1.0);
        integral += 0.5 * g.weights[i] * f(N / s) * N / (s * s);
    }
    // derivatives at N from integer stencils
    double d1 = (f(N - 2) - 8 * f(N - 1) + 8 * f(N + 1) - f(N + 2)) / 12.0;
    double d3 = (-f(N - 2) + 2 * f(N - 1) - 2 * f(N + 1) + f(N + 2)) / 2.0;
    double tail = integral + 0.5 * f(N) - d1 / 12.0 + d3 / 720.0;
    return head + tail;
}

}  // namespace betawalk
