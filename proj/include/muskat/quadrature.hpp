#pragma once

namespace muskat {

// Weights of the exact integral of e^{-r(h-s)} * linear(s) over s in [0, h]:
// with linear(0) = a and linear(h) = b the integral equals wa*a + wb*b.
struct QuadWeights {
    double wa = 0.0;
    double wb = 0.0;
};

// r >= 0, h > 0. Computation is stable down to r*h = 0 (trapezoid limit) and
// cancellation-free near it; both weights are positive.
QuadWeights exp_quadrature_weights(double r, double h);

double exp_quadrature_step(double r, double a, double b, double h);

// phi1(x) = (1 - e^{-x})/x with phi1(0) = 1. Satisfies wa + wb = h*phi1(r*h).
double phi1(double x);

}  // namespace muskat
