#include "muskat/quadrature.hpp"

#include <cmath>

#include "muskat/errors.hpp"

namespace muskat {

// With x = r*h the weights are wa = h*psi(x), wb = h*chi(x) where
//   psi(x) = (1 - e^{-x} - x e^{-x}) / x^2 = sum (-x)^n (n+1)/(n+2)!
//   chi(x) = (x - 1 + e^{-x}) / x^2    = sum (-x)^n / (n+2)!.
// The closed forms lose accuracy as x -> 0 (both numerators are O(x^2)
// differences of O(x) terms), so below the switch point the series is summed
// to machine precision instead. At and above the switch the cancellation
// costs at most a few ulps.

namespace {

constexpr double series_cut = 0.5;

double psi(double x) {
    if (x < series_cut) {
        double term = 0.5;
        double sum = term;
        for (int n = 1; n < 40; ++n) {
            term *= -x * (n + 1) / (static_cast<double>(n) * (n + 2));
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (-std::expm1(-x) - x * std::exp(-x)) / (x * x);
}

double chi(double x) {
    if (x < series_cut) {
        double term = 0.5;
        double sum = term;
        for (int n = 1; n < 40; ++n) {
            term *= -x / (n + 2);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (x + std::expm1(-x)) / (x * x);
}

}  // namespace

QuadWeights exp_quadrature_weights(double r, double h) {
    if (r < 0.0) throw ConfigError("exp_quadrature_weights: decay rate must be nonnegative");
    if (!(h > 0.0)) throw ConfigError("exp_quadrature_weights: step must be positive");
    double x = r * h;
    return {h * psi(x), h * chi(x)};
}

double exp_quadrature_step(double r, double a, double b, double h) {
    QuadWeights w = exp_quadrature_weights(r, h);
    return w.wa * a + w.wb * b;
}

double phi1(double x) {
    if (x < series_cut) {
        double term = 1.0;
        double sum = term;
        for (int n = 1; n < 40; ++n) {
            term *= -x / (n + 1);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return -std::expm1(-x) / x;
}

}  // namespace muskat
