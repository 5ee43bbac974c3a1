#pragma once

#include <vector>

namespace muskat {

struct PowerFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    double r2 = 0.0;
};

// Least-squares fit of y = C * x^p via log-log regression. All samples must be
// strictly positive and at least two distinct abscissae are required.
PowerFit power_fit(const std::vector<double>& x, const std::vector<double>& y);

// Trapezoid rule on possibly nonuniform strictly increasing abscissae.
double trapezoid(const std::vector<double>& t, const std::vector<double>& y);

}  // namespace muskat
