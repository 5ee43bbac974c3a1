#include "muskat/numerics.hpp"

#include <cmath>

#include "muskat/errors.hpp"

namespace muskat {

PowerFit power_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ConfigError("power_fit: length mismatch");
    if (x.size() < 2) throw DegeneratePath("power_fit: need at least two samples");
    std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw DegeneratePath("power_fit: samples must be strictly positive");
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    double dn = double(n);
    double varx = sxx - sx * sx / dn;
    if (varx <= 0.0) throw DegeneratePath("power_fit: abscissae are all equal");
    double cov = sxy - sx * sy / dn;
    double vary = syy - sy * sy / dn;
    PowerFit fit;
    fit.exponent = cov / varx;
    fit.prefactor = std::exp((sy - fit.exponent * sx) / dn);
    fit.r2 = vary > 0.0 ? (cov * cov) / (varx * vary) : 1.0;
    return fit;
}

double trapezoid(const std::vector<double>& t, const std::vector<double>& y) {
    if (t.size() != y.size()) throw ConfigError("trapezoid: length mismatch");
    if (t.size() < 2) throw DegeneratePath("trapezoid: need at least two samples");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        double dt = t[i + 1] - t[i];
        if (!(dt > 0.0)) throw DegeneratePath("trapezoid: abscissae must increase");
        acc += 0.5 * dt * (y[i] + y[i + 1]);
    }
    return acc;
}

}  // namespace muskat
