#include "muskat/multipliers.hpp"

#include <cmath>
#include <string>

namespace muskat {

SpectralField modulus(const SpectralField& u) {
    return apply_multiplier(u, [](const Wavevector& k) { return k.mod; });
}

SpectralField derivative(const SpectralField& u, int axis) {
    if (axis < 0 || axis >= u.grid().dim()) throw ConfigError("derivative: axis out of range");
    return apply_multiplier(u, [axis](const Wavevector& k) {
        return std::complex<double>(0.0, k.c[static_cast<std::size_t>(axis)]);
    });
}

SpectralField riesz(const SpectralField& u, int axis) {
    if (axis < 0 || axis >= u.grid().dim()) throw ConfigError("riesz: axis out of range");
    return apply_multiplier(u, [axis](const Wavevector& k) {
        if (k.mod == 0.0) return std::complex<double>(0.0, 0.0);
        return std::complex<double>(0.0, k.c[static_cast<std::size_t>(axis)] / k.mod);
    });
}

SpectralField inverse_modulus(const SpectralField& u, double mean_tol) {
    double mean = std::abs(u.mean());
    if (mean > mean_tol)
        throw SingularZeroMode("inverse_modulus: input has mean " + std::to_string(mean) +
                               ", not invertible");
    SpectralField out = apply_multiplier(
        u, [](const Wavevector& k) { return k.mod == 0.0 ? 0.0 : 1.0 / k.mod; });
    out.project_mean_zero();
    return out;
}

SpectralField poisson(const SpectralField& u, double t, double nu) {
    if (t < 0.0) throw NegativeTime("poisson: semigroup time must be nonnegative");
    if (nu <= 0.0) throw ConfigError("poisson: decay rate must be positive");
    return apply_multiplier(u, [t, nu](const Wavevector& k) { return std::exp(-nu * t * k.mod); });
}

}  // namespace muskat
