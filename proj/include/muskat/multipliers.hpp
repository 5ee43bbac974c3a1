#pragma once

#include <complex>

#include "muskat/errors.hpp"
#include "muskat/field.hpp"

namespace muskat {

// Applies a Fourier multiplier given by its symbol on the dual lattice.
// The symbol sees the wavevector with physical units (multiples of 2*pi/L).
template <class Symbol>
SpectralField apply_multiplier(const SpectralField& u, Symbol&& symbol) {
    SpectralField out = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const std::complex<double> c = u.coeff(i);
        if (c == std::complex<double>(0.0, 0.0)) continue;
        out.set_coeff(i, c * symbol(u.grid().wavevector(i)));
    }
    return out;
}

// |D| u, symbol |xi|.
SpectralField modulus(const SpectralField& u);

// d/dx_axis, symbol i xi_axis.
SpectralField derivative(const SpectralField& u, int axis);

// Riesz component |D|^{-1} d/dx_axis, symbol i xi_axis/|xi|. The symbol has no
// limit at the origin; this library fixes it to 0 there, which is the right
// value whenever the operator is applied to mean-free data.
SpectralField riesz(const SpectralField& u, int axis);

// |D|^{-1} u for mean-free u. A mean above mean_tol in absolute value means
// the input was not actually mean-free and the inversion is refused.
SpectralField inverse_modulus(const SpectralField& u, double mean_tol = 1e-10);

// e^{-nu t|D|} u for t >= 0 and rate nu > 0.
SpectralField poisson(const SpectralField& u, double t, double nu = 1.0);

}  // namespace muskat
