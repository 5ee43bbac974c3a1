#pragma once

#include "muskat/field.hpp"

namespace muskat {

// Projection onto the 2/3-rule band: modes with any axis frequency above
// floor(n/3) are dropped.
SpectralField band_truncate(const SpectralField& u);

// Pointwise product computed on the physical grid, with both factors and the
// result truncated to the 2/3 band so quadratic aliasing cannot fold back
// onto retained modes.
SpectralField dealiased_product(const SpectralField& a, const SpectralField& b);

}  // namespace muskat
