#include "muskat/products.hpp"

#include "muskat/errors.hpp"
#include "muskat/fft.hpp"

namespace muskat {

SpectralField band_truncate(const SpectralField& u) {
    SpectralField out = u;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u.grid().in_band(i)) out.set_coeff(i, 0.0);
    return out;
}

SpectralField dealiased_product(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid())) throw GridMismatch("dealiased_product: grids differ");
    std::vector<double> pa = band_truncate(a).to_physical();
    std::vector<double> pb = band_truncate(b).to_physical();
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
    return band_truncate(SpectralField::from_physical(a.grid(), pa));
}

}  // namespace muskat
