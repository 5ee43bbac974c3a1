#include "muskat/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "muskat/errors.hpp"
#include "muskat/fft.hpp"

namespace muskat {

SpectralField::SpectralField(const TorusGrid& grid)
    : grid_(grid), coeffs_(grid.size(), std::complex<double>(0.0, 0.0)) {}

SpectralField SpectralField::from_physical(const TorusGrid& grid,
                                           const std::vector<double>& values) {
    if (values.size() != grid.size())
        throw GridMismatch("physical sample count does not match the grid");
    SpectralField f(grid);
    for (std::size_t i = 0; i < values.size(); ++i) f.coeffs_[i] = values[i];
    detail::fft_forward(grid.dim(), grid.n(), f.coeffs_.data());
    f.zero_nyquist();
    return f;
}

SpectralField SpectralField::from_modes(const TorusGrid& grid, const std::vector<Mode>& modes) {
    SpectralField f(grid);
    int half = grid.n() / 2;
    for (const Mode& m : modes) {
        for (int axis = 0; axis < grid.dim(); ++axis) {
            int k = m.k[static_cast<std::size_t>(axis)];
            if (k <= -half || k >= half)
                throw ConfigError("mode index outside the representable band");
        }
        std::size_t ip = grid.flat_index(m.k);
        std::array<int, 2> neg{-m.k[0], -m.k[1]};
        std::size_t in = grid.flat_index(neg);
        std::complex<double> c =
            0.5 * m.amplitude * std::complex<double>(std::cos(m.phase), std::sin(m.phase));
        f.coeffs_[ip] += c;
        f.coeffs_[in] += std::conj(c);
    }
    return f;
}

void SpectralField::set_coeff(std::size_t flat, std::complex<double> value) {
    if (grid_.is_nyquist(flat) && value != std::complex<double>(0.0, 0.0))
        throw ConfigError("Nyquist coefficients must stay zero");
    coeffs_[flat] = value;
}

std::vector<double> SpectralField::to_physical() const {
    std::vector<std::complex<double>> work = coeffs_;
    detail::fft_inverse(grid_.dim(), grid_.n(), work.data());
    std::vector<double> out(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) out[i] = work[i].real();
    return out;
}

double SpectralField::max_abs() const {
    std::vector<double> phys = to_physical();
    double m = 0.0;
    for (double v : phys) m = std::max(m, std::abs(v));
    return m;
}

double SpectralField::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::size_t j = grid_.conjugate_index(i);
        worst = std::max(worst, std::abs(coeffs_[i] - std::conj(coeffs_[j])));
    }
    return worst;
}

void SpectralField::symmetrize() {
    std::vector<std::complex<double>> fixed(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::size_t j = grid_.conjugate_index(i);
        fixed[i] = 0.5 * (coeffs_[i] + std::conj(coeffs_[j]));
    }
    coeffs_ = std::move(fixed);
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
    require_same_grid(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
    require_same_grid(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

void SpectralField::zero_nyquist() {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (grid_.is_nyquist(i)) coeffs_[i] = 0.0;
}

void SpectralField::require_same_grid(const SpectralField& other) const {
    if (!(grid_ == other.grid_)) throw GridMismatch("fields live on different grids");
}

StripField::StripField(const StripGrid& grid, std::vector<SpectralField> layers)
    : grid_(grid), layers_(std::move(layers)) {
    if (layers_.size() != static_cast<std::size_t>(grid_.nodes()))
        throw GridMismatch("strip layer count does not match the grid");
    for (const auto& l : layers_)
        if (!(l.grid() == grid_.torus())) throw GridMismatch("strip layer on a different torus");
}

const SpectralField& StripField::layer(int i) const {
    if (i < 0 || i >= layers()) throw ConfigError("strip layer index out of range");
    return layers_[static_cast<std::size_t>(i)];
}

}  // namespace muskat
