#pragma once

#include <complex>
#include <vector>

#include "muskat/grid.hpp"

namespace muskat {

// One Fourier mode of a real trigonometric polynomial: amplitude*cos(k.x + phase).
struct Mode {
    std::array<int, 2> k{0, 0};
    double amplitude = 0.0;
    double phase = 0.0;
};

// Periodic scalar field stored as Fourier coefficients c_k of e^{i k.x} in FFT
// index order. Invariant: Nyquist rows are identically zero, so every field is
// band-representable with the conjugate-symmetric part intact.
class SpectralField {
  public:
    explicit SpectralField(const TorusGrid& grid);

    static SpectralField from_physical(const TorusGrid& grid, const std::vector<double>& values);
    static SpectralField from_modes(const TorusGrid& grid, const std::vector<Mode>& modes);

    const TorusGrid& grid() const { return grid_; }
    std::size_t size() const { return coeffs_.size(); }

    const std::complex<double>& coeff(std::size_t flat) const { return coeffs_[flat]; }
    void set_coeff(std::size_t flat, std::complex<double> value);
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

    std::vector<double> to_physical() const;

    // Sup of |u| over the physical collocation grid.
    double max_abs() const;

    // Largest |c_k - conj(c_{-k})|; zero for a real field up to roundoff.
    double hermitian_defect() const;

    std::complex<double> mean() const { return coeffs_[0]; }
    bool mean_zero() const { return coeffs_[0] == std::complex<double>(0.0, 0.0); }
    void project_mean_zero() { coeffs_[0] = 0.0; }

    // Replaces c_k by (c_k + conj(c_{-k}))/2, restoring realness after roundoff.
    void symmetrize();

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double scalar);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }
    friend SpectralField operator*(SpectralField a, double s) { return a *= s; }

  private:
    TorusGrid grid_;
    std::vector<std::complex<double>> coeffs_;

    void zero_nyquist();
    void require_same_grid(const SpectralField& other) const;
};

// Values of a field on the horizontal slices of a flattened strip, surface
// layer first (layer i lives at z = -i*dz).
class StripField {
  public:
    StripField(const StripGrid& grid, std::vector<SpectralField> layers);

    const StripGrid& grid() const { return grid_; }
    int layers() const { return static_cast<int>(layers_.size()); }
    const SpectralField& layer(int i) const;

  private:
    StripGrid grid_;
    std::vector<SpectralField> layers_;
};

}  // namespace muskat
