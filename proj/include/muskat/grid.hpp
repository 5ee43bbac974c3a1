#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "muskat/errors.hpp"

namespace muskat {

// A wavevector on the dual lattice, with its modulus precomputed.
struct Wavevector {
    std::array<double, 2> c{0.0, 0.0};
    int dim = 1;
    double mod = 0.0;
};

// Uniform periodic grid on [0, L)^d. Modes per axis must be a power of two.
// The unpaired Nyquist row |m| = n/2 is kept identically zero throughout the
// library so real fields stay exactly conjugate-symmetric under derivatives;
// the effective spectrum is |m| <= n/2 - 1 per axis.
class TorusGrid {
public:
    TorusGrid(int dim, int modes_per_axis, double period);

    int dim() const { return dim_; }
    int n() const { return n_; }
    double period() const { return period_; }

    std::size_t size() const { return dim_ == 1 ? std::size_t(n_) : std::size_t(n_) * n_; }

    // 2*pi/L, the wavenumber of the lowest mode.
    double k_unit() const { return k_unit_; }
    double k_min() const { return k_unit_; }
    // Largest axis wavenumber carried by a field (Nyquist excluded).
    double k_max_axis() const { return k_unit_ * (n_ / 2 - 1); }
    // Largest modulus over the mode lattice.
    double k_max() const { return k_max_axis() * (dim_ == 2 ? std::sqrt(2.0) : 1.0); }

    // Signed integer frequency of an index along one axis.
    int freq(int axis_index) const { return axis_index < n_ / 2 ? axis_index : axis_index - n_; }

    Wavevector wavevector(std::size_t flat) const {
        Wavevector w;
        w.dim = dim_;
        if (dim_ == 1) {
            w.c[0] = k_unit_ * freq(int(flat));
            w.mod = std::abs(w.c[0]);
        } else {
            w.c[0] = k_unit_ * freq(int(flat / n_));
            w.c[1] = k_unit_ * freq(int(flat % n_));
            w.mod = std::hypot(w.c[0], w.c[1]);
        }
        return w;
    }

    // Largest retained axis frequency under the 2/3 rule.
    int dealias_cutoff() const { return n_ / 3; }

    // True if the flat index survives dealiasing (and is not the Nyquist row).
    bool in_band(std::size_t flat) const {
        int c = dealias_cutoff();
        if (dim_ == 1) return std::abs(freq(int(flat))) <= c;
        return std::abs(freq(int(flat / n_))) <= c && std::abs(freq(int(flat % n_))) <= c;
    }

    bool is_nyquist(std::size_t flat) const {
        if (dim_ == 1) return int(flat) == n_ / 2;
        return int(flat / n_) == n_ / 2 || int(flat % n_) == n_ / 2;
    }

    // Flat index of the mode with signed frequencies m (second entry ignored in 1d).
    std::size_t flat_index(const std::array<int, 2>& m) const {
        auto wrap = [this](int f) { return std::size_t(f >= 0 ? f : f + n_); };
        if (dim_ == 1) return wrap(m[0]);
        return wrap(m[0]) * n_ + wrap(m[1]);
    }

    // Flat index of the conjugate mode -m.
    std::size_t conjugate_index(std::size_t flat) const {
        auto neg = [this](int i) { return i == 0 ? 0 : n_ - i; };
        if (dim_ == 1) return std::size_t(neg(int(flat)));
        return std::size_t(neg(int(flat / n_))) * n_ + neg(int(flat % n_));
    }

    bool operator==(const TorusGrid& o) const = default;

private:
    int dim_;
    int n_;
    double period_;
    double k_unit_;
};

// Horizontal torus crossed with [-Z, 0], sampled on M uniform depth nodes,
// z_0 = 0 exactly and z_{M-1} = -Z. The depth must be large enough that the
// slowest decaying mode is below 1e-12 at the bottom, which is what lets the
// bottom boundary be closed with the flat extension.
class StripGrid {
public:
    StripGrid(TorusGrid torus, double depth, int nodes);

    const TorusGrid& torus() const { return torus_; }
    double depth() const { return depth_; }
    int nodes() const { return nodes_; }

    double dz() const { return depth_ / (nodes_ - 1); }
    double z(int i) const { return -dz() * i; }

    bool operator==(const StripGrid& o) const = default;

private:
    TorusGrid torus_;
    double depth_;
    int nodes_;
};

}  // namespace muskat
