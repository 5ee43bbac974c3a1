#pragma once

#include <string>
#include <vector>

#include "muskat/dn.hpp"
#include "muskat/errors.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"
#include "muskat/params.hpp"

namespace muskat {

// Brute-force validation path. Everything here evaluates the flattening
// geometry by direct summation over the interface modes and solves the
// divergence-form problem with second-order finite differences, sharing no
// code with the strip fixed point it is used to check.

// Node (i, j) sits at x = i*hx(), z = -j*hz(); row j = 0 is the surface.
struct FdSolution {
    int nx = 0;
    int nz = 0;
    double period = 0.0;
    double depth = 0.0;
    double rel_residual = 0.0;  // discrete-operator residual over the data scale
    std::vector<double> v;      // nz rows by nx columns

    double hx() const { return period / nx; }
    double hz() const { return depth / (nz - 1); }
    double at(int i, int j) const { return v[static_cast<std::size_t>(j) * nx + i]; }
};

// Solves div(A grad v) = 0 with v = f on top and the flat-extension value
// e^{-Z|D|}f on the floor, by conjugate gradients on the symmetric
// positive-definite flux-form system. Relative residual reaches 1e-10 or
// NoConvergence; a nonpositive curvature direction throws NotSpd.
FdSolution fd_harmonic_extension(const SpectralField& eta, const SpectralField& f, int nx,
                                 int nz, double depth);

// Surface flux ((1 + rho_x^2)/dz_rho) d_z v - rho_x v_x at z = 0, with d_z v
// by a one-sided second-order stencil and the tangential terms evaluated
// spectrally from the boundary data itself. Mean forced to zero; the result
// lives on eta's torus (band coefficients only).
SpectralField fd_dn(const SpectralField& eta, const SpectralField& f, int nx, int nz,
                    double depth);

// |<Lx, y> - <x, Ly>| / (|Lx| |y|) for two seeded random interior vectors,
// L the assembled divergence-form stencil. The flux form is symmetric entry
// by entry, so anything above roundoff means the assembly is broken.
double fd_symmetry_defect(const SpectralField& eta, int nx, int nz, double depth,
                          unsigned seed = 1);

struct ProbeResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

struct ProbeContext {
    StripGrid strip;
    PhysicalParams params{};  // only f_minus_correction reads the fluid data
    double horizon = 0.25;    // only mild_deviation integrates in time
    int time_nodes = 32;
    DnSettings dn{};
};

// Fits the named quantity against epsilon on a log-log scale:
//   R_minus_linearity    |R^-(eps eta) f|_{B1}          expected slope 1
//   mild_deviation       |eta(T) - decay of eps eta0|   expected slope 2
//   f_minus_correction   |f^-(eps eta) - kappa mu eta|  expected slope 2
// Requires at least four epsilon values and r^2 >= 0.99 (PoorFit below).
ProbeResult epsilon_scaling_probe(const std::string& quantity,
                                  const std::vector<double>& eps_list,
                                  const SpectralField& base_eta, const SpectralField& base_f,
                                  const ProbeContext& ctx);

}  // namespace muskat
