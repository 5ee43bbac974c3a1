#pragma once

#include <utility>
#include <vector>

#include "muskat/besov.hpp"
#include "muskat/errors.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"

namespace muskat {

// Which fluid domain the operator acts from. minus is the lower fluid
// {y < eta(x)}; plus is the upper one, handled by reflection.
enum class Side { minus, plus };

struct DiffeoReport {
    bool ok = false;  // min_dz_rho >= 1/2
    double min_dz_rho = 0.0;
    double max_dz_rho = 0.0;
};

// Harmonic lift of the interface into the strip: layer i holds
// e^{z_i |D|} eta. Layer 0 is the trace eta itself.
StripField lift_eta(const SpectralField& eta, const StripGrid& strip);

// Scans d_z rho = 1 + |D|H over the whole strip in physical space.
DiffeoReport diffeo_check(const SpectralField& eta, const StripGrid& strip);

// d_z by fourth-order one-sided / centered stencils on the uniform z grid.
// Purely layerwise linear combinations; needs at least five layers.
StripField dz_strip(const StripField& u);

// Entries of the symmetric flattened-Laplacian coefficient matrix on the
// strip's physical grid, layer index first. det = a11*a22 - a12^2 = 1
// pointwise; the matrix is positive definite exactly where a11 > 0.
struct CoefficientMatrix {
    StripGrid grid;
    std::vector<std::vector<double>> a11;  // d_z rho
    std::vector<std::vector<double>> a12;  // -H_x
    std::vector<std::vector<double>> a22;  // (1 + H_x^2) / d_z rho
};

CoefficientMatrix coefficient_matrix(const StripField& H);

// The two correction forms driving the fixed point,
//   Q_a[v] = H_x v_x - ((H_x^2 - |D|H)/(1 + |D|H)) v_z,
//   Q_b[v] = |D|^{-1} d_x (H_x v_z - |D|H v_x),
// with v_z taken by dz_strip. Both vanish identically when H = 0.
// Throws DenominatorTooSmall when d_z rho drops below 0.4 anywhere.
std::pair<StripField, StripField> q_forms(const StripField& v, const StripField& H);

// One sweep of the strip fixed-point map at boundary data f: evaluates the
// correction forms on v, integrates the auxiliary flux w downward from the
// floor and the bulk update upward from the trace, and returns the updated
// potential. Fixed points solve the flattened Dirichlet problem; the trace
// of the output is f exactly.
StripField apply_T(const StripField& v, const SpectralField& eta, const SpectralField& f);

struct DnSettings {
    double tol = 1e-12;           // sup-norm residual between sweeps
    int max_iters = 40;
    double c_star = 0.1;          // smallness ceiling on || |D|eta ||_{B^0}
    bool enforce_smallness = true;
    bool cross_check = true;      // internal consistency checks on results
    double cross_check_tol = 1e-2;
};

struct FlattenedPotential {
    StripField v;  // the potential, trace layer equals f
    StripField w;  // auxiliary flux of the final iterate, w(0) = R^-(eta) f
    StripField H;  // lift of eta
    bool converged = false;
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> residual_history;
    double contraction_ratio = 0.0;  // max ratio of successive residuals
};

// Dirichlet-Neumann operator of the lower fluid at a fixed interface.
// Construction precomputes everything that depends on eta alone: the lift,
// physical coefficient tables per layer, per-mode decay and quadrature
// weights, and the diffeomorphism report. Solves against different boundary
// data reuse one instance; all methods are const and thread-safe.
class DnOperator {
  public:
    DnOperator(const StripGrid& strip, const SpectralField& eta, DnSettings settings = {});

    const StripGrid& strip() const { return strip_; }
    const SpectralField& eta() const { return eta_; }
    const DnSettings& settings() const { return settings_; }
    const DiffeoReport& diffeo() const { return diffeo_; }
    const DyadicPartition& partition() const { return partition_; }
    double eta_b0() const { return eta_b0_; }  // || |D|eta ||_{B^0}

    // Picard iteration of the strip map from v = lift of f. Converged means
    // the sup residual between sweeps reached tol; hitting max_iters while
    // still shrinking reports converged = false instead of throwing, and
    // NoConvergence is reserved for residual growth.
    FlattenedPotential solve(const SpectralField& f) const;

    // R^-(eta) f, the remainder beyond the flat-interface operator. Mean
    // zero; identically zero at eta = 0.
    SpectralField remainder(const SpectralField& f) const;

    // G^-(eta) f = |D| f + R^-(eta) f.
    SpectralField apply(const SpectralField& f) const;

  private:
    friend StripField apply_T(const StripField&, const SpectralField&, const SpectralField&);

    struct Sweep {
        std::vector<std::complex<double>> u_next;  // updated bulk part
        std::vector<std::complex<double>> w;       // auxiliary flux
        std::vector<std::complex<double>> qa;      // Q_a coefficients
        std::vector<std::complex<double>> s;       // |k| (Q_b - Q_a)
    };

    struct Iter {
        std::vector<std::complex<double>> lift;
        std::vector<std::complex<double>> u;
        Sweep fin;  // flux pass on the final bulk part; fin.u_next unused
        std::vector<double> history;
        bool converged = false;
        int iterations = 0;
        double residual = 0.0;
        double ratio = 0.0;
    };

    std::vector<std::complex<double>> lift_coeffs(const SpectralField& f) const;
    void sweep(const std::vector<std::complex<double>>& lift,
               const std::vector<std::complex<double>>& u, Sweep& out) const;
    SpectralField checked_data(const SpectralField& f) const;
    Iter iterate(const SpectralField& fb) const;

    StripGrid strip_;
    SpectralField eta_;
    DnSettings settings_;
    DyadicPartition partition_;
    DiffeoReport diffeo_;
    StripField h_;
    double eta_b0_ = 0.0;

    // per-mode tables, flat index over the torus
    std::vector<double> kmod_;      // |k|
    std::vector<double> kfreq_;     // signed k
    std::vector<double> riesz_;     // sign(k), 0 at the origin
    std::vector<double> decay_;     // e^{-dz |k|}
    std::vector<double> wa_, wb_;   // exponential quadrature weights at rate |k|
    std::vector<char> band_;

    // per-layer physical tables
    std::vector<std::vector<double>> hx_;     // H_x
    std::vector<std::vector<double>> dh_;     // |D|H
    std::vector<std::vector<double>> ratio_;  // (H_x^2 - |D|H) / (1 + |D|H)
};

// Convenience wrappers constructing a throwaway operator.
FlattenedPotential solve_potential(const SpectralField& eta, const SpectralField& f,
                                   const StripGrid& strip, const DnSettings& settings = {});
SpectralField dn_remainder(const SpectralField& eta, const SpectralField& f,
                           const StripGrid& strip, const DnSettings& settings = {});
SpectralField dn_apply(const SpectralField& eta, const SpectralField& f, Side side,
                       const StripGrid& strip, const DnSettings& settings = {});

// Solution-space diagnostics. x_star_norm is the larger of the strip sup and
// the depth-integrated Besov-1 size of a field on the strip; v_star_norm
// applies it to (|D|v, d_z v) and takes the max of the pair.
double x_star_norm(const StripField& u, const DyadicPartition& p);
double v_star_norm(const StripField& v, const DyadicPartition& p);

}  // namespace muskat
