#include "muskat/dn.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "muskat/fft.hpp"
#include "muskat/multipliers.hpp"
#include "muskat/products.hpp"
#include "muskat/quadrature.hpp"

namespace muskat {

namespace {

using cd = std::complex<double>;

SpectralField field_from_coeffs(const TorusGrid& grid, const std::vector<cd>& coeffs) {
    SpectralField out(grid);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0.0) out.set_coeff(i, coeffs[i]);
    }
    return out;
}

// sup_x |real part| of the synthesis of a coefficient row. NaN wins the max.
double row_sup(const TorusGrid& grid, std::vector<cd>& buf) {
    detail::fft_inverse(grid.dim(), grid.n(), buf.data());
    double sup = 0.0;
    for (const cd& c : buf) {
        const double a = std::abs(c.real());
        if (!(a <= sup)) sup = a;
    }
    return sup;
}

// d_z on a layer-major coefficient block; layers are a uniform z grid with
// z decreasing in the layer index, so the index-space stencils flip sign.
void dz_flat(const cd* u, int m, std::size_t n, double h, cd* out) {
    const double c = 1.0 / (12.0 * h);
    const auto row = [&](int i) { return u + static_cast<std::size_t>(i) * n; };
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = c * (25.0 * row(0)[k] - 48.0 * row(1)[k] + 36.0 * row(2)[k] -
                      16.0 * row(3)[k] + 3.0 * row(4)[k]);
        out[n + k] = c * (3.0 * row(0)[k] + 10.0 * row(1)[k] - 18.0 * row(2)[k] +
                          6.0 * row(3)[k] - row(4)[k]);
    }
    for (int i = 2; i + 2 < m; ++i) {
        cd* o = out + static_cast<std::size_t>(i) * n;
        for (std::size_t k = 0; k < n; ++k) {
            o[k] = c * (row(i + 2)[k] - 8.0 * row(i + 1)[k] + 8.0 * row(i - 1)[k] -
                        row(i - 2)[k]);
        }
    }
    cd* o1 = out + static_cast<std::size_t>(m - 2) * n;
    cd* o0 = out + static_cast<std::size_t>(m - 1) * n;
    for (std::size_t k = 0; k < n; ++k) {
        o1[k] = -c * (3.0 * row(m - 1)[k] + 10.0 * row(m - 2)[k] - 18.0 * row(m - 3)[k] +
                      6.0 * row(m - 4)[k] - row(m - 5)[k]);
        o0[k] = -c * (25.0 * row(m - 1)[k] - 48.0 * row(m - 2)[k] + 36.0 * row(m - 3)[k] -
                      16.0 * row(m - 4)[k] + 3.0 * row(m - 5)[k]);
    }
}

SpectralField checked_eta(const StripGrid& strip, const SpectralField& eta) {
    if (strip.torus().dim() != 1) throw ConfigError("dn: only d = 1 strips are supported");
    if (!(eta.grid() == strip.torus()))
        throw GridMismatch("dn: eta lives on a different torus than the strip");
    if (eta.mean() != 0.0) throw ConfigError("dn: eta must be mean-zero");
    return band_truncate(eta);
}

}  // namespace

StripField lift_eta(const SpectralField& eta, const StripGrid& strip) {
    if (!(eta.grid() == strip.torus()))
        throw GridMismatch("lift_eta: eta lives on a different torus than the strip");
    std::vector<SpectralField> layers;
    layers.reserve(strip.nodes());
    for (int i = 0; i < strip.nodes(); ++i) layers.push_back(poisson(eta, -strip.z(i)));
    return StripField(strip, std::move(layers));
}

DiffeoReport diffeo_check(const SpectralField& eta, const StripGrid& strip) {
    const StripField h = lift_eta(eta, strip);
    DiffeoReport report;
    double lo = 1.0, hi = 1.0;
    for (int i = 0; i < h.layers(); ++i) {
        for (double d : modulus(h.layer(i)).to_physical()) {
            lo = std::min(lo, 1.0 + d);
            hi = std::max(hi, 1.0 + d);
        }
    }
    report.min_dz_rho = lo;
    report.max_dz_rho = hi;
    report.ok = lo >= 0.5;
    return report;
}

StripField dz_strip(const StripField& u) {
    const int m = u.grid().nodes();
    if (m < 5) throw ConfigError("dz_strip: needs at least five layers");
    const TorusGrid& torus = u.grid().torus();
    const std::size_t n = torus.size();
    std::vector<cd> flat(static_cast<std::size_t>(m) * n), der(flat.size());
    for (int i = 0; i < m; ++i) {
        const auto& c = u.layer(i).coeffs();
        std::copy(c.begin(), c.end(), flat.begin() + static_cast<std::size_t>(i) * n);
    }
    dz_flat(flat.data(), m, n, u.grid().dz(), der.data());
    std::vector<SpectralField> layers;
    layers.reserve(m);
    for (int i = 0; i < m; ++i) {
        const std::size_t off = static_cast<std::size_t>(i) * n;
        layers.push_back(field_from_coeffs(
            torus, std::vector<cd>(der.begin() + off, der.begin() + off + n)));
    }
    return StripField(u.grid(), std::move(layers));
}

CoefficientMatrix coefficient_matrix(const StripField& H) {
    const TorusGrid& torus = H.grid().torus();
    if (torus.dim() != 1) throw ConfigError("coefficient_matrix: only d = 1");
    CoefficientMatrix out{H.grid(), {}, {}, {}};
    const int m = H.grid().nodes();
    out.a11.reserve(m);
    out.a12.reserve(m);
    out.a22.reserve(m);
    for (int i = 0; i < m; ++i) {
        const auto hx = derivative(H.layer(i), 0).to_physical();
        const auto dh = modulus(H.layer(i)).to_physical();
        std::vector<double> a11(hx.size()), a12(hx.size()), a22(hx.size());
        for (std::size_t x = 0; x < hx.size(); ++x) {
            const double dzrho = 1.0 + dh[x];
            a11[x] = dzrho;
            a12[x] = -hx[x];
            a22[x] = (1.0 + hx[x] * hx[x]) / dzrho;
        }
        out.a11.push_back(std::move(a11));
        out.a12.push_back(std::move(a12));
        out.a22.push_back(std::move(a22));
    }
    return out;
}

std::pair<StripField, StripField> q_forms(const StripField& v, const StripField& H) {
    if (!(v.grid() == H.grid())) throw GridMismatch("q_forms: strip grids differ");
    const TorusGrid& torus = v.grid().torus();
    if (torus.dim() != 1) throw ConfigError("q_forms: only d = 1");
    const int m = v.grid().nodes();
    const StripField vz = dz_strip(v);
    std::vector<SpectralField> qa_layers, qb_layers;
    qa_layers.reserve(m);
    qb_layers.reserve(m);
    for (int i = 0; i < m; ++i) {
        const auto hx = derivative(H.layer(i), 0).to_physical();
        const auto dh = modulus(H.layer(i)).to_physical();
        const auto vx_p = derivative(v.layer(i), 0).to_physical();
        const auto vz_p = vz.layer(i).to_physical();
        std::vector<double> qa_p(hx.size()), qb_p(hx.size());
        for (std::size_t x = 0; x < hx.size(); ++x) {
            const double dzrho = 1.0 + dh[x];
            if (dzrho < 0.4) throw DenominatorTooSmall("q_forms: d_z rho below 0.4");
            qa_p[x] = hx[x] * vx_p[x] - ((hx[x] * hx[x] - dh[x]) / dzrho) * vz_p[x];
            qb_p[x] = hx[x] * vz_p[x] - dh[x] * vx_p[x];
        }
        qa_layers.push_back(band_truncate(SpectralField::from_physical(torus, qa_p)));
        qb_layers.push_back(riesz(band_truncate(SpectralField::from_physical(torus, qb_p)), 0));
    }
    return {StripField(v.grid(), std::move(qa_layers)),
            StripField(v.grid(), std::move(qb_layers))};
}

DnOperator::DnOperator(const StripGrid& strip, const SpectralField& eta, DnSettings settings)
    : strip_(strip),
      eta_(checked_eta(strip, eta)),
      settings_(settings),
      partition_(make_partition(strip.torus())),
      h_(lift_eta(eta_, strip_)) {
    if (settings_.tol <= 0.0 || settings_.max_iters < 1 || settings_.c_star <= 0.0 ||
        settings_.cross_check_tol <= 0.0)
        throw ConfigError("dn: tolerances and max_iters must be positive");

    eta_b0_ = besov_norm(modulus(eta_), 0.0, partition_);
    if (settings_.enforce_smallness && eta_b0_ > settings_.c_star)
        throw SmallnessViolated("dn: interface too large for the fixed point", eta_b0_,
                                settings_.c_star);

    const TorusGrid& torus = strip_.torus();
    const std::size_t n = torus.size();
    const int m = strip_.nodes();
    const double h = strip_.dz();

    kmod_.resize(n);
    kfreq_.resize(n);
    riesz_.resize(n);
    decay_.resize(n);
    wa_.resize(n);
    wb_.resize(n);
    band_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int f = torus.freq(i);
        const double k = f * torus.k_min();
        kfreq_[i] = k;
        kmod_[i] = std::abs(k);
        riesz_[i] = (f > 0) ? 1.0 : (f < 0) ? -1.0 : 0.0;
        decay_[i] = std::exp(-h * kmod_[i]);
        const QuadWeights qw = exp_quadrature_weights(kmod_[i], h);
        wa_[i] = qw.wa;
        wb_[i] = qw.wb;
        band_[i] = torus.in_band(i) ? 1 : 0;
    }

    hx_.resize(m);
    dh_.resize(m);
    ratio_.resize(m);
    double lo = 1.0, hi = 1.0;
    for (int i = 0; i < m; ++i) {
        hx_[i] = derivative(h_.layer(i), 0).to_physical();
        dh_[i] = modulus(h_.layer(i)).to_physical();
        for (double d : dh_[i]) {
            lo = std::min(lo, 1.0 + d);
            hi = std::max(hi, 1.0 + d);
        }
    }
    diffeo_ = DiffeoReport{lo >= 0.5, lo, hi};
    if (lo < 0.4) throw DenominatorTooSmall("dn: d_z rho drops below 0.4 in the strip");
    for (int i = 0; i < m; ++i) {
        ratio_[i].resize(n);
        for (std::size_t x = 0; x < n; ++x)
            ratio_[i][x] = (hx_[i][x] * hx_[i][x] - dh_[i][x]) / (1.0 + dh_[i][x]);
    }
}

std::vector<cd> DnOperator::lift_coeffs(const SpectralField& f) const {
    const std::size_t n = strip_.torus().size();
    const int m = strip_.nodes();
    std::vector<cd> lift(static_cast<std::size_t>(m) * n, cd(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const cd c = f.coeff(k);
        if (c == 0.0) continue;
        for (int i = 0; i < m; ++i)
            lift[static_cast<std::size_t>(i) * n + k] = std::exp(strip_.z(i) * kmod_[k]) * c;
    }
    return lift;
}

void DnOperator::sweep(const std::vector<cd>& lift, const std::vector<cd>& u,
                       Sweep& out) const {
    const TorusGrid& torus = strip_.torus();
    const std::size_t n = torus.size();
    const int m = strip_.nodes();

    std::vector<cd> dzu(u.size());
    dz_flat(u.data(), m, n, strip_.dz(), dzu.data());

    out.qa.assign(u.size(), cd(0.0, 0.0));
    out.s.assign(u.size(), cd(0.0, 0.0));
    std::vector<cd> va(n), vb(n);
    for (int i = 0; i < m; ++i) {
        const std::size_t off = static_cast<std::size_t>(i) * n;
        // v_x spectrally; v_z as the exact derivative of the lift plus a
        // finite-difference derivative of the bulk part.
        for (std::size_t k = 0; k < n; ++k) {
            const cd tot = lift[off + k] + u[off + k];
            va[k] = cd(0.0, kfreq_[k]) * tot;
            vb[k] = kmod_[k] * lift[off + k] + dzu[off + k];
        }
        detail::fft_inverse(1, torus.n(), va.data());
        detail::fft_inverse(1, torus.n(), vb.data());
        const auto& hx = hx_[i];
        const auto& dh = dh_[i];
        const auto& ra = ratio_[i];
        for (std::size_t x = 0; x < n; ++x) {
            const double vx = va[x].real();
            const double vz = vb[x].real();
            va[x] = hx[x] * vx - ra[x] * vz;   // Q_a samples
            vb[x] = hx[x] * vz - dh[x] * vx;   // Q_b samples before the Riesz factor
        }
        detail::fft_forward(1, torus.n(), va.data());
        detail::fft_forward(1, torus.n(), vb.data());
        for (std::size_t k = 0; k < n; ++k) {
            if (!band_[k]) continue;
            const cd qa = va[k];
            const cd qb = cd(0.0, riesz_[k]) * vb[k];
            out.qa[off + k] = qa;
            out.s[off + k] = kmod_[k] * (qb - qa);
        }
    }

    // auxiliary flux, integrated upward from w(-Z) = 0; the deeper node of
    // each panel takes the damped weight
    out.w.assign(u.size(), cd(0.0, 0.0));
    for (int i = m - 2; i >= 0; --i) {
        const std::size_t off = static_cast<std::size_t>(i) * n;
        for (std::size_t k = 0; k < n; ++k)
            out.w[off + k] = decay_[k] * out.w[off + n + k] + wa_[k] * out.s[off + n + k] +
                             wb_[k] * out.s[off + k];
    }

    // bulk update, integrated downward from the trace; the shallower node of
    // each panel takes the damped weight
    out.u_next.assign(u.size(), cd(0.0, 0.0));
    for (int i = 0; i + 1 < m; ++i) {
        const std::size_t off = static_cast<std::size_t>(i) * n;
        for (std::size_t k = 0; k < n; ++k) {
            const cd g0 = out.w[off + k] + out.qa[off + k];
            const cd g1 = out.w[off + n + k] + out.qa[off + n + k];
            out.u_next[off + n + k] = decay_[k] * out.u_next[off + k] -
                                      (wa_[k] * g0 + wb_[k] * g1);
        }
    }
}

SpectralField DnOperator::checked_data(const SpectralField& f) const {
    if (!(f.grid() == strip_.torus()))
        throw GridMismatch("dn: boundary data lives on a different torus than the strip");
    return band_truncate(f);
}

DnOperator::Iter DnOperator::iterate(const SpectralField& fb) const {
    const TorusGrid& torus = strip_.torus();
    const std::size_t n = torus.size();
    const int m = strip_.nodes();

    Iter st;
    st.lift = lift_coeffs(fb);
    st.u.assign(st.lift.size(), cd(0.0, 0.0));

    Sweep sw;
    std::vector<cd> buf(n);
    for (int it = 1; it <= settings_.max_iters; ++it) {
        sweep(st.lift, st.u, sw);
        double sup = 0.0;
        for (int i = 0; i < m; ++i) {
            const std::size_t off = static_cast<std::size_t>(i) * n;
            for (std::size_t k = 0; k < n; ++k) buf[k] = sw.u_next[off + k] - st.u[off + k];
            const double layer = row_sup(torus, buf);
            if (!(layer <= sup)) sup = layer;
        }
        st.u.swap(sw.u_next);
        st.history.push_back(sup);
        st.residual = sup;
        st.iterations = it;
        if (!std::isfinite(sup) || sup > 1e8 * std::max(1.0, st.history.front()))
            throw NoConvergence("dn: strip iteration residual is blowing up", it, sup);
        if (sup <= settings_.tol) {
            st.converged = true;
            break;
        }
    }
    if (!st.converged && st.history.size() >= 2 && st.history.back() > st.history.front())
        throw NoConvergence("dn: strip iteration diverged", st.iterations, st.residual);
    for (std::size_t i = 1; i < st.history.size(); ++i)
        if (st.history[i - 1] > 0.0)
            st.ratio = std::max(st.ratio, st.history[i] / st.history[i - 1]);

    // flux pass matching the final bulk part
    sweep(st.lift, st.u, st.fin);
    return st;
}

FlattenedPotential DnOperator::solve(const SpectralField& f) const {
    const SpectralField fb = checked_data(f);
    Iter st = iterate(fb);
    const TorusGrid& torus = strip_.torus();
    const std::size_t n = torus.size();
    const int m = strip_.nodes();
    std::vector<SpectralField> v_layers, w_layers;
    v_layers.reserve(m);
    w_layers.reserve(m);
    std::vector<cd> row(n);
    for (int i = 0; i < m; ++i) {
        const std::size_t off = static_cast<std::size_t>(i) * n;
        for (std::size_t k = 0; k < n; ++k) row[k] = st.lift[off + k] + st.u[off + k];
        v_layers.push_back(field_from_coeffs(torus, row));
        for (std::size_t k = 0; k < n; ++k) row[k] = st.fin.w[off + k];
        w_layers.push_back(field_from_coeffs(torus, row));
    }
    return FlattenedPotential{StripField(strip_, std::move(v_layers)),
                              StripField(strip_, std::move(w_layers)),
                              h_,
                              st.converged,
                              st.iterations,
                              st.residual,
                              std::move(st.history),
                              st.ratio};
}

SpectralField DnOperator::remainder(const SpectralField& f) const {
    const SpectralField fb = checked_data(f);
    const Iter st = iterate(fb);
    const TorusGrid& torus = strip_.torus();
    const std::size_t n = torus.size();
    const int m = strip_.nodes();

    std::vector<cd> w0(st.fin.w.begin(), st.fin.w.begin() + n);
    if (settings_.cross_check) {
        // independent unroll of the flux recursion at the trace: the
        // per-panel decay factors are re-derived from scratch here
        std::vector<cd> buf(n);
        for (std::size_t k = 0; k < n; ++k) {
            cd acc(0.0, 0.0);
            for (int j = 0; j + 1 < m; ++j) {
                const double e = std::exp(strip_.z(j) * kmod_[k]);
                if (e == 0.0) break;
                const std::size_t off = static_cast<std::size_t>(j) * n;
                acc += e * (wa_[k] * st.fin.s[off + n + k] + wb_[k] * st.fin.s[off + k]);
            }
            buf[k] = w0[k] - acc;
        }
        std::vector<cd> w0copy(w0);
        const double scale = std::max(1.0, row_sup(torus, w0copy));
        const double diff = row_sup(torus, buf);
        if (diff > std::max(100.0 * settings_.tol, 1e-10) * scale)
            throw ConsistencyError("dn: flux recursion and direct integral disagree");
    }
    return field_from_coeffs(torus, w0);
}

SpectralField DnOperator::apply(const SpectralField& f) const {
    const SpectralField fb = checked_data(f);
    const Iter st = iterate(fb);
    const TorusGrid& torus = strip_.torus();
    const std::size_t n = torus.size();

    std::vector<cd> galg(n);
    for (std::size_t k = 0; k < n; ++k) galg[k] = kmod_[k] * fb.coeff(k) + st.fin.w[k];

    if (settings_.cross_check) {
        // trace of d_z v - Q_a, with d_z of the bulk part by the one-sided
        // stencil; agreement is at discretization accuracy, not solver tol
        const double c = 1.0 / (12.0 * strip_.dz());
        std::vector<cd> buf(n);
        for (std::size_t k = 0; k < n; ++k) {
            const cd dzu0 = c * (25.0 * st.u[k] - 48.0 * st.u[n + k] + 36.0 * st.u[2 * n + k] -
                                 16.0 * st.u[3 * n + k] + 3.0 * st.u[4 * n + k]);
            const cd direct = kmod_[k] * st.lift[k] + dzu0 - st.fin.qa[k];
            buf[k] = galg[k] - direct;
        }
        std::vector<cd> gcopy(galg);
        const double scale = std::max(1.0, row_sup(torus, gcopy));
        const double diff = row_sup(torus, buf);
        if (diff > settings_.cross_check_tol * scale)
            throw ConsistencyError("dn: trace formula disagrees with the flux construction");
    }
    return field_from_coeffs(torus, galg);
}

StripField apply_T(const StripField& v, const SpectralField& eta, const SpectralField& f) {
    DnSettings settings;
    settings.enforce_smallness = false;
    settings.cross_check = false;
    const DnOperator op(v.grid(), eta, settings);
    const SpectralField fb = op.checked_data(f);
    const TorusGrid& torus = v.grid().torus();
    const std::size_t n = torus.size();
    const int m = v.grid().nodes();

    const std::vector<cd> lift = op.lift_coeffs(fb);
    std::vector<cd> u(lift.size(), cd(0.0, 0.0));
    for (int i = 0; i < m; ++i) {
        const std::size_t off = static_cast<std::size_t>(i) * n;
        const auto& c = v.layer(i).coeffs();
        for (std::size_t k = 0; k < n; ++k)
            if (torus.in_band(k)) u[off + k] = c[k] - lift[off + k];
    }
    DnOperator::Sweep sw;
    op.sweep(lift, u, sw);

    std::vector<SpectralField> layers;
    layers.reserve(m);
    std::vector<cd> row(n);
    for (int i = 0; i < m; ++i) {
        const std::size_t off = static_cast<std::size_t>(i) * n;
        for (std::size_t k = 0; k < n; ++k) row[k] = lift[off + k] + sw.u_next[off + k];
        layers.push_back(field_from_coeffs(torus, row));
    }
    return StripField(v.grid(), std::move(layers));
}

FlattenedPotential solve_potential(const SpectralField& eta, const SpectralField& f,
                                   const StripGrid& strip, const DnSettings& settings) {
    return DnOperator(strip, eta, settings).solve(f);
}

SpectralField dn_remainder(const SpectralField& eta, const SpectralField& f,
                           const StripGrid& strip, const DnSettings& settings) {
    return DnOperator(strip, eta, settings).remainder(f);
}

SpectralField dn_apply(const SpectralField& eta, const SpectralField& f, Side side,
                       const StripGrid& strip, const DnSettings& settings) {
    if (side == Side::minus) return DnOperator(strip, eta, settings).apply(f);
    SpectralField reflected = eta;
    reflected *= -1.0;
    SpectralField g = DnOperator(strip, reflected, settings).apply(f);
    g *= -1.0;
    return g;
}

double x_star_norm(const StripField& u, const DyadicPartition& p) {
    const int m = u.layers();
    double sup = 0.0;
    for (int i = 0; i < m; ++i) sup = std::max(sup, u.layer(i).max_abs());
    std::vector<double> times;
    std::vector<SpectralField> path;
    times.reserve(m);
    path.reserve(m);
    for (int i = m - 1; i >= 0; --i) {
        times.push_back(u.grid().z(i));
        path.push_back(u.layer(i));
    }
    return std::max(sup, chemin_lerner_norm(times, path, Lq::one, 1.0, p));
}

double v_star_norm(const StripField& v, const DyadicPartition& p) {
    std::vector<SpectralField> mods;
    mods.reserve(v.layers());
    for (int i = 0; i < v.layers(); ++i) mods.push_back(modulus(v.layer(i)));
    const StripField md(v.grid(), std::move(mods));
    return std::max(x_star_norm(md, p), x_star_norm(dz_strip(v), p));
}

}  // namespace muskat
