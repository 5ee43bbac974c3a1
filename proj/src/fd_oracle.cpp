#include "muskat/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace muskat {

namespace {

using cd = std::complex<double>;

struct ModeSum {
    std::vector<double> k;  // signed wavenumbers
    std::vector<cd> c;      // matching coefficients

    explicit ModeSum(const SpectralField& u) {
        const TorusGrid& g = u.grid();
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u.coeff(i) == 0.0) continue;
            k.push_back(g.freq(i) * g.k_min());
            c.push_back(u.coeff(i));
        }
    }

    // Sum c_k e^{z|k|} e^{ikx} and its first derivatives, via one complex
    // exponential per mode. z <= 0.
    void eval(double x, double z, double& h, double& hx, double& dh) const {
        cd sh(0.0, 0.0), sx(0.0, 0.0), sd(0.0, 0.0);
        for (std::size_t m = 0; m < k.size(); ++m) {
            const double km = k[m];
            const cd e = std::exp(cd(z * std::abs(km), x * km)) * c[m];
            sh += e;
            sx += cd(0.0, km) * e;
            sd += std::abs(km) * e;
        }
        h = sh.real();
        hx = sx.real();
        dh = sd.real();
    }

    double value(double x, double z) const {
        cd s(0.0, 0.0);
        for (std::size_t m = 0; m < k.size(); ++m)
            s += std::exp(cd(z * std::abs(k[m]), x * k[m])) * c[m];
        return s.real();
    }
};

struct FdSystem {
    int nx, nz;
    double hx, hz;
    std::vector<double> a11m;  // (x_{i+1/2}, z_j), interior rows only used
    std::vector<double> a22m;  // (x_i, z_{j+1/2})
    std::vector<double> a12n;  // nodes
    std::vector<double> top, bot;

    std::size_t node(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }

    // Flux-form div(A grad .) at the interior nodes of a full grid function.
    void apply_l(const std::vector<double>& v, std::vector<double>& out) const {
        const double ihx2 = 1.0 / (hx * hx);
        const double ihz2 = 1.0 / (hz * hz);
        const double ihxz = 1.0 / (4.0 * hx * hz);
        for (int j = 1; j + 1 < nz; ++j) {
            for (int i = 0; i < nx; ++i) {
                const int ip = (i + 1 == nx) ? 0 : i + 1;
                const int im = (i == 0) ? nx - 1 : i - 1;
                const double xx = a11m[node(i, j)] * (v[node(ip, j)] - v[node(i, j)]) -
                                  a11m[node(im, j)] * (v[node(i, j)] - v[node(im, j)]);
                const double zz = a22m[node(i, j)] * (v[node(i, j + 1)] - v[node(i, j)]) -
                                  a22m[node(i, j - 1)] * (v[node(i, j)] - v[node(i, j - 1)]);
                const double xz = a12n[node(ip, j)] * (v[node(ip, j - 1)] - v[node(ip, j + 1)]) -
                                  a12n[node(im, j)] * (v[node(im, j - 1)] - v[node(im, j + 1)]);
                const double zx = a12n[node(i, j - 1)] * (v[node(ip, j - 1)] - v[node(im, j - 1)]) -
                                  a12n[node(i, j + 1)] * (v[node(ip, j + 1)] - v[node(im, j + 1)]);
                out[node(i, j) - nx] = xx * ihx2 + zz * ihz2 + (xz + zx) * ihxz;
            }
        }
    }
};

// Builds coefficient tables and boundary rows; throws NotSpd if the vertical
// stretch loses positivity anywhere it is sampled.
FdSystem build_system(const SpectralField& eta, const SpectralField& f, int nx, int nz,
                      double depth) {
    if (!(eta.grid() == f.grid())) throw GridMismatch("fd: eta and f live on different tori");
    if (eta.grid().dim() != 1) throw ConfigError("fd: only d = 1");
    if (nx < 32 || nz < 32) throw ConfigError("fd: nx and nz must be at least 32");
    if (depth <= 0.0) throw ConfigError("fd: depth must be positive");

    const double period = eta.grid().period();
    FdSystem sys;
    sys.nx = nx;
    sys.nz = nz;
    sys.hx = period / nx;
    sys.hz = depth / (nz - 1);

    const ModeSum geo(eta);
    const std::size_t total = static_cast<std::size_t>(nx) * nz;
    sys.a11m.resize(total);
    sys.a22m.resize(total, 0.0);
    sys.a12n.resize(total);
    double h, hx, dh;
    for (int j = 0; j < nz; ++j) {
        const double z = -sys.hz * j;
        for (int i = 0; i < nx; ++i) {
            geo.eval(sys.hx * (i + 0.5), z, h, hx, dh);
            if (1.0 + dh <= 0.0) throw NotSpd("fd: d_z rho is not positive on the grid");
            sys.a11m[sys.node(i, j)] = 1.0 + dh;
            geo.eval(sys.hx * i, z, h, hx, dh);
            sys.a12n[sys.node(i, j)] = -hx;
            if (j + 1 < nz) {
                geo.eval(sys.hx * i, z - 0.5 * sys.hz, h, hx, dh);
                if (1.0 + dh <= 0.0) throw NotSpd("fd: d_z rho is not positive on the grid");
                sys.a22m[sys.node(i, j)] = (1.0 + hx * hx) / (1.0 + dh);
            }
        }
    }

    const ModeSum data(f);
    sys.top.resize(nx);
    sys.bot.resize(nx);
    for (int i = 0; i < nx; ++i) {
        sys.top[i] = data.value(sys.hx * i, 0.0);
        sys.bot[i] = data.value(sys.hx * i, -depth);
    }
    return sys;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

FdSolution fd_harmonic_extension(const SpectralField& eta, const SpectralField& f, int nx,
                                 int nz, double depth) {
    const FdSystem sys = build_system(eta, f, nx, nz, depth);
    const std::size_t inner = static_cast<std::size_t>(nx) * (nz - 2);
    const std::size_t total = static_cast<std::size_t>(nx) * nz;

    // right-hand side from the Dirichlet rows
    std::vector<double> full(total, 0.0), b(inner);
    for (int i = 0; i < nx; ++i) {
        full[sys.node(i, 0)] = sys.top[i];
        full[sys.node(i, nz - 1)] = sys.bot[i];
    }
    sys.apply_l(full, b);  // with A = -L on the interior, L(v) = 0 reads Ax = L(bdry)

    const auto apply_a = [&](const std::vector<double>& x, std::vector<double>& out) {
        std::vector<double> v(total, 0.0);
        std::copy(x.begin(), x.end(), v.begin() + nx);
        sys.apply_l(v, out);
        for (double& y : out) y = -y;
    };

    // start from the vertical blend of the two boundary rows
    std::vector<double> x(inner);
    for (int j = 1; j + 1 < nz; ++j) {
        const double t = static_cast<double>(j) / (nz - 1);
        for (int i = 0; i < nx; ++i)
            x[sys.node(i, j) - nx] = (1.0 - t) * sys.top[i] + t * sys.bot[i];
    }

    const double bnorm = std::sqrt(dot(b, b));
    double rel_res = 0.0;
    if (bnorm > 0.0) {
        std::vector<double> r(inner), p(inner), ap(inner);
        apply_a(x, ap);
        for (std::size_t i = 0; i < inner; ++i) r[i] = b[i] - ap[i];
        p = r;
        double rs = dot(r, r);
        const double target = 1e-11 * bnorm;
        const int max_iters = 20000;
        int it = 0;
        double best = std::sqrt(rs);
        int since_best = 0;
        while (it < max_iters && std::sqrt(rs) > target) {
            apply_a(p, ap);
            const double pap = dot(p, ap);
            if (pap <= 0.0) throw NotSpd("fd: system lost positive definiteness");
            const double alpha = rs / pap;
            for (std::size_t i = 0; i < inner; ++i) {
                x[i] += alpha * p[i];
                r[i] -= alpha * ap[i];
            }
            const double rs_new = dot(r, r);
            const double beta = rs_new / rs;
            for (std::size_t i = 0; i < inner; ++i) p[i] = r[i] + beta * p[i];
            rs = rs_new;
            ++it;
            const double rn = std::sqrt(rs);
            if (rn < 0.999 * best) {
                best = rn;
                since_best = 0;
            } else if (++since_best > 200) {
                break;  // stalled at the attainable floor
            }
        }
        apply_a(x, ap);
        double true_res = 0.0;
        for (std::size_t i = 0; i < inner; ++i) true_res += (b[i] - ap[i]) * (b[i] - ap[i]);
        true_res = std::sqrt(true_res);
        if (!(true_res <= 1e-10 * bnorm))
            throw NoConvergence("fd: conjugate gradient missed the residual target", it,
                                true_res / bnorm);
        rel_res = true_res / bnorm;
    }

    FdSolution out;
    out.rel_residual = rel_res;
    out.nx = nx;
    out.nz = nz;
    out.period = eta.grid().period();
    out.depth = depth;
    out.v = std::move(full);
    std::copy(x.begin(), x.end(), out.v.begin() + nx);
    return out;
}

SpectralField fd_dn(const SpectralField& eta, const SpectralField& f, int nx, int nz,
                    double depth) {
    const FdSolution sol = fd_harmonic_extension(eta, f, nx, nz, depth);
    const double hz = sol.hz();
    const ModeSum geo(eta);
    const ModeSum data(f);

    std::vector<double> dn(nx);
    double h, hx, dh;
    for (int i = 0; i < nx; ++i) {
        const double xi = sol.hx() * i;
        geo.eval(xi, 0.0, h, hx, dh);
        const double vz = (3.0 * sol.at(i, 0) - 4.0 * sol.at(i, 1) + sol.at(i, 2)) / (2.0 * hz);
        // tangential part exactly from the Dirichlet data: v_x(., 0) = f_x
        cd fx(0.0, 0.0);
        for (std::size_t m = 0; m < data.k.size(); ++m)
            fx += cd(0.0, data.k[m]) * std::exp(cd(0.0, xi * data.k[m])) * data.c[m];
        dn[i] = ((1.0 + hx * hx) / (1.0 + dh)) * vz - hx * fx.real();
    }

    const TorusGrid fine(1, nx, eta.grid().period());
    const SpectralField fine_field = SpectralField::from_physical(fine, dn);
    SpectralField out(eta.grid());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int freq = eta.grid().freq(i);
        if (freq == 0 || !eta.grid().in_band(i)) continue;
        if (std::abs(freq) > fine.dealias_cutoff()) continue;
        const std::size_t fi = static_cast<std::size_t>(freq >= 0 ? freq : nx + freq);
        out.set_coeff(i, fine_field.coeff(fi));
    }
    return out;
}

double fd_symmetry_defect(const SpectralField& eta, int nx, int nz, double depth,
                          unsigned seed) {
    const SpectralField zero(eta.grid());
    const FdSystem sys = build_system(eta, zero, nx, nz, depth);

    const std::size_t full = static_cast<std::size_t>(nx) * nz;
    const std::size_t inner = static_cast<std::size_t>(nx) * (nz - 2);
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> x(full, 0.0), y(full, 0.0);
    for (std::size_t i = nx; i < full - nx; ++i) {
        x[i] = unit(gen);
        y[i] = unit(gen);
    }

    std::vector<double> lx(inner), ly(inner);
    sys.apply_l(x, lx);
    sys.apply_l(y, ly);
    const std::vector<double> xi(x.begin() + nx, x.end() - nx);
    const std::vector<double> yi(y.begin() + nx, y.end() - nx);
    const double scale = std::sqrt(dot(lx, lx)) * std::sqrt(dot(yi, yi));
    if (scale == 0.0) throw DegeneratePath("fd: symmetry probe vectors degenerate");
    return std::abs(dot(lx, yi) - dot(xi, ly)) / scale;
}

}  // namespace muskat
