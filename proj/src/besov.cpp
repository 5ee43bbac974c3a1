#include "muskat/besov.hpp"

#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>

namespace muskat {

namespace {

double mollifier(double x) { return x <= 0.0 ? 0.0 : std::exp(-1.0 / x); }

// 1 on [0, 3/4], 0 on [4/3, inf), monotone exp(-1/x) ramp between.
double cutoff(double r) {
    constexpr double lo = 0.75;
    const double hi = 4.0 / 3.0;
    if (r <= lo) return 1.0;
    if (r >= hi) return 0.0;
    const double t = (r - lo) / (hi - lo);
    const double a = mollifier(1.0 - t);
    const double b = mollifier(t);
    return a / (a + b);
}

// phi(r) = chi(r/2) - chi(r), supported in [3/4, 8/3].
double bump(double r) { return cutoff(0.5 * r) - cutoff(r); }

}  // namespace

DyadicPartition::DyadicPartition(const TorusGrid& grid) : grid_(grid) {}

double DyadicPartition::weight(int j, std::size_t i) const { return weights(j)[i]; }

const std::vector<double>& DyadicPartition::weights(int j) const {
    if (!in_range(j))
        throw BlockOutOfRange("block " + std::to_string(j) + " outside [" +
                              std::to_string(j_min_) + ", " + std::to_string(j_max_) + "]");
    return weights_[static_cast<std::size_t>(j - j_min_)];
}

double DyadicPartition::weight_at(int j, double modulus) const {
    return bump(std::ldexp(modulus, -j));
}

DyadicPartition make_partition(const TorusGrid& grid) {
    DyadicPartition p(grid);
    p.j_min_ = static_cast<int>(std::floor(std::log2(grid.k_min()))) - 2;
    p.j_max_ = static_cast<int>(std::ceil(std::log2(grid.k_max()))) + 1;
    p.weights_.resize(static_cast<std::size_t>(p.block_count()));
    for (int j = p.j_min_; j <= p.j_max_; ++j) {
        std::vector<double>& w = p.weights_[static_cast<std::size_t>(j - p.j_min_)];
        w.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            w[i] = p.weight_at(j, grid.wavevector(i).mod);
    }
    return p;
}

SpectralField dyadic_block(const SpectralField& u, int j, const DyadicPartition& p) {
    if (u.grid() != p.grid()) throw GridMismatch("dyadic_block: partition built for another grid");
    const std::vector<double>& w = p.weights(j);
    SpectralField out = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const std::complex<double> c = u.coeff(i);
        if (c == std::complex<double>(0.0, 0.0)) continue;
        out.set_coeff(i, c * w[i]);
    }
    return out;
}

double block_sup(const SpectralField& u, int j, const DyadicPartition& p) {
    if (u.grid() != p.grid()) throw GridMismatch("block_sup: partition built for another grid");
    const std::vector<double>& w = p.weights(j);
    bool empty = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (w[i] != 0.0 && u.coeff(i) != std::complex<double>(0.0, 0.0)) {
            empty = false;
            break;
        }
    }
    if (empty) return 0.0;
    return dyadic_block(u, j, p).max_abs();
}

double besov_norm(const SpectralField& u, double s, const DyadicPartition& p) {
    double total = 0.0;
    for (int j = p.j_min(); j <= p.j_max(); ++j) {
        const double sup = block_sup(u, j, p);
        if (sup != 0.0) total += std::exp2(s * j) * sup;
    }
    return total;
}

namespace {

void check_path(const std::vector<double>& times, const std::vector<SpectralField>& fields,
                const DyadicPartition& p) {
    if (times.empty() || times.size() != fields.size())
        throw DegeneratePath("path needs matching nonempty times and fields");
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        if (!(times[i] < times[i + 1]))
            throw DegeneratePath("times must be strictly increasing");
    for (const SpectralField& f : fields)
        if (f.grid() != p.grid())
            throw GridMismatch("path field grid differs from partition grid");
}

// sups[i][j - j_min] = sup of block j at sample i.
std::vector<std::vector<double>> path_block_sups(const std::vector<SpectralField>& fields,
                                                 const DyadicPartition& p) {
    std::vector<std::vector<double>> sups(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
        sups[i].resize(static_cast<std::size_t>(p.block_count()));
        for (int j = p.j_min(); j <= p.j_max(); ++j)
            sups[i][static_cast<std::size_t>(j - p.j_min())] = block_sup(fields[i], j, p);
    }
    return sups;
}

}  // namespace

double chemin_lerner_norm(const std::vector<double>& times,
                          const std::vector<SpectralField>& fields, Lq q, double s,
                          const DyadicPartition& p) {
    check_path(times, fields, p);
    if (q == Lq::one && times.size() < 2)
        throw DegeneratePath("time integral needs at least two samples");
    const std::vector<std::vector<double>> sups = path_block_sups(fields, p);
    double total = 0.0;
    for (int j = p.j_min(); j <= p.j_max(); ++j) {
        const std::size_t b = static_cast<std::size_t>(j - p.j_min());
        double block = 0.0;
        if (q == Lq::inf) {
            for (std::size_t i = 0; i < times.size(); ++i) block = std::max(block, sups[i][b]);
        } else {
            for (std::size_t i = 0; i + 1 < times.size(); ++i)
                block += 0.5 * (times[i + 1] - times[i]) * (sups[i][b] + sups[i + 1][b]);
        }
        if (block != 0.0) total += std::exp2(s * j) * block;
    }
    return total;
}

NormReport make_norm_report(const std::vector<double>& times,
                            const std::vector<SpectralField>& fields, double kappa,
                            const DyadicPartition& p) {
    check_path(times, fields, p);
    const std::vector<std::vector<double>> sups = path_block_sups(fields, p);
    const std::size_t blocks = static_cast<std::size_t>(p.block_count());

    NormReport report;
    report.kappa = kappa;
    report.times = times;

    std::vector<double> running_max(blocks, 0.0);
    std::vector<double> running_integral(blocks, 0.0);
    for (std::size_t i = 0; i < times.size(); ++i) {
        double b1 = 0.0;
        double b2 = 0.0;
        double cl_inf = 0.0;
        double cl_one = 0.0;
        for (std::size_t b = 0; b < blocks; ++b) {
            const int j = p.j_min() + static_cast<int>(b);
            const double w1 = std::exp2(static_cast<double>(j));
            const double w2 = std::exp2(2.0 * j);
            b1 += w1 * sups[i][b];
            b2 += w2 * sups[i][b];
            running_max[b] = std::max(running_max[b], sups[i][b]);
            if (i > 0)
                running_integral[b] +=
                    0.5 * (times[i] - times[i - 1]) * (sups[i][b] + sups[i - 1][b]);
            cl_inf += w1 * running_max[b];
            cl_one += w2 * running_integral[b];
        }
        report.besov_1.push_back(b1);
        report.besov_2.push_back(b2);
        report.cl_infty_1.push_back(cl_inf);
        report.cl_1_2.push_back(cl_one);
        report.x1_kappa.push_back(cl_inf + kappa * cl_one);
    }
    return report;
}

std::string NormReport::csv() const {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "t,besov1,besov2,cl_inf_b1,cl_1_b2,x1kappa\n";
    for (std::size_t i = 0; i < times.size(); ++i)
        out << times[i] << ',' << besov_1[i] << ',' << besov_2[i] << ',' << cl_infty_1[i] << ','
            << cl_1_2[i] << ',' << x1_kappa[i] << '\n';
    return out.str();
}

}  // namespace muskat
