#pragma once

#include <string>
#include <vector>

#include "muskat/errors.hpp"
#include "muskat/field.hpp"
#include "muskat/grid.hpp"

namespace muskat {

// Littlewood-Paley partition on the dual lattice of one grid. Block j carries
// the annulus 2^j * [3/4, 8/3]; weights phi(2^{-j} xi) sum to 1 at every
// nonzero lattice point and at most two consecutive blocks overlap.
class DyadicPartition {
  public:
    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    int block_count() const { return j_max_ - j_min_ + 1; }
    const TorusGrid& grid() const { return grid_; }

    bool in_range(int j) const { return j >= j_min_ && j <= j_max_; }

    // phi(2^{-j} xi) at flat lattice index i.
    double weight(int j, std::size_t i) const;
    const std::vector<double>& weights(int j) const;

    // phi(2^{-j} r) for a scalar modulus r >= 0. The tabulated lattice
    // weights come from this same function.
    double weight_at(int j, double modulus) const;

  private:
    friend DyadicPartition make_partition(const TorusGrid& grid);
    explicit DyadicPartition(const TorusGrid& grid);

    TorusGrid grid_;
    int j_min_ = 0;
    int j_max_ = 0;
    std::vector<std::vector<double>> weights_;
};

DyadicPartition make_partition(const TorusGrid& grid);

// Block operator: modewise multiplication by phi(2^{-j} xi).
SpectralField dyadic_block(const SpectralField& u, int j, const DyadicPartition& p);

// sup_x |block j of u|. Zero without a transform when the block is empty.
double block_sup(const SpectralField& u, int j, const DyadicPartition& p);

// Sum_j 2^{sj} sup |block j of u|. Annihilates constants.
double besov_norm(const SpectralField& u, double s, const DyadicPartition& p);

// Time exponent of a Chemin-Lerner norm.
enum class Lq { one, inf };

// Per block: time-L^q of the block sup over the sampled path (max for inf,
// trapezoid for one), then the 2^{sj}-weighted sum over blocks. Times must be
// strictly increasing; q = one needs at least two samples.
double chemin_lerner_norm(const std::vector<double>& times,
                          const std::vector<SpectralField>& fields, Lq q, double s,
                          const DyadicPartition& p);

// Time series of interface norms along a run. Row i covers [times[0], times[i]]
// for the accumulated columns; x1_kappa = cl_infty_1 + kappa * cl_1_2 holds at
// every row by construction.
struct NormReport {
    double kappa = 0.0;
    std::vector<double> times;
    std::vector<double> besov_1;
    std::vector<double> besov_2;
    std::vector<double> cl_infty_1;
    std::vector<double> cl_1_2;
    std::vector<double> x1_kappa;

    std::string csv() const;
};

NormReport make_norm_report(const std::vector<double>& times,
                            const std::vector<SpectralField>& fields, double kappa,
                            const DyadicPartition& p);

}  // namespace muskat
