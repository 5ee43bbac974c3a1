#pragma once

#include <cstdint>
#include <vector>

#include "muskat/field.hpp"

namespace muskat {

// Deterministic 64-bit generator (splitmix64). Chosen over std::mt19937 so
// streams are identical across standard libraries, which the reproducibility
// checks rely on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    // Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);

  private:
    std::uint64_t state_;
};

// Mean-free real trig polynomial with `count` distinct nonzero modes, axis
// frequencies up to k_max_axis, random phases, and amplitudes drawn uniformly
// then rescaled so the physical sup norm equals `sup_target`.
SpectralField random_trig_poly(Rng& rng, const TorusGrid& grid, int count, int k_max_axis,
                               double sup_target);

}  // namespace muskat
