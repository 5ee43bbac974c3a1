#include "muskat/grid.hpp"

#include <string>

namespace muskat {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}

TorusGrid::TorusGrid(int dim, int modes_per_axis, double period)
    : dim_(dim), n_(modes_per_axis), period_(period) {
    if (dim != 1 && dim != 2)
        throw ConfigError("TorusGrid: dim must be 1 or 2, got " + std::to_string(dim));
    if (!power_of_two(modes_per_axis) || modes_per_axis < 8)
        throw ConfigError("TorusGrid: modes per axis must be a power of two >= 8, got " +
                          std::to_string(modes_per_axis));
    if (!(period > 0.0))
        throw ConfigError("TorusGrid: period must be positive");
    k_unit_ = 2.0 * M_PI / period_;
}

StripGrid::StripGrid(TorusGrid torus, double depth, int nodes)
    : torus_(torus), depth_(depth), nodes_(nodes) {
    if (!(depth > 0.0)) throw ConfigError("StripGrid: depth must be positive");
    if (nodes < 8) throw ConfigError("StripGrid: need at least 8 depth nodes");
    // Truncation criterion: the flat extension of the slowest mode must be
    // negligible at the bottom, otherwise chopping the strip is not harmless.
    double tail = std::exp(-depth * torus_.k_min());
    if (tail > 1.0000001e-12)
        throw ConfigError("StripGrid: depth " + std::to_string(depth) +
                          " too shallow; exp(-Z*k_min) = " + std::to_string(tail) +
                          " exceeds 1e-12");
}

}  // namespace muskat
