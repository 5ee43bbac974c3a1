#include "muskat/random_fields.hpp"

#include <cmath>
#include <set>

#include "muskat/errors.hpp"

namespace muskat {

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw ConfigError("uniform_int: empty range");
    auto span = std::uint64_t(hi) - std::uint64_t(lo) + 1;
    return lo + int(next() % span);
}

SpectralField random_trig_poly(Rng& rng, const TorusGrid& grid, int count, int k_max_axis,
                               double sup_target) {
    if (count < 1) throw ConfigError("random_trig_poly: need at least one mode");
    if (k_max_axis < 1 || k_max_axis > grid.n() / 2 - 1)
        throw ConfigError("random_trig_poly: mode bound outside the representable band");
    if (!(sup_target > 0.0)) throw ConfigError("random_trig_poly: sup target must be positive");

    std::set<std::array<int, 2>> used;
    std::vector<Mode> modes;
    while (int(modes.size()) < count) {
        Mode m;
        m.k[0] = rng.uniform_int(-k_max_axis, k_max_axis);
        if (grid.dim() == 2) m.k[1] = rng.uniform_int(-k_max_axis, k_max_axis);
        if (m.k[0] == 0 && m.k[1] == 0) continue;
        // cos(k.x + p) and cos(-k.x - p) are the same mode; canonicalize.
        std::array<int, 2> key = m.k;
        if (key[0] < 0 || (key[0] == 0 && key[1] < 0)) key = {-key[0], -key[1]};
        if (!used.insert(key).second) continue;
        m.amplitude = rng.uniform(0.5, 1.0);
        m.phase = rng.uniform(0.0, 2.0 * M_PI);
        modes.push_back(m);
    }
    SpectralField f = SpectralField::from_modes(grid, modes);
    double sup = f.max_abs();
    return f * (sup_target / sup);
}

}  // namespace muskat
