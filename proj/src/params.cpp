#include "muskat/params.hpp"

#include "muskat/errors.hpp"

namespace muskat {

void PhysicalParams::validate() const {
    if (!(mu_minus > 0.0)) throw ConfigError("params: mu_minus must be positive");
    if (kind == ProblemKind::OnePhase) {
        if (!(rho_minus > 0.0))
            throw ConfigError("params: one-phase problem needs rho_minus > 0");
        if (mu_plus != 0.0 || rho_plus != 0.0)
            throw ConfigError("params: one-phase problem has no upper fluid constants");
    } else {
        if (!(mu_plus >= 0.0)) throw ConfigError("params: mu_plus must be nonnegative");
        if (!(density_jump() > 0.0))
            throw ConfigError("params: stable stratification needs rho_plus < rho_minus");
    }
}

}  // namespace muskat
