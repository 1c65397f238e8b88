#include "oldroyd/model/params.hpp"

#include <cmath>

#include "oldroyd/errors.hpp"

namespace oldroyd::model {

ModelParams::ModelParams(double Re_, double We_, double omega_, double alpha_, int dim_)
    : Re(Re_), We(We_), omega(omega_), alpha(alpha_), dim(dim_) {
    if (!(Re > 0.0) || !std::isfinite(Re)) throw ConfigError("Re must be positive");
    if (!(We > 0.0) || !std::isfinite(We)) throw ConfigError("We must be positive");
    if (!(omega > 0.0 && omega < 1.0)) throw ConfigError("omega must lie in (0, 1)");
    if (!(alpha >= -1.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [-1, 1]");
    if (dim != 2 && dim != 3) throw ConfigError("dimension must be 2 or 3");
}

}  // namespace oldroyd::model
