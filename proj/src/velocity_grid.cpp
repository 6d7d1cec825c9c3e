#include "boltz/velocity_grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "boltz/errors.hpp"

namespace boltz {

VelocityGrid VelocityGrid::create(int n, double half_width) {
    if (n < 4 || n % 2 != 0)
        throw ConfigError("velocity grid: N must be even and >= 4, got " + std::to_string(n));
    if (!(half_width > 0.0))
        throw ConfigError("velocity grid: L must be positive, got " + std::to_string(half_width));

    VelocityGrid g;
    g.n = n;
    g.half_width = half_width;
    g.dv = 2.0 * half_width / n;
    g.dzeta = std::numbers::pi / half_width;
    g.v_nodes.resize(n);
    g.zeta_nodes.resize(n);
    g.axis_coeff.assign(n, 1.0);
    g.axis_coeff.front() = 0.5;
    g.axis_coeff.back() = 0.5;
    for (int k = 0; k < n; ++k) {
        g.v_nodes[k] = g.dv * (k - n / 2);
        g.zeta_nodes[k] = g.dzeta * (k - n / 2);
    }
    return g;
}

} // namespace boltz
