#pragma once

#include <cstddef>
#include <vector>

namespace boltz {

/// Cubic velocity lattice together with its Fourier dual.
///
/// The N^3 velocity nodes are v_k = dv*(k - N/2) per axis and cover
/// [-L, L-dv]; the Fourier nodes are zeta_k = dzeta*(k - N/2) with
/// dzeta = pi/L, so dv*dzeta = 2*pi/N holds exactly and both lattices
/// contain the origin (N is required even).  Quadrature on either lattice
/// is the trapezoid rule with the value at the missing +L endpoint taken
/// as zero, i.e. per-axis coefficient 1/2 at indices 0 and N-1 and 1 in
/// the interior.
struct VelocityGrid {
    int n = 0;            // points per axis, even, >= 4
    double half_width = 0; // L
    double dv = 0;
    double dzeta = 0;
    std::vector<double> v_nodes;     // size n
    std::vector<double> zeta_nodes;  // size n
    std::vector<double> axis_coeff;  // per-axis trapezoid coefficients, size n

    static VelocityGrid create(int n, double half_width);

    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }

    std::size_t flat(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }

    double coeff3(int i, int j, int k) const {
        return axis_coeff[i] * axis_coeff[j] * axis_coeff[k];
    }

    /// quadrature weight on the velocity lattice: coeff3 * dv^3
    double vel_weight(int i, int j, int k) const {
        return coeff3(i, j, k) * dv * dv * dv;
    }

    /// quadrature weight on the Fourier lattice: coeff3 * dzeta^3
    double fourier_weight(int i, int j, int k) const {
        return coeff3(i, j, k) * dzeta * dzeta * dzeta;
    }
};

} // namespace boltz
