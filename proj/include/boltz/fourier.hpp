#pragma once

#include <complex>
#include <span>
#include <vector>

#include "boltz/velocity_grid.hpp"

namespace boltz {

/// Discrete Fourier transforms on the centered lattices of a VelocityGrid.
///
/// forward:  fhat(zeta_k) = (dv/sqrt(2pi))^3 sum_m c_m f(v_m) e^{-i zeta_k.v_m}
///           with c_m the per-axis trapezoid coefficients,
/// inverse:  f(v_k) = Re (dzeta/sqrt(2pi))^3 sum_m g(zeta_m) e^{+i v_k.zeta_m}
///           (plain lattice sum; this makes inverse(forward(f)) reproduce f
///           exactly at interior nodes, boundary nodes return c_m * f).
///
/// Both are computed by an index-space FFT wrapped with the phase factors
/// (-1)^{m}, (-1)^{k} and the per-axis constant (-1)^{N/2} that arise from
/// zeta_k.v_m = (2pi/N)(k - N/2)(m - N/2).  This is the only
/// FFT-convention-sensitive code in the solver.
///
/// Instances own FFTW plans and scratch buffers; they are not thread-safe
/// themselves but distinct instances may run concurrently.  Plans are created
/// with FFTW_ESTIMATE so the algorithm choice (and therefore the bitwise
/// output) does not depend on runtime measurement.
class SpectralTransform {
public:
    explicit SpectralTransform(const VelocityGrid& grid);
    ~SpectralTransform();

    SpectralTransform(const SpectralTransform&) = delete;
    SpectralTransform& operator=(const SpectralTransform&) = delete;

    void forward(std::span<const double> f, std::span<std::complex<double>> fhat);

    /// Imaginary residue is discarded; its max magnitude is written to
    /// *max_imag when non-null.
    void inverse(std::span<const std::complex<double>> g, std::span<double> f,
                 double* max_imag = nullptr);

    const VelocityGrid& grid() const { return grid_; }

private:
    const VelocityGrid& grid_;
    std::vector<std::complex<double>> buf_;
    std::vector<double> sign_;   // (-1)^{m1+m2+m3}, flattened
    double parity_const_;        // ((-1)^{N/2})^3
    void* plan_fwd_ = nullptr;   // fftw_plan
    void* plan_bwd_ = nullptr;
};

} // namespace boltz
