#pragma once

#include <random>

#include "vort/operators.hpp"

namespace vort {

/// Deterministic random divergence-free, mean-free spectral field.
/// Coefficient magnitudes follow |k|^slope with a smooth cutoff envelope
/// centred on the dyadic band 2^peak_band; the L2 norm is rescaled to
/// `amplitude` exactly (spectral Parseval value).
inline SpectralField random_divfree_field(const GridSpec& grid, std::uint64_t seed,
                                          double spectrum_slope, double amplitude,
                                          int peak_band) {
    if (peak_band < grid.j_min || peak_band > grid.j_max)
        throw std::invalid_argument("random_divfree_field: peak_band outside resolvable range");

    SpectralField out(grid, grid.dim);
    if (amplitude == 0.0) return out;

    // White noise in physical space transforms to a Hermitian-symmetric
    // spectrum; shaping by a radial envelope preserves that symmetry.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PhysicalField noise(grid, grid.dim);
    for (auto& comp : noise.components)
        for (auto& v : comp) v = gauss(rng);
    out = dft_forward(noise);

    const double k_peak = std::ldexp(1.0, peak_band);
    for (auto& comp : out.components) {
        comp[0] = Complex{0.0, 0.0};
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double km = std::sqrt(grid.k_mag2(i));
            const double envelope = std::exp(-std::pow(km / k_peak, 4.0));
            comp[i] *= std::pow(km, spectrum_slope) * envelope;
        }
    }
    out = project_divfree(dealias(out));

    const double norm = l2_norm_spectral(out);
    if (norm == 0.0) return out;
    out *= amplitude / norm;
    return out;
}

/// Shell field: a real field whose spectral support is exactly the axis
/// modes with |k| = 2^j * k_unit. Useful as an exact single-band probe.
inline SpectralField shell_field(const GridSpec& grid, int j, int ncomp = 1,
                                 double coeff = 1.0) {
    const double target = std::ldexp(1.0, j);
    const int k_i = static_cast<int>(std::lround(target / grid.k_unit));
    if (std::abs(k_i * grid.k_unit - target) > 1e-12 || k_i <= 0 || k_i >= grid.n / 2)
        throw std::invalid_argument("shell_field: 2^j is not a lattice wavenumber");
    SpectralField out(grid, ncomp);
    // cos(2^j x_c) on component c: coefficients 1/2 at k = +-2^j e_c
    for (int c = 0; c < ncomp; ++c) {
        const int axis = c % grid.dim;
        std::size_t stride = 1;
        for (int d = grid.dim - 1; d > axis; --d) stride *= static_cast<std::size_t>(grid.n);
        const std::size_t plus = static_cast<std::size_t>(k_i) * stride;
        const std::size_t minus = static_cast<std::size_t>(grid.n - k_i) * stride;
        out.components[static_cast<std::size_t>(c)][plus] = Complex{0.5 * coeff, 0.0};
        out.components[static_cast<std::size_t>(c)][minus] = Complex{0.5 * coeff, 0.0};
    }
    return out;
}

}  // namespace vort
