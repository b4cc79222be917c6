#pragma once

#include "vort/fft.hpp"
#include "vort/grid.hpp"

namespace vort {

/// Spectral partial derivative along one axis: multiplication by i*k_axis.
inline SpectralField derive(const SpectralField& f, int axis) {
    if (axis < 0 || axis >= f.grid.dim)
        throw std::invalid_argument("derive: axis out of range");
    SpectralField out = f;
    const auto& g = f.grid;
    for (auto& comp : out.components) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            auto k = g.wavevector(i);
            comp[i] *= Complex{0.0, k[static_cast<std::size_t>(axis)]};
        }
    }
    return out;
}

/// Max |k=0 coefficient| across components.
inline double mean_mode_abs(const SpectralField& f) {
    double m = 0.0;
    for (const auto& c : f.components) m = std::max(m, std::abs(c[0]));
    return m;
}

/// (-Laplacian)^{s/2}: mode-wise multiplication by |k|^s. The k=0 mode is
/// annihilated for s > 0 and must already vanish for s < 0.
inline SpectralField fractional_laplacian(const SpectralField& f, double s) {
    if (s < 0.0) {
        double scale = f.max_abs();
        if (mean_mode_abs(f) > 1e-12 * std::max(scale, 1e-300))
            throw std::invalid_argument("fractional_laplacian: negative order on a field with nonzero mean");
    }
    SpectralField out = f;
    const auto& g = f.grid;
    for (auto& comp : out.components) {
        comp[0] = Complex{0.0, 0.0};
        for (std::size_t i = 1; i < comp.size(); ++i) {
            const double k2 = g.k_mag2(i);
            comp[i] *= std::pow(k2, 0.5 * s);
        }
    }
    if (s == 0.0) {
        // identity away from k=0; restore the mean as well
        for (std::size_t c = 0; c < out.components.size(); ++c)
            out.components[c][0] = f.components[c][0];
    }
    return out;
}

/// Laplacian (negative-definite): multiplication by -|k|^2.
inline SpectralField laplacian(const SpectralField& f) {
    SpectralField out = f;
    const auto& g = f.grid;
    for (auto& comp : out.components)
        for (std::size_t i = 0; i < comp.size(); ++i)
            comp[i] *= -g.k_mag2(i);
    return out;
}

/// Spectral divergence of a dim-component field (scalar, one component).
inline SpectralField divergence(const SpectralField& v) {
    if (v.ncomp() != v.grid.dim)
        throw std::invalid_argument("divergence: component count must equal dim");
    SpectralField out(v.grid, 1);
    const auto& g = v.grid;
    auto& d = out.components[0];
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto k = g.wavevector(i);
        Complex acc{0.0, 0.0};
        for (int c = 0; c < v.ncomp(); ++c)
            acc += Complex{0.0, k[static_cast<std::size_t>(c)]} * v.components[static_cast<std::size_t>(c)][i];
        d[i] = acc;
    }
    return out;
}

/// Mode-wise Leray projection P(k) = I - k k^T/|k|^2 onto divergence-free
/// fields; the k=0 mode is left unchanged.
inline SpectralField project_divfree(const SpectralField& v) {
    if (v.ncomp() != v.grid.dim)
        throw std::invalid_argument("project_divfree: component count must equal dim");
    SpectralField out = v;
    const auto& g = v.grid;
    for (std::size_t i = 1; i < g.size(); ++i) {
        auto k = g.wavevector(i);
        const double k2 = g.k_mag2(i);
        Complex kdot{0.0, 0.0};
        for (int c = 0; c < v.ncomp(); ++c)
            kdot += k[static_cast<std::size_t>(c)] * v.components[static_cast<std::size_t>(c)][i];
        kdot /= k2;
        for (int c = 0; c < v.ncomp(); ++c)
            out.components[static_cast<std::size_t>(c)][i] -= k[static_cast<std::size_t>(c)] * kdot;
    }
    return out;
}

/// 2/3-rule dealiasing: zero every mode with any |k_axis| > (n/3)*k_unit.
inline SpectralField dealias(const SpectralField& f) {
    SpectralField out = f;
    const auto& g = f.grid;
    const double cut = g.dealias_cutoff();
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto ix = g.indices(i);
        bool keep = true;
        for (int d = 0; d < g.dim; ++d)
            if (std::abs(g.k_int(ix[static_cast<std::size_t>(d)])) * g.k_unit > cut) { keep = false; break; }
        if (!keep)
            for (auto& comp : out.components) comp[i] = Complex{0.0, 0.0};
    }
    return out;
}

/// Spectral curl of a 3-component field: (curl f)_hat = i k x f_hat.
inline SpectralField curl(const SpectralField& v) {
    if (v.grid.dim != 3 || v.ncomp() != 3)
        throw std::invalid_argument("curl: requires a 3-component 3-D field");
    SpectralField out(v.grid, 3);
    const auto& g = v.grid;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto k = g.wavevector(i);
        const Complex ik0{0.0, k[0]}, ik1{0.0, k[1]}, ik2{0.0, k[2]};
        const Complex& v0 = v.components[0][i];
        const Complex& v1 = v.components[1][i];
        const Complex& v2 = v.components[2][i];
        out.components[0][i] = ik1 * v2 - ik2 * v1;
        out.components[1][i] = ik2 * v0 - ik0 * v2;
        out.components[2][i] = ik0 * v1 - ik1 * v0;
    }
    return out;
}

/// Discrete L2 inner product <f, g> = sum f.g * cell_volume in physical space.
inline double inner_product(const PhysicalField& a, const PhysicalField& b) {
    require_same_grid(a.grid, b.grid, "inner_product");
    if (a.ncomp() != b.ncomp())
        throw std::invalid_argument("inner_product: component count mismatch");
    double s = 0.0;
    for (int c = 0; c < a.ncomp(); ++c) {
        const auto& ac = a.components[static_cast<std::size_t>(c)];
        const auto& bc = b.components[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < ac.size(); ++i) s += ac[i] * bc[i];
    }
    return s * a.grid.cell_volume();
}

/// Spectral-side L2 inner product, Parseval-consistent with inner_product.
inline double inner_product(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid, b.grid, "inner_product");
    double s = 0.0;
    for (std::size_t c = 0; c < a.components.size(); ++c)
        for (std::size_t i = 0; i < a.components[c].size(); ++i)
            s += (std::conj(a.components[c][i]) * b.components[c][i]).real();
    return s * a.grid.volume();
}

inline double l2_norm_spectral(const SpectralField& f) {
    return std::sqrt(std::max(0.0, inner_product(f, f)));
}

}  // namespace vort
