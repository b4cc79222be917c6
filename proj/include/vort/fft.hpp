#pragma once

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "vort/grid.hpp"

namespace vort {
namespace detail {

// Plans are cached per (dim, n, sign); FFTW planning is not thread-safe.
class PlanCache {
public:
    static fftw_plan get(const GridSpec& g, int sign, fftw_complex* buf) {
        static PlanCache cache;
        std::lock_guard<std::mutex> lock(cache.mutex_);
        auto key = std::make_tuple(g.dim, g.n, sign);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;
        fftw_plan p;
        if (g.dim == 2)
            p = fftw_plan_dft_2d(g.n, g.n, buf, buf, sign, FFTW_ESTIMATE);
        else
            p = fftw_plan_dft_3d(g.n, g.n, g.n, buf, buf, sign, FFTW_ESTIMATE);
        cache.plans_.emplace(key, p);
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

inline void transform_component(const GridSpec& g, std::vector<Complex>& data, int sign) {
    // In-place c2c transform; std::complex<double> is layout-compatible
    // with fftw_complex. Plans are created with FFTW_ESTIMATE so the
    // buffer contents are preserved during planning.
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan p = PlanCache::get(g, sign, buf);
    fftw_execute_dft(p, buf, buf);
}

}  // namespace detail

/// Forward DFT; coefficients are Fourier-series coefficients (the transform
/// divides by n^dim), so f(x) = sum_k fhat(k) e^{i k.x}.
inline SpectralField dft_forward(const PhysicalField& f) {
    if (!f.finite()) throw std::invalid_argument("dft_forward: field has non-finite entries");
    SpectralField out(f.grid, f.ncomp());
    const double scale = 1.0 / static_cast<double>(f.grid.size());
    for (int c = 0; c < f.ncomp(); ++c) {
        auto& comp = out.components[static_cast<std::size_t>(c)];
        const auto& src = f.components[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < src.size(); ++i) comp[i] = Complex{src[i], 0.0};
        detail::transform_component(f.grid, comp, FFTW_FORWARD);
        for (auto& v : comp) v *= scale;
    }
    return out;
}

/// Inverse DFT back to a real field; the imaginary residue of a
/// Hermitian-symmetric input is discarded (it is checked to be small
/// relative to the field scale).
inline PhysicalField dft_inverse(const SpectralField& fhat) {
    PhysicalField out(fhat.grid, fhat.ncomp());
    std::vector<Complex> work;
    double max_imag = 0.0, max_real = 0.0;
    for (int c = 0; c < fhat.ncomp(); ++c) {
        work = fhat.components[static_cast<std::size_t>(c)];
        detail::transform_component(fhat.grid, work, FFTW_BACKWARD);
        auto& dst = out.components[static_cast<std::size_t>(c)];
        for (std::size_t i = 0; i < work.size(); ++i) {
            dst[i] = work[i].real();
            max_imag = std::max(max_imag, std::abs(work[i].imag()));
            max_real = std::max(max_real, std::abs(work[i].real()));
        }
    }
    if (max_real > 0.0 && max_imag > 1e-10 * max_real)
        throw std::invalid_argument("dft_inverse: input is not Hermitian-symmetric");
    return out;
}

/// Evaluate f(x) = g(x_coords...) on the lattice.
template <typename F>
PhysicalField sample_field(const GridSpec& g, int ncomp, F&& func) {
    PhysicalField out(g, ncomp);
    const double h = g.box_length / g.n;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto ix = g.indices(i);
        std::array<double, 3> x{ix[0] * h, ix[1] * h, ix[2] * h};
        for (int c = 0; c < ncomp; ++c)
            out.components[static_cast<std::size_t>(c)][i] = func(c, x);
    }
    return out;
}

}  // namespace vort
