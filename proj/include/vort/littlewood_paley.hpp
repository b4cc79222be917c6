#pragma once

#include <ostream>

#include "vort/operators.hpp"

namespace vort {

namespace detail {

// C-infinity transition bump: h(t) = exp(-1/t) for t > 0, else 0.
inline double bump(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace detail

/// Smooth radial cutoff: chi = 1 on r <= 1, chi = 0 on r >= 2, with a
/// C-infinity exponential-bump transition in between.
inline double lp_chi(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    const double t = r - 1.0;
    const double a = detail::bump(1.0 - t);
    const double b = detail::bump(t);
    return a / (a + b);
}

/// Annular multiplier psi_hat(r) = chi(r) - chi(2r); supported in
/// [1/2, 2] with psi_hat(1) = 1.
inline double lp_psi(double r) { return lp_chi(r) - lp_chi(2.0 * r); }

/// Dyadic family of Fourier multipliers on a fixed grid.
///
/// Bands are stored for j in [j_lo, j_hi] where j_lo reaches the lowest
/// nonzero lattice wavenumber and j_hi covers the lattice corner, so that
/// every nonzero mode lies in the annuli and reconstruction is exact.
/// The resolvable range [grid.j_min, grid.j_max] (bands inside the
/// dealiased ball) is what norms and monitors report over.
class DyadicPartition {
public:
    explicit DyadicPartition(const GridSpec& grid) : grid_(grid) {
        j_lo_ = static_cast<int>(std::floor(std::log2(grid.k_unit) + 1e-12));
        j_hi_ = grid.j_cover;
        const std::size_t nmodes = grid.size();
        psi_.assign(static_cast<std::size_t>(j_hi_ - j_lo_ + 1), std::vector<double>(nmodes, 0.0));
        for (int j = j_lo_; j <= j_hi_; ++j) {
            auto& m = psi_[static_cast<std::size_t>(j - j_lo_)];
            const double inv = 1.0 / std::ldexp(1.0, j);
            for (std::size_t i = 1; i < nmodes; ++i)
                m[i] = lp_psi(std::sqrt(grid.k_mag2(i)) * inv);
        }
    }

    const GridSpec& grid() const { return grid_; }
    int j_lo() const { return j_lo_; }
    int j_hi() const { return j_hi_; }
    int j_min() const { return grid_.j_min; }
    int j_max() const { return grid_.j_max; }

    const std::vector<double>& psi_multiplier(int j) const {
        if (j < j_lo_ || j > j_hi_)
            throw std::invalid_argument("DyadicPartition: band index outside stored range");
        return psi_[static_cast<std::size_t>(j - j_lo_)];
    }

    /// Low-pass multiplier of S_j = sum_{p<j} Delta_p (+ sub-lattice
    /// residual): chi(|k| / 2^{j-1}).
    double s_multiplier(int j, std::size_t flat) const {
        if (flat == 0) return 1.0;
        return lp_chi(std::sqrt(grid_.k_mag2(flat)) / std::ldexp(1.0, j - 1));
    }

private:
    GridSpec grid_;
    int j_lo_, j_hi_;
    std::vector<std::vector<double>> psi_;
};

inline DyadicPartition build_partition(const GridSpec& grid) { return DyadicPartition(grid); }

/// Band-pass block Delta_j f: mode-wise multiplication by psi_hat(k/2^j).
inline SpectralField delta_j(const SpectralField& f, int j, const DyadicPartition& part) {
    require_same_grid(f.grid, part.grid(), "delta_j");
    const auto& m = part.psi_multiplier(j);
    SpectralField out = f;
    for (auto& comp : out.components) {
        comp[0] = Complex{0.0, 0.0};
        for (std::size_t i = 1; i < comp.size(); ++i) comp[i] *= m[i];
    }
    return out;
}

/// Low-pass block S_j f. Valid for j in [j_lo, j_hi + 1]; j = j_hi + 1 is
/// the identity on every field.
inline SpectralField s_j(const SpectralField& f, int j, const DyadicPartition& part) {
    require_same_grid(f.grid, part.grid(), "s_j");
    if (j < part.j_lo() || j > part.j_hi() + 1)
        throw std::invalid_argument("s_j: band index outside range");
    SpectralField out = f;
    for (auto& comp : out.components)
        for (std::size_t i = 1; i < comp.size(); ++i)
            comp[i] *= part.s_multiplier(j, i);
    return out;
}

/// Littlewood-Paley decomposition: all stored bands plus the low residual
/// S_{j_lo}. Bands sum (with the residual) back to f exactly.
struct LPDecomposition {
    std::vector<std::pair<int, SpectralField>> bands;
    SpectralField residual_low;
    GridSpec source_grid;

    SpectralField reconstruct() const {
        SpectralField acc = residual_low;
        for (const auto& [j, b] : bands) {
            (void)j;
            acc += b;
        }
        return acc;
    }
};

inline LPDecomposition decompose(const SpectralField& f, const DyadicPartition& part) {
    require_same_grid(f.grid, part.grid(), "decompose");
    LPDecomposition out;
    out.source_grid = f.grid;
    out.bands.reserve(static_cast<std::size_t>(part.j_hi() - part.j_lo() + 1));
    for (int j = part.j_lo(); j <= part.j_hi(); ++j)
        out.bands.emplace_back(j, delta_j(f, j, part));
    out.residual_low = s_j(f, part.j_lo(), part);
    return out;
}

/// Dealiased pointwise product of two scalar spectral fields.
inline SpectralField spectral_product(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f.grid, g.grid, "spectral_product");
    if (f.ncomp() != 1 || g.ncomp() != 1)
        throw std::invalid_argument("spectral_product: scalar fields expected");
    PhysicalField fp = dft_inverse(f);
    PhysicalField gp = dft_inverse(g);
    PhysicalField prod(f.grid, 1);
    for (std::size_t i = 0; i < prod.components[0].size(); ++i)
        prod.components[0][i] = fp.components[0][i] * gp.components[0][i];
    return dealias(dft_forward(prod));
}

struct ParaproductSplit {
    SpectralField pi_fg;      // sum_j Delta_j f . S_{j-2} g
    SpectralField pi_gf;      // sum_j Delta_j g . S_{j-2} f
    SpectralField remainder;  // sum_{|l-j|<=2} Delta_j f . Delta_l g
};

/// Bony splitting of the product fg for scalar fields; the three pieces
/// sum to dealias(fg).
inline ParaproductSplit paraproduct_split(const SpectralField& f, const SpectralField& g,
                                          const DyadicPartition& part) {
    require_same_grid(f.grid, part.grid(), "paraproduct_split");
    require_same_grid(g.grid, part.grid(), "paraproduct_split");
    ParaproductSplit out{SpectralField(f.grid, 1), SpectralField(f.grid, 1), SpectralField(f.grid, 1)};
    for (int j = part.j_lo(); j <= part.j_hi(); ++j) {
        SpectralField dj_f = delta_j(f, j, part);
        SpectralField dj_g = delta_j(g, j, part);
        out.pi_fg += spectral_product(dj_f, s_j(g, j - 2 < part.j_lo() ? part.j_lo() : j - 2, part));
        out.pi_gf += spectral_product(dj_g, s_j(f, j - 2 < part.j_lo() ? part.j_lo() : j - 2, part));
        for (int l = std::max(part.j_lo(), j - 2); l <= std::min(part.j_hi(), j + 2); ++l)
            out.remainder += spectral_product(dj_f, delta_j(g, l, part));
    }
    return out;
}

struct ParaproductBand {
    SpectralField term1;     // Delta_j f . S_{j-2} g
    SpectralField term2;     // Delta_j g . S_{j-2} f
    SpectralField term3;     // Delta_j( sum_{k>=j} Delta_k f . Delta_k g )
    SpectralField residual;  // Delta_j(fg) - (term1 + term2 + term3)
};

/// The diagonal paraproduct rule for a single band: the three retained
/// terms and the measured residual from the neglected non-diagonal terms.
inline ParaproductBand paraproduct_band(int j, const SpectralField& f, const SpectralField& g,
                                        const DyadicPartition& part) {
    if (j < part.j_lo() || j > part.j_hi())
        throw std::invalid_argument("paraproduct_band: band index outside range");
    ParaproductBand out;
    const int s_idx = std::max(part.j_lo(), j - 2);
    out.term1 = spectral_product(delta_j(f, j, part), s_j(g, s_idx, part));
    out.term2 = spectral_product(delta_j(g, j, part), s_j(f, s_idx, part));
    SpectralField diag(f.grid, 1);
    for (int k = j; k <= part.j_hi(); ++k)
        diag += spectral_product(delta_j(f, k, part), delta_j(g, k, part));
    out.term3 = delta_j(diag, j, part);
    out.residual = delta_j(spectral_product(f, g), j, part);
    out.residual -= out.term1;
    out.residual -= out.term2;
    out.residual -= out.term3;
    return out;
}

/// Multiplier profile export: one row per sampled radius with the psi_hat
/// value of every stored band (for plotting).
inline void export_partition_csv(const DyadicPartition& part, std::ostream& os,
                                 int samples = 512) {
    os << "radius";
    for (int j = part.j_lo(); j <= part.j_hi(); ++j) os << ",psi_j" << j;
    os << "\n";
    const double r_max = std::ldexp(1.0, part.j_hi() + 1);
    for (int i = 0; i <= samples; ++i) {
        const double r = r_max * i / samples;
        os << r;
        for (int j = part.j_lo(); j <= part.j_hi(); ++j)
            os << "," << lp_psi(r / std::ldexp(1.0, j));
        os << "\n";
    }
}

}  // namespace vort
