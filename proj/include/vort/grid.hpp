#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vort {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

/// Periodic-box discretization: n^dim lattice on a box of side box_length.
/// Per-axis integer wavenumbers run over {-n/2, ..., n/2-1}; physical
/// wavenumbers are integer multiples of k_unit = 2*pi/box_length.
struct GridSpec {
    int dim = 3;
    int n = 32;
    double box_length = 2.0 * kPi;
    double k_unit = 1.0;
    int j_min = 0;      // smallest dyadic band with 2^j >= k_unit
    int j_max = 0;      // largest band with 2^j <= (n/3)*k_unit
    int j_cover = 0;    // bands up to here cover the whole lattice

    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(n);
        return s;
    }

    double cell_volume() const {
        return std::pow(box_length / n, dim);
    }

    double volume() const { return std::pow(box_length, dim); }

    /// Integer wavenumber along one axis from a per-axis lattice index.
    int k_int(int idx) const { return idx < n / 2 ? idx : idx - n; }

    /// Per-axis lattice indices of a flat (row-major) index.
    std::array<int, 3> indices(std::size_t flat) const {
        std::array<int, 3> ix{0, 0, 0};
        for (int d = dim - 1; d >= 0; --d) {
            ix[static_cast<std::size_t>(d)] = static_cast<int>(flat % n);
            flat /= static_cast<std::size_t>(n);
        }
        return ix;
    }

    /// Physical wavenumber vector of a flat index.
    std::array<double, 3> wavevector(std::size_t flat) const {
        auto ix = indices(flat);
        std::array<double, 3> k{0.0, 0.0, 0.0};
        for (int d = 0; d < dim; ++d)
            k[static_cast<std::size_t>(d)] = k_int(ix[static_cast<std::size_t>(d)]) * k_unit;
        return k;
    }

    double k_mag2(std::size_t flat) const {
        auto k = wavevector(flat);
        return k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    }

    /// Per-axis dealiasing cutoff of the 2/3 rule, in physical wavenumber units.
    double dealias_cutoff() const { return (n / 3.0) * k_unit; }

    bool operator==(const GridSpec& o) const {
        return dim == o.dim && n == o.n && box_length == o.box_length;
    }
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Construct a validated GridSpec; rejects non-power-of-two n, dim outside
/// {2,3} and nonpositive box lengths.
inline GridSpec make_grid(int dim, int n, double box_length) {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("make_grid: dim must be 2 or 3, got " + std::to_string(dim));
    if (!is_power_of_two(n) || n < 8)
        throw std::invalid_argument("make_grid: n must be a power of two >= 8, got " + std::to_string(n));
    if (!(box_length > 0.0))
        throw std::invalid_argument("make_grid: box_length must be positive");

    GridSpec g;
    g.dim = dim;
    g.n = n;
    g.box_length = box_length;
    g.k_unit = 2.0 * kPi / box_length;
    g.j_min = static_cast<int>(std::ceil(std::log2(g.k_unit) - 1e-12));
    g.j_max = static_cast<int>(std::floor(std::log2(g.dealias_cutoff()) + 1e-12));
    // Largest wavenumber magnitude on the lattice is sqrt(dim)*(n/2)*k_unit;
    // bands up to j_cover make the dyadic family sum to 1 on every mode.
    const double k_max = std::sqrt(static_cast<double>(dim)) * (n / 2.0) * g.k_unit;
    g.j_cover = static_cast<int>(std::ceil(std::log2(k_max) + 1e-12));
    if (g.j_max < g.j_min + 1)
        throw std::invalid_argument("make_grid: grid too coarse to host two dyadic bands");
    return g;
}

/// Real m-component field sampled on the lattice, row-major.
struct PhysicalField {
    GridSpec grid;
    std::vector<std::vector<double>> components;

    PhysicalField() = default;
    explicit PhysicalField(const GridSpec& g, int ncomp = -1) : grid(g) {
        if (ncomp < 0) ncomp = g.dim;
        components.assign(static_cast<std::size_t>(ncomp), std::vector<double>(g.size(), 0.0));
    }

    int ncomp() const { return static_cast<int>(components.size()); }

    bool finite() const {
        for (const auto& c : components)
            for (double v : c)
                if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Complex m-component field over the wavenumber lattice, same flat layout.
struct SpectralField {
    GridSpec grid;
    std::vector<std::vector<Complex>> components;

    SpectralField() = default;
    explicit SpectralField(const GridSpec& g, int ncomp = -1) : grid(g) {
        if (ncomp < 0) ncomp = g.dim;
        components.assign(static_cast<std::size_t>(ncomp), std::vector<Complex>(g.size(), Complex{0.0, 0.0}));
    }

    int ncomp() const { return static_cast<int>(components.size()); }

    SpectralField& operator+=(const SpectralField& o) {
        for (std::size_t c = 0; c < components.size(); ++c)
            for (std::size_t i = 0; i < components[c].size(); ++i)
                components[c][i] += o.components[c][i];
        return *this;
    }

    SpectralField& operator-=(const SpectralField& o) {
        for (std::size_t c = 0; c < components.size(); ++c)
            for (std::size_t i = 0; i < components[c].size(); ++i)
                components[c][i] -= o.components[c][i];
        return *this;
    }

    SpectralField& operator*=(double a) {
        for (auto& c : components)
            for (auto& v : c) v *= a;
        return *this;
    }

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double a, SpectralField f) { return f *= a; }

    /// Max |coefficient| over all modes and components.
    double max_abs() const {
        double m = 0.0;
        for (const auto& c : components)
            for (const auto& v : c) m = std::max(m, std::abs(v));
        return m;
    }

    /// l2 norm of the coefficient vector (not a physical norm).
    double coeff_norm() const {
        double s = 0.0;
        for (const auto& c : components)
            for (const auto& v : c) s += std::norm(v);
        return std::sqrt(s);
    }
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (!(a == b)) throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

}  // namespace vort
