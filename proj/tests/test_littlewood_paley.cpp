#include "test_helpers.hpp"

using namespace vt;

TEST_CASE("chi cutoff profile") {
    CHECK(lp_chi(0.0) == 1.0);
    CHECK(lp_chi(1.0) == 1.0);
    CHECK(lp_chi(2.0) == 0.0);
    CHECK(lp_chi(3.0) == 0.0);
    CHECK(lp_chi(1.5) > 0.0);
    CHECK(lp_chi(1.5) < 1.0);
    // monotone nonincreasing on a dense radius sweep
    double prev = 1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double r = 3.0 * i / 1000.0;
        const double v = lp_chi(r);
        CHECK(v <= prev + 1e-15);
        prev = v;
    }
}

TEST_CASE("psi annulus profile and dyadic partition of unity") {
    CHECK(lp_psi(1.0) == 1.0);
    CHECK(lp_psi(0.49) == 0.0);
    CHECK(lp_psi(0.5) == 0.0);
    CHECK(lp_psi(2.0) == 0.0);
    CHECK(lp_psi(2.5) == 0.0);
    // sum_j psi(r / 2^j) = 1 on radii covered by the dyadic family
    for (int i = 0; i <= 1000; ++i) {
        const double r = 1.0 + 127.0 * i / 1000.0;
        double s = 0.0;
        for (int j = -2; j <= 9; ++j) s += lp_psi(r / std::ldexp(1.0, j));
        CHECK(std::abs(s - 1.0) < 1e-12);
    }
}

TEST_CASE("partition band range on the 32^3 grid") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    CHECK(part.j_lo() == 0);
    CHECK(part.j_min() == 0);
    CHECK(part.j_max() == 3);
    CHECK(part.j_hi() == g.j_cover);
    // stored range covers the lattice corner
    CHECK(std::ldexp(1.0, part.j_hi()) >= std::sqrt(3.0) * (g.n / 2.0) * g.k_unit);
    CHECK_THROWS_AS(part.psi_multiplier(part.j_lo() - 1), std::invalid_argument);
    CHECK_THROWS_AS(part.psi_multiplier(part.j_hi() + 1), std::invalid_argument);
}

TEST_CASE("delta_j is exact on single-shell probes") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    SpectralField shell = shell_field(g, 2);  // |k| = 4
    CHECK(rel_diff(delta_j(shell, 2, part), shell) < 1e-14);
    CHECK(delta_j(shell, 1, part).max_abs() < 1e-14);
    CHECK(delta_j(shell, 3, part).max_abs() < 1e-14);
    CHECK(delta_j(shell, 4, part).max_abs() == 0.0);
}

TEST_CASE("s_j low-pass: endpoints and telescoping") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    SpectralField f = random_field(g, 21);
    f.components[0][0] = Complex{0.7, 0.0};

    // S_{j_lo} keeps only the mean
    SpectralField low = s_j(f, part.j_lo(), part);
    CHECK(std::abs(low.components[0][0] - Complex{0.7, 0.0}) < 1e-15);
    low.components[0][0] = Complex{0.0, 0.0};
    CHECK(low.max_abs() < 1e-14);

    // S_{j_hi + 1} is the identity
    CHECK(rel_diff(s_j(f, part.j_hi() + 1, part), f) < 1e-14);

    // S_{j+1} - S_j = Delta_j at every stored level (relative to the whole
    // field: the highest bands carry next to no mass on a dealiased input)
    for (int j = part.j_lo(); j <= part.j_hi(); ++j) {
        SpectralField diff = s_j(f, j + 1, part) - s_j(f, j, part) - delta_j(f, j, part);
        CHECK(diff.coeff_norm() < 1e-12 * f.coeff_norm());
    }

    CHECK_THROWS_AS(s_j(f, part.j_lo() - 1, part), std::invalid_argument);
    CHECK_THROWS_AS(s_j(f, part.j_hi() + 2, part), std::invalid_argument);
}

TEST_CASE("decomposition reconstructs every dealiased field exactly") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SpectralField f = random_field(g, 300 + seed, 3);
        f.components[1][0] = Complex{-1.3, 0.0};  // nonzero mean as well
        LPDecomposition dec = decompose(f, part);
        CHECK(rel_diff(dec.reconstruct(), f) < 1e-12);
        CHECK(static_cast<int>(dec.bands.size()) == part.j_hi() - part.j_lo() + 1);
    }
}

TEST_CASE("quasi-orthogonality of bands") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        SpectralField f = random_field(g, 400 + seed);
        const double scale = f.coeff_norm();
        for (int p = part.j_lo(); p <= part.j_hi(); ++p)
            for (int q = part.j_lo(); q <= part.j_hi(); ++q) {
                if (std::abs(p - q) < 2) continue;
                CHECK(delta_j(delta_j(f, q, part), p, part).coeff_norm() < 1e-12 * scale);
            }
    }
}

TEST_CASE("quasi-orthogonality of paraproduct blocks") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    SpectralField u = random_field(g, 31);
    const double scale = u.coeff_norm();
    for (int q = part.j_lo() + 2; q <= part.j_max(); ++q) {
        SpectralField block = spectral_product(s_j(u, q - 2, part), delta_j(u, q, part));
        for (int p = part.j_lo(); p <= part.j_hi(); ++p) {
            if (std::abs(p - q) < 4) continue;
            CHECK(delta_j(block, p, part).coeff_norm() < 1e-10 * scale);
        }
    }
}

TEST_CASE("Bony splitting sums to the dealiased product") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        SpectralField f = random_meanfree_field(g, 500 + seed);
        SpectralField gg = random_meanfree_field(g, 600 + seed);
        ParaproductSplit split = paraproduct_split(f, gg, part);
        SpectralField sum = split.pi_fg + split.pi_gf + split.remainder;
        CHECK(rel_diff(sum, spectral_product(f, gg)) < 1e-10);
    }
}

TEST_CASE("paraproduct band bookkeeping is exact") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    SpectralField f = random_meanfree_field(g, 71);
    SpectralField gg = random_meanfree_field(g, 72);
    for (int j = part.j_min(); j <= part.j_max(); ++j) {
        ParaproductBand b = paraproduct_band(j, f, gg, part);
        SpectralField sum = b.term1 + b.term2 + b.term3 + b.residual;
        CHECK(rel_diff(sum, delta_j(spectral_product(f, gg), j, part)) < 1e-12);
    }
    CHECK_THROWS_AS(paraproduct_band(part.j_hi() + 1, f, gg, part), std::invalid_argument);
}

TEST_CASE("paraproduct band on separated shells: only the residual survives") {
    GridSpec g = grid32();
    // f at |k| = 2 (band 1), g at |k| = 8 (band 3): the (1,3) interaction is
    // neither a retained low-high term nor diagonal, so it lands in residual.
    SpectralField f = shell_field(g, 1);
    PhysicalField gp = sample_field(g, 1, [](int, const std::array<double, 3>& x) {
        return std::cos(8.0 * x[1]);
    });
    SpectralField gg = dft_forward(gp);
    DyadicPartition part(g);
    ParaproductBand b = paraproduct_band(3, f, gg, part);
    CHECK(b.term1.max_abs() < 1e-14);
    CHECK(b.term2.max_abs() < 1e-14);
    CHECK(b.term3.max_abs() < 1e-14);
    CHECK(b.residual.max_abs() > 1e-3);
}

TEST_CASE("partition multiplier export") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    std::ostringstream os;
    export_partition_csv(part, os, 16);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line.rfind("radius,psi_j0", 0) == 0);
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 17);
}
