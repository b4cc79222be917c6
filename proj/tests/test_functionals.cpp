#include "test_helpers.hpp"

using namespace vt;

namespace {

PhysicalField sin_x1(const GridSpec& g, double freq = 1.0) {
    return sample_field(g, 1, [freq](int, const std::array<double, 3>& x) {
        return std::sin(freq * x[0]);
    });
}

}  // namespace

TEST_CASE("lp_norm analytic values") {
    GridSpec g = grid32();
    const double vol = std::pow(2.0 * kPi, 3.0);
    PhysicalField f = sin_x1(g);
    CHECK(rel_err(lp_norm(f, 2.0), std::sqrt(0.5 * vol)) < 1e-12);
    CHECK(rel_err(lp_norm(f, 4.0), std::pow(0.375 * vol, 0.25)) < 1e-12);
    CHECK(rel_err(lp_norm(f, kInf), 1.0) < 1e-12);  // grid hits x = pi/2

    // Euclidean magnitude across components
    PhysicalField v = sample_field(g, 2, [](int c, const std::array<double, 3>&) {
        return c == 0 ? 3.0 : 4.0;
    });
    CHECK(rel_err(lp_norm(v, 3.0), 5.0 * std::pow(vol, 1.0 / 3.0)) < 1e-12);

    CHECK_THROWS_AS(lp_norm(f, 0.5), std::invalid_argument);
}

TEST_CASE("q_p analytic values") {
    GridSpec g = grid32();
    PhysicalField f = sin_x1(g);
    // Q_2 = int cos^2 = (2 pi)^3 / 2 = 4 pi^3
    CHECK(rel_err(q_p(f, 2.0), 4.0 * std::pow(kPi, 3.0)) < 1e-12);
    // Q_4 = int sin^2 cos^2 = (2 pi)^3 / 8 = pi^3
    CHECK(rel_err(q_p(f, 4.0), std::pow(kPi, 3.0)) < 1e-12);
    CHECK_THROWS_AS(q_p(f, 1.5), std::invalid_argument);

    // homogeneity: Q_p(c f) = c^p Q_p(f)
    PhysicalField f3 = f;
    for (auto& v : f3.components[0]) v *= 3.0;
    CHECK(rel_err(q_p(f3, 4.0), 81.0 * q_p(f, 4.0)) < 1e-12);
}

TEST_CASE("duality map contract") {
    GridSpec g = grid32();
    for (double p : {2.0, 3.0, 4.0}) {
        PhysicalField x = dft_inverse(random_field(g, 40 + static_cast<std::uint64_t>(p), 3));
        bool degen = true;
        PhysicalField gx = duality_map(x, p, &degen);
        CHECK(!degen);
        const double np = lp_norm(x, p);
        CHECK(rel_err(inner_product(x, gx), np * np) < 1e-10);
        CHECK(rel_err(lp_norm(gx, p / (p - 1.0)), np) < 1e-10);
    }
    // p = 2 is the identity
    PhysicalField x = dft_inverse(random_field(g, 44, 3));
    CHECK(rel_diff_phys(duality_map(x, 2.0), x) < 1e-12);

    PhysicalField zero(g, 3);
    bool degen = false;
    PhysicalField gz = duality_map(zero, 3.0, &degen);
    CHECK(degen);
    CHECK(lp_norm(gz, 2.0) == 0.0);
    CHECK_THROWS_AS(duality_map(x, 1.5), std::invalid_argument);
}

TEST_CASE("energy functional") {
    GridSpec g = grid32();
    PhysicalField x = dft_inverse(random_field(g, 45, 3));
    const double n2 = lp_norm(x, 2.0);
    CHECK(rel_err(energy(x), 0.5 * n2 * n2) < 1e-12);
}

TEST_CASE("lemma 2.5 pairing: exact at p = 2, scalar factor p - 1 at p = 4") {
    GridSpec g = grid32();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        PhysicalField w = dft_inverse(random_meanfree_field(g, 700 + seed, 3));
        FunctionalReport r = check_lemma_2_5(w, 2.0);
        CHECK(rel_err(r.lhs, r.rhs) < 1e-10);
        CHECK(r.satisfied);
        FunctionalReport r4 = check_lemma_2_5(w, 4.0);
        CHECK(r4.satisfied);
        CHECK(r4.ratio >= 1.0 - 1e-10);
    }
    // scalar sinusoid: -<|f|^2 f, Lap f> = 3 Q_4 exactly (trig-polynomial quadrature)
    PhysicalField f = sin_x1(g);
    FunctionalReport r = check_lemma_2_5(f, 4.0);
    CHECK(rel_err(r.ratio, 3.0) < 1e-12);
    CHECK_THROWS_AS(check_lemma_2_5(f, 1.0), std::invalid_argument);
}

TEST_CASE("lemma 2.6 ratio is finite and scale-invariant") {
    GridSpec g = grid32();
    PhysicalField w = dft_inverse(random_meanfree_field(g, 46, 3));
    FunctionalReport r = check_lemma_2_6(w, 2.0, 3);
    CHECK(r.satisfied);
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0.0);
    PhysicalField w2 = w;
    for (auto& c : w2.components)
        for (auto& v : c) v *= 7.0;
    // lhs and rhs are both 1-homogeneous at p = 2, so the ratio is invariant
    CHECK(rel_err(check_lemma_2_6(w2, 2.0, 3).ratio, r.ratio) < 1e-10);
    CHECK_THROWS_AS(check_lemma_2_6(w, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma_2_6(w, 2.0, 2), std::invalid_argument);
}

TEST_CASE("Bernstein ratio is exactly 1 on single shells") {
    GridSpec g = grid32();
    for (int j : {1, 2, 3}) {
        SpectralField shell = shell_field(g, j);
        const double lambda = std::ldexp(1.0, j);
        for (double s : {-1.0, 1.0, 2.0})
            for (double p : {2.0, 4.0, kInf}) {
                FunctionalReport r = check_bernstein(shell, s, p, lambda, 0.5, 2.0);
                CHECK(rel_err(r.ratio, 1.0) < 1e-10);
                CHECK(r.satisfied);
            }
    }
    // support violation is rejected
    SpectralField wide = random_meanfree_field(g, 47);
    CHECK_THROWS_AS(check_bernstein(wide, 1.0, 2.0, 2.0, 0.5, 2.0), std::invalid_argument);
    // ball variant records the ratio without a two-sided bound
    SpectralField low = shell_field(g, 1);
    FunctionalReport rb = check_bernstein(low, 1.0, 2.0, 4.0, 0.0, 0.0, false);
    CHECK(rb.check_name == "bernstein_ball");
    CHECK(rb.satisfied);
    CHECK(rel_err(rb.ratio, 0.5) < 1e-10);  // shell at lambda/2
}

TEST_CASE("Planchon ratio on sinusoids") {
    GridSpec g = grid32();
    FunctionalReport r1 = check_planchon(dft_forward(sin_x1(g)), 2.0);
    CHECK(rel_err(r1.ratio, 1.0) < 1e-10);
    FunctionalReport r2 = check_planchon(dft_forward(sin_x1(g, 2.0)), 2.0);
    CHECK(rel_err(r2.ratio, 0.25) < 1e-10);
    // support inside the unit ball is rejected
    SpectralField with_mean = random_field(g, 48);
    with_mean.components[0][0] = Complex{1.0, 0.0};
    CHECK_THROWS_AS(check_planchon(with_mean, 2.0), std::invalid_argument);
}

TEST_CASE("Besov norm: shell identity, homogeneity, mean rejection") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    SpectralField shell = shell_field(g, 2);
    for (double s : {-1.0, 0.5, 1.0})
        for (double q : {1.0, 2.0, kInf}) {
            BesovParams bp{s, 2.0, q};
            CHECK(rel_err(besov_norm(shell, bp, part),
                          std::pow(4.0, s) * lp_norm(shell, 2.0)) < 1e-12);
        }
    SpectralField f = random_meanfree_field(g, 49, 3);
    BesovParams bp{0.5, 2.0, 2.0};
    CHECK(rel_err(besov_norm(2.0 * f, bp, part), 2.0 * besov_norm(f, bp, part)) < 1e-12);

    SpectralField with_mean = f;
    with_mean.components[0][0] = Complex{1.0, 0.0};
    CHECK_THROWS_AS(besov_norm(with_mean, bp, part), std::invalid_argument);
    CHECK_THROWS_AS(besov_norm(f, BesovParams{0.0, 0.5, 2.0}, part), std::invalid_argument);
}

TEST_CASE("besov_sup_norm shell values") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    SpectralField shell = shell_field(g, 3);  // cos(8 x1), sup = 1
    CHECK(rel_err(besov_sup_norm(shell, 1.0, part), 1.0 / 8.0) < 1e-12);
    CHECK(rel_err(besov_sup_norm(shell, 2.0, part), 1.0 / 64.0) < 1e-12);
}

TEST_CASE("Besov equivalence check (s < 0)") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        SpectralField f = random_meanfree_field(g, 800 + seed, 3);
        FunctionalReport r = check_besov_equivalence(f, BesovParams{-1.0, 2.0, 2.0}, part);
        CHECK(r.satisfied);
        CHECK(r.ratio > 0.1);
        CHECK(r.ratio < 10.0);
    }
    SpectralField f = random_meanfree_field(g, 803);
    CHECK_THROWS_AS(check_besov_equivalence(f, BesovParams{0.5, 2.0, 2.0}, part),
                    std::invalid_argument);
}

TEST_CASE("embedding checks") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    SpectralField f = random_meanfree_field(g, 50, 3);
    // summability rule: ell^q monotone, ratio <= 1
    FunctionalReport rs =
        check_embedding(f, BesovParams{0.5, 2.0, 1.0}, BesovParams{0.5, 2.0, 2.0}, part);
    CHECK(rs.check_name == "embedding_summability");
    CHECK(rs.satisfied);
    CHECK(rs.ratio <= 1.0 + 1e-10);
    // scaling rule: s - d/p invariant, ratio recorded
    FunctionalReport rc =
        check_embedding(f, BesovParams{1.0, 2.0, 2.0}, BesovParams{0.25, 4.0, 2.0}, part);
    CHECK(rc.check_name == "embedding_scaling");
    CHECK(std::isfinite(rc.ratio));
    CHECK_THROWS_AS(
        check_embedding(f, BesovParams{1.0, 2.0, 2.0}, BesovParams{1.0, 4.0, 2.0}, part),
        std::invalid_argument);
}
