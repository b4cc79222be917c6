// Acceptance suite: one printed pass/fail line per criterion.

#include <iostream>

#include "test_helpers.hpp"

using namespace vt;

namespace {

void report(int num, const std::string& name, bool ok) {
    std::cout << "criterion " << (num < 10 ? "0" : "") << num << " ["
              << (ok ? "pass" : "FAIL") << "] " << name << std::endl;
    CHECK(ok);
}

std::string config_path(const std::string& name) {
    return std::string(VORT_CONFIG_DIR) + "/" + name;
}

struct SmallDataRun {
    ExperimentConfig cfg;
    DyadicPartition part;
    std::vector<MonitorRecord> records;

    explicit SmallDataRun(const ExperimentConfig& c)
        : cfg(c), part(c.grid()) {
        TrajectoryMonitor mon(cfg, part);
        SpectralField w0 = random_divfree_field(cfg.grid(), cfg.initial.seed,
                                                cfg.initial.spectrum_slope,
                                                cfg.initial.amplitude, cfg.initial.peak_band);
        run(w0, cfg.solver, std::ref(mon));
        records = mon.records();
    }
};

const SmallDataRun& small_data_run() {
    static SmallDataRun run_once(load_config(config_path("small_data.json")));
    return run_once;
}

}  // namespace

TEST_CASE("01 Littlewood-Paley reconstruction") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SpectralField f = random_field(g, 1000 + seed, 3);
        LPDecomposition dec = decompose(f, part);
        ok = ok && rel_diff(dec.reconstruct(), f) <= 1e-10;
    }
    report(1, "Littlewood-Paley reconstruction exact on 20 random dealiased fields", ok);
}

TEST_CASE("02 quasi-orthogonality of dyadic blocks") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SpectralField f = random_field(g, 1100 + seed);
        const double scale = f.coeff_norm();
        for (int p = part.j_lo(); p <= part.j_hi(); ++p)
            for (int q = part.j_lo(); q <= part.j_hi(); ++q)
                if (std::abs(p - q) >= 2)
                    ok = ok && delta_j(delta_j(f, q, part), p, part).coeff_norm() <= 1e-10 * scale;
        for (int q = part.j_lo() + 2; q <= part.j_max(); ++q) {
            SpectralField block =
                spectral_product(s_j(f, q - 2, part), delta_j(f, q, part));
            for (int p = part.j_lo(); p <= part.j_hi(); ++p)
                if (std::abs(p - q) >= 4)
                    ok = ok && delta_j(block, p, part).coeff_norm() <= 1e-10 * scale;
        }
    }
    report(2, "quasi-orthogonality: band and paraproduct block supports", ok);
}

TEST_CASE("03 Bernstein exactness on single shells") {
    GridSpec g = grid32();
    bool ok = true;
    for (int j : {1, 2, 3}) {
        SpectralField shell = shell_field(g, j);
        const double lambda = std::ldexp(1.0, j);
        for (double s : {-1.0, 1.0, 2.0})
            for (double p : {2.0, 4.0, kInf}) {
                FunctionalReport r = check_bernstein(shell, s, p, lambda, 0.5, 2.0);
                ok = ok && std::abs(r.ratio - 1.0) <= 1e-10;
            }
    }
    report(3, "Bernstein ratio = 1 on shells for s in {-1,1,2}, p in {2,4,inf}", ok);
}

TEST_CASE("04 Bony paraproduct identity") {
    GridSpec g = grid32();
    DyadicPartition part(g);
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SpectralField f = random_meanfree_field(g, 1200 + 2 * seed);
        SpectralField h = random_meanfree_field(g, 1201 + 2 * seed);
        ParaproductSplit split = paraproduct_split(f, h, part);
        SpectralField sum = split.pi_fg + split.pi_gf + split.remainder;
        ok = ok && rel_diff(sum, spectral_product(f, h)) <= 1e-9;
    }
    report(4, "Bony identity pi(f,g) + pi(g,f) + R = dealias(fg) on 20 pairs", ok);
}

TEST_CASE("05 duality-map contract") {
    GridSpec g = grid32();
    bool ok = true;
    for (double p : {2.0, 3.0, 4.0})
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            PhysicalField x = dft_inverse(random_field(g, 1300 + seed, 3));
            PhysicalField gx = duality_map(x, p);
            const double np = lp_norm(x, p);
            ok = ok && rel_err(inner_product(x, gx), np * np) <= 1e-9;
            ok = ok && rel_err(lp_norm(gx, p / (p - 1.0)), np) <= 1e-9;
        }
    report(5, "duality map: <x,G(x)> = ||x||_p^2 and ||G(x)||_p' = ||x||_p, p in {2,3,4}", ok);
}

TEST_CASE("06 Laplacian pairing identity at p = 2") {
    GridSpec g = grid32();
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        PhysicalField w = dft_inverse(random_meanfree_field(g, 1400 + seed, 3));
        FunctionalReport r = check_lemma_2_5(w, 2.0);
        ok = ok && rel_err(r.lhs, r.rhs) <= 1e-8;
    }
    report(6, "-<w, Lap w> = Q_2(w) on 20 fields", ok);
}

TEST_CASE("07 Biot-Savart inversion and p = 2 Calderon-Zygmund") {
    GridSpec g = grid32();
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SpectralField w = random_divfree_field(g, 1500 + seed, 0.0, 1.0, 2);
        ok = ok && rel_diff(curl(biot_savart(w)), w) <= 1e-10;
        ok = ok && std::abs(check_cz_bound(w, 2.0).ratio - 1.0) <= 1e-10;
    }
    report(7, "curl(biot_savart(w)) = w and ||grad u||_2 = ||w||_2", ok);
}

TEST_CASE("08 advective and conservative nonlinear forms agree") {
    GridSpec g = grid32();
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SpectralField u = random_divfree_field(g, 1600 + 2 * seed, 0.0, 1.0, 1);
        SpectralField w = random_divfree_field(g, 1601 + 2 * seed, 0.0, 1.0, 2);
        SpectralField adv = nonlinear_term(u, w, NonlinearForm::advective);
        SpectralField con = nonlinear_term(u, w, NonlinearForm::conservative);
        ok = ok && rel_diff(adv, con) <= 1e-9;
    }
    report(8, "nonlinear term: advective = conservative on 20 div-free pairs", ok);
}

TEST_CASE("09 solver order and linear decay") {
    GridSpec g = grid32();
    SpectralField w0 = taylor_green_vorticity(g, 1.0);
    auto solve = [&](double dt) {
        SolverConfig cfg;
        cfg.nu = 0.1;
        cfg.dt = dt;
        cfg.t_end = 0.5;
        return run(w0, cfg).omega_hat;
    };
    SpectralField a = solve(0.05), b = solve(0.025), c = solve(0.0125);
    const double ratio = (a - b).coeff_norm() / (b - c).coeff_norm();
    bool ok = ratio >= 12.0 && ratio <= 20.0;

    PhysicalField wp = sample_field(g, 3, [](int comp, const std::array<double, 3>& x) {
        return comp == 1 ? 1e-6 * std::cos(x[2]) : 0.0;
    });
    SpectralField mode = dft_forward(wp);
    SolverConfig cfg;
    cfg.nu = 0.1;
    cfg.dt = 0.01;
    cfg.t_end = 0.5;
    SolverState fin = run(mode, cfg);
    const double want = std::exp(-cfg.nu * cfg.t_end) * l2_norm_spectral(mode);
    ok = ok && rel_err(l2_norm_spectral(fin.omega_hat), want) <= 1e-4;
    report(9, "IF-RK4: step-halving ratio 16 +- 25% and exact heat decay", ok);
}

TEST_CASE("10 L^p Lyapunov monitor on the bundled small-data config") {
    const SmallDataRun& run = small_data_run();
    bool ok = run.records.size() >= 10;
    for (std::size_t pi = 0; pi < run.cfg.p_list.size(); ++pi) {
        LpMonitorReport rep = monitor_lp(run.records, run.cfg, pi);
        for (std::size_t i = 1; i < rep.norm_p.size(); ++i)
            ok = ok && rep.norm_p[i] < rep.norm_p[i - 1];  // strictly decreasing
        ok = ok && rep.fit_C >= 0.0 && rep.fit_K >= 0.0 && rep.fit_residual <= 0.10;
        for (double um : rep.u_m) ok = ok && rep.fit_K * um < run.cfg.solver.nu / 2.0;
    }
    report(10, "Lyapunov in L^p: ||w||_p strictly decreasing, fit residual <= 10%", ok);
}

TEST_CASE("11 Besov Lyapunov monitor on the same run") {
    const SmallDataRun& run = small_data_run();
    BesovMonitorReport rep = monitor_besov(run.records, run.cfg, 0);
    bool ok = true;
    for (std::size_t i = 1; i < rep.norm.size(); ++i) ok = ok && rep.norm[i] < rep.norm[i - 1];
    ok = ok && std::isfinite(rep.sup_eps1) && std::isfinite(rep.sup_eps2);
    std::cout << "  sup_t eps1 = " << fmt_double(rep.sup_eps1)
              << ", sup_t eps2 = " << fmt_double(rep.sup_eps2) << "\n";
    report(11, "Lyapunov in B^{1/2,2}_2: norm strictly decreasing (eps1/eps2 above)", ok);
}

TEST_CASE("12 local dissipativity sweep") {
    ExperimentConfig cfg = load_config(config_path("dissipativity.json"));
    DissipativityReport rep = dissipativity_experiment(cfg);
    bool ok = rep.amplitudes.size() >= 2;
    // violation fraction nonincreasing as amplitude decreases (sorted descending)
    for (std::size_t i = 1; i < rep.violation_fraction.size(); ++i)
        ok = ok && rep.violation_fraction[i] <= rep.violation_fraction[i - 1] + 1e-15;
    // smallest amplitude scale: every nondegenerate pairing has lhs <= 0
    const double smallest = rep.amplitudes.back();
    int total = 0, good = 0;
    for (const auto& s : rep.samples) {
        if (s.amplitude != smallest || s.pairing.base.degenerate) continue;
        ++total;
        if (s.pairing.base.lhs <= 0.0) ++good;
    }
    ok = ok && total == 200 && good == total;  // 100 pairs x p in {2,4}
    report(12, "dissipativity pairing <= 0 in " + std::to_string(good) + "/" +
                   std::to_string(total) + " small-scale samples, fraction monotone", ok);
}

TEST_CASE("13 determinism of bundled-config outputs") {
    const SmallDataRun& first = small_data_run();
    SmallDataRun second(first.cfg);
    bool ok = records_csv(first.records, first.cfg, first.part) ==
              records_csv(second.records, second.cfg, second.part);
    ExperimentConfig lcfg = load_config(config_path("lemmas.json"));
    ok = ok && lemma_suite(lcfg).csv() == lemma_suite(lcfg).csv();
    report(13, "re-running bundled configs reproduces CSV outputs byte-for-byte", ok);
}
