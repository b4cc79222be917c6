// Command-line driver: runs trajectories, evaluates the tracked
// inequalities along them, and emits CSV/JSON/SVG artifacts.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "vort/vort.hpp"

namespace fs = std::filesystem;
using namespace vort;

namespace {

SpectralField load_spectral(const std::string& path) {
    LoadedField lf = load_field(path);
    return lf.spectral ? lf.spectral_field : dft_forward(lf.physical);
}

SpectralField initial_field(const ExperimentConfig& cfg) {
    return random_divfree_field(cfg.grid(), cfg.initial.seed, cfg.initial.spectrum_slope,
                                cfg.initial.amplitude, cfg.initial.peak_band);
}

std::string out_path(const ExperimentConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.output_dir);
    return (fs::path(cfg.output_dir) / name).string();
}

struct TrajectoryResult {
    ExperimentConfig cfg;
    DyadicPartition part;
    TrajectoryMonitor monitor;
    SolverState final_state;
    std::uint64_t input_hash = 0;
};

TrajectoryResult run_trajectory(const std::string& config_path) {
    ExperimentConfig cfg = load_config(config_path);
    DyadicPartition part(cfg.grid());
    TrajectoryResult res{cfg, part, TrajectoryMonitor(cfg, part), SolverState{}, 0};
    SpectralField omega0 = initial_field(cfg);
    // content hash of the actual initial data bytes
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& c : omega0.components)
        h = fnv1a(c.data(), c.size() * sizeof(Complex), h);
    res.input_hash = h;
    res.final_state = run(omega0, cfg.solver, std::ref(res.monitor));
    return res;
}

Json base_summary(const TrajectoryResult& res) {
    Json j;
    j["config_hash"] = hash_hex(res.cfg.config_hash());
    j["input_hash"] = hash_hex(res.input_hash);
    j["records"] = res.monitor.records().size();
    j["t_final"] = res.final_state.t;
    j["steps"] = res.final_state.step_index;
    return j;
}

int cmd_decompose(const std::string& field_path, const std::string& out_prefix) {
    SpectralField f = load_spectral(field_path);
    DyadicPartition part(f.grid);
    LPDecomposition dec = decompose(f, part);
    for (const auto& [j, band] : dec.bands)
        save_field(band, out_prefix + "_j" + std::to_string(j) + ".vfld");
    save_field(dec.residual_low, out_prefix + "_residual.vfld");
    std::ofstream csv(out_prefix + "_multipliers.csv");
    export_partition_csv(part, csv);
    std::cout << "bands " << part.j_lo() << ".." << part.j_hi() << " (resolvable " << part.j_min()
              << ".." << part.j_max() << ")\n";
    return 0;
}

int cmd_norm(const std::string& field_path, const std::string& besov_spec, double lp_p,
             double qp_p) {
    SpectralField f = load_spectral(field_path);
    if (!besov_spec.empty()) {
        BesovParams bp;
        if (std::sscanf(besov_spec.c_str(), "%lf,%lf,%lf", &bp.s, &bp.p, &bp.q) != 3)
            throw std::invalid_argument("--besov expects s,p,q");
        DyadicPartition part(f.grid);
        std::cout << fmt_double(besov_norm(f, bp, part)) << "\n";
    } else if (qp_p > 0.0) {
        std::cout << fmt_double(q_p(dft_inverse(f), qp_p)) << "\n";
    } else {
        std::cout << fmt_double(lp_norm(dft_inverse(f), lp_p)) << "\n";
    }
    return 0;
}

int cmd_solve(const std::string& config_path) {
    TrajectoryResult res = run_trajectory(config_path);
    save_text(out_path(res.cfg, "records.csv"),
              records_csv(res.monitor.records(), res.cfg, res.part));
    save_field(res.final_state.omega_hat, out_path(res.cfg, "final.vfld"));
    Json sidecar;
    sidecar["t"] = res.final_state.t;
    sidecar["step_index"] = res.final_state.step_index;
    sidecar["config_hash"] = hash_hex(res.cfg.config_hash());
    save_text(out_path(res.cfg, "final.json"), sidecar.dump(2) + "\n");
    Json summary = base_summary(res);
    save_text(out_path(res.cfg, "solve_summary.json"), summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_monitor_lp(const std::string& config_path, double p_want, int m_want) {
    TrajectoryResult res = run_trajectory(config_path);
    if (m_want > 0) res.cfg.m = m_want;
    Json summary = base_summary(res);
    summary["reports"] = Json::array();
    for (std::size_t i = 0; i < res.cfg.p_list.size(); ++i) {
        if (p_want > 0.0 && res.cfg.p_list[i] != p_want) continue;
        LpMonitorReport rep = monitor_lp(res.monitor.records(), res.cfg, i);
        const std::string tag = "monitor_lp_p" + fmt_double(rep.p);
        save_text(out_path(res.cfg, tag + ".csv"), rep.csv());
        Json jr;
        jr["p"] = rep.p;
        jr["m"] = rep.m;
        jr["monotone"] = rep.monotone;
        jr["fit_C"] = rep.fit_C;
        jr["fit_K"] = rep.fit_K;
        jr["fit_residual"] = rep.fit_residual;
        summary["reports"].push_back(jr);
    }
    save_text(out_path(res.cfg, "monitor_lp_summary.json"), summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_monitor_besov(const std::string& config_path, const std::string& besov_spec) {
    TrajectoryResult res = run_trajectory(config_path);
    Json summary = base_summary(res);
    summary["reports"] = Json::array();
    BesovParams want{0.0, 0.0, 0.0};
    const bool filter =
        !besov_spec.empty() &&
        std::sscanf(besov_spec.c_str(), "%lf,%lf,%lf", &want.s, &want.p, &want.q) == 3;
    for (std::size_t i = 0; i < res.cfg.besov_list.size(); ++i) {
        const auto& bp = res.cfg.besov_list[i];
        if (filter && (bp.s != want.s || bp.p != want.p || bp.q != want.q)) continue;
        BesovMonitorReport rep = monitor_besov(res.monitor.records(), res.cfg, i);
        const std::string tag = "monitor_besov_s" + fmt_double(bp.s) + "_p" + fmt_double(bp.p) +
                                "_q" + fmt_double(bp.q);
        save_text(out_path(res.cfg, tag + ".csv"), rep.csv(res.part));
        Json jr;
        jr["s"] = bp.s;
        jr["p"] = bp.p;
        jr["q"] = bp.q;
        jr["monotone"] = rep.monotone;
        jr["sup_eps1"] = rep.sup_eps1;
        jr["sup_eps2"] = rep.sup_eps2;
        summary["reports"].push_back(jr);
    }
    save_text(out_path(res.cfg, "monitor_besov_summary.json"), summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_dissipativity(const std::string& config_path) {
    ExperimentConfig cfg = load_config(config_path);
    DissipativityReport rep = dissipativity_experiment(cfg);
    save_text(out_path(cfg, "dissipativity_samples.csv"), rep.csv());
    Json summary;
    summary["config_hash"] = hash_hex(cfg.config_hash());
    summary["amplitudes"] = rep.amplitudes;
    summary["violation_fraction"] = rep.violation_fraction;
    summary["smallest_violating_amplitude"] = rep.smallest_violating_amplitude;
    save_text(out_path(cfg, "dissipativity_summary.json"), summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_lemmas(const std::string& config_path) {
    ExperimentConfig cfg = load_config(config_path);
    LemmaSuiteReport rep = lemma_suite(cfg);
    save_text(out_path(cfg, "lemma_suite.csv"), rep.csv());
    Json summary;
    summary["config_hash"] = hash_hex(cfg.config_hash());
    summary["rows"] = rep.rows.size();
    summary["all_exact_pass"] = rep.all_exact_pass;
    for (const auto& [name, sup] : rep.ratio_sup()) summary["ratio_sup"][name] = sup;
    save_text(out_path(cfg, "lemma_suite_summary.json"), summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_plot(const std::string& csv_path, const std::string& out) {
    std::ifstream is(csv_path);
    if (!is) throw std::runtime_error("cannot open " + csv_path);
    CsvTable table = parse_csv(is);
    save_text(out, plot_csv_svg(table));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-spectral vorticity toolkit"};
    app.require_subcommand(1);

    std::string field_path, config_path, out_prefix = "decomp", besov_spec, csv_path,
                svg_out = "plot.svg";
    double lp_p = 2.0, qp_p = 0.0, p_want = 0.0;
    int m_want = 0;

    auto* dec = app.add_subcommand("decompose", "Littlewood-Paley decomposition of a stored field");
    dec->add_option("field", field_path)->required();
    dec->add_option("--out", out_prefix);

    auto* nrm = app.add_subcommand("norm", "Evaluate a norm of a stored field");
    nrm->add_option("field", field_path)->required();
    nrm->add_option("--besov", besov_spec, "s,p,q triple");
    nrm->add_option("--lp", lp_p);
    nrm->add_option("--qp", qp_p);

    auto* slv = app.add_subcommand("solve", "Integrate the vorticity equation");
    slv->add_option("config", config_path)->required();

    auto* mlp = app.add_subcommand("monitor-lp", "Lyapunov monitor in L^p along a run");
    mlp->add_option("config", config_path)->required();
    mlp->add_option("--p", p_want);
    mlp->add_option("--m", m_want);

    auto* mbe = app.add_subcommand("monitor-besov", "Lyapunov monitor in Besov norm along a run");
    mbe->add_option("config", config_path)->required();
    mbe->add_option("--besov", besov_spec, "restrict to one s,p,q triple");

    auto* dis = app.add_subcommand("dissipativity", "Monte-Carlo dissipativity study");
    dis->add_option("config", config_path)->required();

    auto* lem = app.add_subcommand("lemmas", "Run the inequality checker suite over a corpus");
    lem->add_option("config", config_path)->required();

    auto* plt = app.add_subcommand("plot", "Render a CSV as an SVG line plot");
    plt->add_option("csv", csv_path)->required();
    plt->add_option("--out", svg_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) return cmd_decompose(field_path, out_prefix);
        if (nrm->parsed()) return cmd_norm(field_path, besov_spec, lp_p, qp_p);
        if (slv->parsed()) return cmd_solve(config_path);
        if (mlp->parsed()) return cmd_monitor_lp(config_path, p_want, m_want);
        if (mbe->parsed()) return cmd_monitor_besov(config_path, besov_spec);
        if (dis->parsed()) return cmd_dissipativity(config_path);
        if (lem->parsed()) return cmd_lemmas(config_path);
        if (plt->parsed()) return cmd_plot(csv_path, svg_out);
    } catch (const SolverAbort& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
