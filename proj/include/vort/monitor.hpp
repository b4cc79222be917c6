#pragma once

#include <algorithm>
#include <map>

#include "vort/io.hpp"
#include "vort/random_field.hpp"
#include "vort/solver.hpp"

namespace vort {

// ---------------------------------------------------------------------------
// Experiment configuration (JSON-backed)
// ---------------------------------------------------------------------------

struct InitialData {
    std::uint64_t seed = 1;
    double amplitude = 0.1;
    int peak_band = 1;
    double spectrum_slope = 0.0;
};

struct DissipativitySettings {
    int samples = 100;
    std::vector<double> amplitudes{1e-1, 1e-2, 1e-3};
    std::vector<double> p_list{2.0, 4.0};
    std::uint64_t seed = 7;
    int peak_band = 1;
};

struct LemmaSettings {
    int corpus_size = 50;
    std::uint64_t seed = 11;
};

struct ExperimentConfig {
    int dim = 3;
    int n = 32;
    double box_length = 2.0 * kPi;
    SolverConfig solver;
    InitialData initial;
    std::vector<double> p_list{2.0, 4.0};
    int m = 3;
    std::vector<BesovParams> besov_list;
    DissipativitySettings dissipativity;
    LemmaSettings lemmas;
    std::string output_dir = ".";
    std::string raw_json;  // canonical dump, used for the config hash

    std::uint64_t config_hash() const { return hash_string(raw_json); }

    GridSpec grid() const { return make_grid(dim, n, box_length); }
};

namespace detail {

template <typename T>
T json_get(const Json& j, const std::string& path, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const std::exception&) {
        throw std::runtime_error("config field " + path + "." + key + ": wrong type");
    }
}

}  // namespace detail

/// Parse and validate an experiment config; errors name the failing field.
inline ExperimentConfig parse_config(const Json& j) {
    ExperimentConfig cfg;
    using detail::json_get;
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        cfg.dim = json_get(g, "grid", "dim", cfg.dim);
        cfg.n = json_get(g, "grid", "n", cfg.n);
        cfg.box_length = json_get(g, "grid", "box_length", cfg.box_length);
    }
    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        cfg.solver.nu = json_get(s, "solver", "nu", cfg.solver.nu);
        if (s.contains("dt")) {
            if (s.at("dt").is_string()) {
                if (s.at("dt").get<std::string>() != "auto")
                    throw std::runtime_error("config field solver.dt: number or \"auto\"");
                cfg.solver.dt = 0.0;
            } else {
                cfg.solver.dt = s.at("dt").get<double>();
            }
        }
        cfg.solver.t_end = json_get(s, "solver", "t_end", cfg.solver.t_end);
        cfg.solver.cfl = json_get(s, "solver", "cfl", cfg.solver.cfl);
        cfg.solver.record_every = json_get(s, "solver", "record_every", cfg.solver.record_every);
        cfg.solver.validate();
    }
    if (j.contains("initial")) {
        const auto& s = j.at("initial");
        cfg.initial.seed = json_get<std::uint64_t>(s, "initial", "seed", cfg.initial.seed);
        cfg.initial.amplitude = json_get(s, "initial", "amplitude", cfg.initial.amplitude);
        cfg.initial.peak_band = json_get(s, "initial", "peak_band", cfg.initial.peak_band);
        cfg.initial.spectrum_slope = json_get(s, "initial", "spectrum_slope", cfg.initial.spectrum_slope);
    }
    if (j.contains("monitor")) {
        const auto& s = j.at("monitor");
        cfg.p_list = json_get(s, "monitor", "p_list", cfg.p_list);
        cfg.m = json_get(s, "monitor", "m", cfg.m);
        if (s.contains("besov")) {
            for (const auto& b : s.at("besov")) {
                BesovParams bp;
                bp.s = json_get(b, "monitor.besov", "s", 0.5);
                bp.p = json_get(b, "monitor.besov", "p", 2.0);
                bp.q = json_get(b, "monitor.besov", "q", 2.0);
                // hypotheses of the Besov Lyapunov statement
                if (!(bp.p >= 2.0 && bp.q >= 2.0))
                    throw std::runtime_error("config field monitor.besov: requires p, q >= 2");
                if (std::abs(bp.s - (3.0 / bp.p - 1.0)) > 1e-12)
                    throw std::runtime_error("config field monitor.besov: requires s = 3/p - 1");
                if (!(3.0 / bp.p + 2.0 / bp.q > 1.0))
                    throw std::runtime_error("config field monitor.besov: requires 3/p + 2/q > 1");
                cfg.besov_list.push_back(bp);
            }
        }
    }
    if (j.contains("dissipativity")) {
        const auto& s = j.at("dissipativity");
        cfg.dissipativity.samples = json_get(s, "dissipativity", "samples", cfg.dissipativity.samples);
        cfg.dissipativity.amplitudes = json_get(s, "dissipativity", "amplitudes", cfg.dissipativity.amplitudes);
        cfg.dissipativity.p_list = json_get(s, "dissipativity", "p_list", cfg.dissipativity.p_list);
        cfg.dissipativity.seed = json_get<std::uint64_t>(s, "dissipativity", "seed", cfg.dissipativity.seed);
        cfg.dissipativity.peak_band = json_get(s, "dissipativity", "peak_band", cfg.dissipativity.peak_band);
        if (cfg.dissipativity.samples < 1)
            throw std::runtime_error("config field dissipativity.samples: must be >= 1");
        if (cfg.dissipativity.amplitudes.empty())
            throw std::runtime_error("config field dissipativity.amplitudes: must be nonempty");
    }
    if (j.contains("lemmas")) {
        const auto& s = j.at("lemmas");
        cfg.lemmas.corpus_size = json_get(s, "lemmas", "corpus_size", cfg.lemmas.corpus_size);
        cfg.lemmas.seed = json_get<std::uint64_t>(s, "lemmas", "seed", cfg.lemmas.seed);
    }
    if (j.contains("output")) cfg.output_dir = json_get<std::string>(j.at("output"), "output", "dir", cfg.output_dir);
    cfg.raw_json = j.dump();
    (void)cfg.grid();  // validate grid parameters eagerly
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) { return parse_config(load_json(path)); }

// ---------------------------------------------------------------------------
// Trajectory monitoring
// ---------------------------------------------------------------------------

/// One time-step row of tracked functionals.
struct MonitorRecord {
    double t = 0.0;
    std::int64_t step_index = 0;
    std::vector<double> lp;          // ||w||_p per monitored p
    std::vector<double> lp_pow;      // ||w||_p^p
    std::vector<double> qp;          // Q_p(w)
    double u_m = 0.0;                // ||u||_m
    std::vector<double> besov;       // per configured Besov triple
    std::vector<double> band_norms;  // ||Delta_j w||_p, j in [j_min, j_max], p = band_p
    std::vector<double> band_pow;    // ||Delta_j w||_p^p
    std::vector<double> band_dissip; // nu p int |D_j w|^{p-2} |grad D_j w|^2
    std::vector<double> band_source; // p int |D_j w|^{p-1} |D_j F(u,w)|
    double eps1 = 0.0;               // sup_j 2^{-j} ||Delta_j u||_inf
    double eps2 = 0.0;               // sup_j 2^{-2j} ||Delta_j w||_inf
};

/// Solver callback that evaluates all monitored functionals per record.
class TrajectoryMonitor {
public:
    TrajectoryMonitor(const ExperimentConfig& cfg, const DyadicPartition& part)
        : cfg_(cfg), part_(part) {
        band_p_ = cfg.besov_list.empty() ? 2.0 : cfg.besov_list.front().p;
    }

    void operator()(const SolverState& state) {
        const SpectralField& w = state.omega_hat;
        MonitorRecord rec;
        rec.t = state.t;
        rec.step_index = state.step_index;
        PhysicalField wp = dft_inverse(w);
        for (double p : cfg_.p_list) {
            const double norm = lp_norm(wp, p);
            rec.lp.push_back(norm);
            rec.lp_pow.push_back(std::pow(norm, p));
            rec.qp.push_back(q_p(wp, p));
        }
        SpectralField u = w.max_abs() > 0.0 ? biot_savart(w) : SpectralField(w.grid, 3);
        rec.u_m = lp_norm(u, static_cast<double>(cfg_.m));
        for (const auto& bp : cfg_.besov_list) rec.besov.push_back(besov_norm(w, bp, part_));
        rec.eps1 = besov_sup_norm(u, 1.0, part_);
        rec.eps2 = besov_sup_norm(w, 2.0, part_);

        SpectralField f_term = w.max_abs() > 0.0
                                   ? nonlinear_term(u, w, NonlinearForm::conservative)
                                   : SpectralField(w.grid, 3);
        for (int jb = part_.j_min(); jb <= part_.j_max(); ++jb) {
            SpectralField dw = delta_j(w, jb, part_);
            PhysicalField dwp = dft_inverse(dw);
            const double bn = lp_norm(dwp, band_p_);
            rec.band_norms.push_back(bn);
            rec.band_pow.push_back(std::pow(bn, band_p_));
            rec.band_dissip.push_back(cfg_.solver.nu * band_p_ * q_p(dwp, band_p_));
            // p int |D_j w|^{p-1} |D_j F| dx
            auto mag_w = magnitude(dwp);
            auto mag_f = magnitude(dft_inverse(delta_j(f_term, jb, part_)));
            double src = 0.0;
            for (std::size_t i = 0; i < mag_w.size(); ++i)
                src += std::pow(mag_w[i], band_p_ - 1.0) * mag_f[i];
            rec.band_source.push_back(band_p_ * src * w.grid.cell_volume());
        }
        records_.push_back(std::move(rec));
    }

    const std::vector<MonitorRecord>& records() const { return records_; }
    double band_p() const { return band_p_; }

private:
    ExperimentConfig cfg_;
    const DyadicPartition& part_;
    double band_p_;
    std::vector<MonitorRecord> records_;
};

/// CSV with the raw per-record functionals, fixed column order.
inline std::string records_csv(const std::vector<MonitorRecord>& records,
                               const ExperimentConfig& cfg, const DyadicPartition& part) {
    std::ostringstream os;
    os << "t,step";
    for (double p : cfg.p_list) os << ",lp_p" << fmt_double(p) << ",qp_p" << fmt_double(p);
    os << ",u_m";
    for (std::size_t b = 0; b < cfg.besov_list.size(); ++b)
        os << ",besov_s" << fmt_double(cfg.besov_list[b].s) << "_p" << fmt_double(cfg.besov_list[b].p)
           << "_q" << fmt_double(cfg.besov_list[b].q);
    for (int j = part.j_min(); j <= part.j_max(); ++j)
        os << ",band_j" << j << ",band_dissip_j" << j << ",band_source_j" << j;
    os << ",eps1,eps2\n";
    for (const auto& r : records) {
        os << fmt_double(r.t) << "," << r.step_index;
        for (std::size_t i = 0; i < r.lp.size(); ++i)
            os << "," << fmt_double(r.lp[i]) << "," << fmt_double(r.qp[i]);
        os << "," << fmt_double(r.u_m);
        for (double b : r.besov) os << "," << fmt_double(b);
        for (std::size_t i = 0; i < r.band_norms.size(); ++i)
            os << "," << fmt_double(r.band_norms[i]) << "," << fmt_double(r.band_dissip[i]) << ","
               << fmt_double(r.band_source[i]);
        os << "," << fmt_double(r.eps1) << "," << fmt_double(r.eps2) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Trajectory monitors
// ---------------------------------------------------------------------------

/// Nonnegative least squares of y ~ a*x1 - b*x2 with a, b >= 0.
struct NnlsFit {
    double a = 0.0, b = 0.0;
    double rel_residual = 0.0;
};

inline NnlsFit nnls_two_term(const std::vector<double>& y, const std::vector<double>& x1,
                             const std::vector<double>& x2) {
    auto dot = [](const std::vector<double>& u, const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
        return s;
    };
    const double s11 = dot(x1, x1), s22 = dot(x2, x2), s12 = dot(x1, x2);
    const double r1 = dot(x1, y), r2 = dot(x2, y);
    auto residual = [&](double a, double b) {
        double s = 0.0, yn = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double d = y[i] - a * x1[i] + b * x2[i];
            s += d * d;
            yn += y[i] * y[i];
        }
        return yn > 0.0 ? std::sqrt(s / yn) : 0.0;
    };
    NnlsFit best;
    best.rel_residual = residual(0.0, 0.0);
    // candidates: interior stationary point and the two clamped edges
    const double det = s11 * s22 - s12 * s12;
    std::vector<std::pair<double, double>> cands;
    if (std::abs(det) > 1e-300)
        cands.emplace_back((s22 * r1 - s12 * r2) / det, (s12 * r1 - s11 * r2) / det);
    if (s11 > 0.0) cands.emplace_back(r1 / s11, 0.0);
    if (s22 > 0.0) cands.emplace_back(0.0, -r2 / s22);
    for (auto [a, b] : cands) {
        if (!(a >= 0.0 && b >= 0.0)) continue;
        const double res = residual(a, b);
        if (res < best.rel_residual) best = NnlsFit{a, b, res};
    }
    return best;
}

struct LpMonitorReport {
    double p = 2.0;
    int m = 3;
    bool monotone = true;    // ||w(t)||_p nonincreasing over the run
    double fit_C = 0.0;      // from -d/dt||w||_p^p ~ C(nu - K ||u||_m) Q_p
    double fit_K = 0.0;
    double fit_residual = 0.0;
    std::vector<double> t, norm_p, ddt_pow, qp, u_m, margin;

    std::string csv() const {
        std::ostringstream os;
        os << "t,norm_p,ddt_norm_pow,qp,u_m,margin\n";
        for (std::size_t i = 0; i < t.size(); ++i)
            os << fmt_double(t[i]) << "," << fmt_double(norm_p[i]) << "," << fmt_double(ddt_pow[i])
               << "," << fmt_double(qp[i]) << "," << fmt_double(u_m[i]) << ","
               << fmt_double(margin[i]) << "\n";
        return os.str();
    }
};

/// Lyapunov monitor in L^p: discrete d/dt ||w||_p^p by centered differences,
/// constants of the dissipation inequality fitted by nonnegative least
/// squares, headline monotonicity of ||w(t)||_p.
inline LpMonitorReport monitor_lp(const std::vector<MonitorRecord>& records,
                                  const ExperimentConfig& cfg, std::size_t p_index) {
    if (records.empty()) throw std::invalid_argument("monitor_lp: empty trajectory");
    LpMonitorReport rep;
    rep.p = cfg.p_list.at(p_index);
    rep.m = cfg.m;
    const std::size_t nrec = records.size();
    for (std::size_t i = 0; i < nrec; ++i) {
        rep.t.push_back(records[i].t);
        rep.norm_p.push_back(records[i].lp[p_index]);
        rep.qp.push_back(records[i].qp[p_index]);
        rep.u_m.push_back(records[i].u_m);
        if (i > 0 && records[i].lp[p_index] > records[i - 1].lp[p_index]) rep.monotone = false;
    }
    std::vector<double> y, x1, x2;
    for (std::size_t i = 0; i < nrec; ++i) {
        double d;
        if (nrec == 1)
            d = 0.0;
        else if (i == 0)
            d = (records[1].lp_pow[p_index] - records[0].lp_pow[p_index]) / (records[1].t - records[0].t);
        else if (i + 1 == nrec)
            d = (records[i].lp_pow[p_index] - records[i - 1].lp_pow[p_index]) /
                (records[i].t - records[i - 1].t);
        else
            d = (records[i + 1].lp_pow[p_index] - records[i - 1].lp_pow[p_index]) /
                (records[i + 1].t - records[i - 1].t);
        rep.ddt_pow.push_back(d);
        rep.margin.push_back(rep.qp[i] > 0.0 ? -d / rep.qp[i] : 0.0);
        // interior records only: one-sided differences would bias the fit
        if (i > 0 && i + 1 < nrec) {
            y.push_back(-d);
            x1.push_back(rep.qp[i]);
            x2.push_back(rep.u_m[i] * rep.qp[i]);
        }
    }
    if (!y.empty()) {
        NnlsFit fit = nnls_two_term(y, x1, x2);  // y ~ a Q_p - b ||u||_m Q_p
        rep.fit_C = fit.a / cfg.solver.nu;
        rep.fit_K = fit.a > 0.0 ? fit.b * cfg.solver.nu / fit.a : 0.0;
        rep.fit_residual = fit.rel_residual;
    }
    return rep;
}

struct BesovMonitorReport {
    BesovParams params;
    bool monotone = true;
    double sup_eps1 = 0.0;
    double sup_eps2 = 0.0;
    std::vector<double> t, norm;
    // band-wise dissipation balance: measured band dissipation and
    // paraproduct-structured source, reported as a ratio per band/record
    std::vector<std::vector<double>> band_balance_ratio;

    std::string csv(const DyadicPartition& part) const {
        std::ostringstream os;
        os << "t,besov_norm";
        for (int j = part.j_min(); j <= part.j_max(); ++j) os << ",balance_j" << j;
        os << "\n";
        for (std::size_t i = 0; i < t.size(); ++i) {
            os << fmt_double(t[i]) << "," << fmt_double(norm[i]);
            for (double r : band_balance_ratio[i]) os << "," << fmt_double(r);
            os << "\n";
        }
        return os.str();
    }
};

/// Lyapunov monitor in the homogeneous Besov norm.
inline BesovMonitorReport monitor_besov(const std::vector<MonitorRecord>& records,
                                        const ExperimentConfig& cfg, std::size_t besov_index) {
    if (records.empty()) throw std::invalid_argument("monitor_besov: empty trajectory");
    BesovMonitorReport rep;
    rep.params = cfg.besov_list.at(besov_index);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        rep.t.push_back(r.t);
        rep.norm.push_back(r.besov[besov_index]);
        rep.sup_eps1 = std::max(rep.sup_eps1, r.eps1);
        rep.sup_eps2 = std::max(rep.sup_eps2, r.eps2);
        if (i > 0 && r.besov[besov_index] > records[i - 1].besov[besov_index]) rep.monotone = false;
        std::vector<double> ratios;
        for (std::size_t j = 0; j < r.band_dissip.size(); ++j)
            ratios.push_back(r.band_source[j] > 0.0 ? r.band_dissip[j] / r.band_source[j] : 0.0);
        rep.band_balance_ratio.push_back(std::move(ratios));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Monte-Carlo dissipativity study
// ---------------------------------------------------------------------------

struct DissipativitySample {
    double amplitude = 0.0;
    double p = 2.0;
    std::uint64_t seed_a = 0, seed_b = 0;
    PairingReport pairing;
};

struct DissipativityReport {
    std::vector<DissipativitySample> samples;
    std::vector<double> amplitudes;          // descending
    std::vector<double> violation_fraction;  // per amplitude, over all p
    double smallest_violating_amplitude = 0.0;  // 0 when no violations at all

    std::string csv() const {
        std::ostringstream os;
        os << "amplitude,p,seed_a,seed_b,lhs,satisfied,degenerate,qp_diff,qp_diff_conj,u_m,v_m,"
              "omega_m,omega_tilde_m,diff_l1\n";
        for (const auto& s : samples) {
            const auto& pr = s.pairing;
            os << fmt_double(s.amplitude) << "," << fmt_double(s.p) << "," << s.seed_a << ","
               << s.seed_b << "," << fmt_double(pr.base.lhs) << "," << (pr.base.satisfied ? 1 : 0)
               << "," << (pr.base.degenerate ? 1 : 0) << "," << fmt_double(pr.qp_diff) << ","
               << fmt_double(pr.qp_diff_conj) << "," << fmt_double(pr.u_m) << ","
               << fmt_double(pr.v_m) << "," << fmt_double(pr.omega_m) << ","
               << fmt_double(pr.omega_tilde_m) << "," << fmt_double(pr.diff_l1) << "\n";
        }
        return os.str();
    }
};

/// Sample independent small pairs per amplitude scale and evaluate the
/// dissipativity pairing; reports the violation fraction per scale.
inline DissipativityReport dissipativity_experiment(const ExperimentConfig& cfg) {
    const GridSpec grid = cfg.grid();
    const auto& ds = cfg.dissipativity;
    DissipativityReport rep;
    rep.amplitudes = ds.amplitudes;
    std::sort(rep.amplitudes.begin(), rep.amplitudes.end(), std::greater<double>());
    for (double amp : rep.amplitudes) {
        int total = 0, violations = 0;
        for (int i = 0; i < ds.samples; ++i) {
            DissipativitySample s;
            s.amplitude = amp;
            s.seed_a = ds.seed + 2 * static_cast<std::uint64_t>(i);
            s.seed_b = ds.seed + 2 * static_cast<std::uint64_t>(i) + 1;
            SpectralField w = random_divfree_field(grid, s.seed_a, 0.0, amp, ds.peak_band);
            SpectralField wt = random_divfree_field(grid, s.seed_b, 0.0, amp, ds.peak_band);
            for (double p : ds.p_list) {
                s.p = p;
                s.pairing = dissipativity_pairing(w, wt, cfg.solver.nu, p, cfg.m);
                rep.samples.push_back(s);
                if (s.pairing.base.degenerate) continue;
                ++total;
                if (!s.pairing.base.satisfied) ++violations;
            }
        }
        rep.violation_fraction.push_back(total > 0 ? static_cast<double>(violations) / total : 0.0);
        if (violations > 0) rep.smallest_violating_amplitude = amp;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Lemma checker suite
// ---------------------------------------------------------------------------

struct LemmaSuiteReport {
    std::vector<FunctionalReport> rows;
    bool all_exact_pass = true;

    /// Empirical sup of the ratio per check name.
    std::map<std::string, double> ratio_sup() const {
        std::map<std::string, double> sup;
        for (const auto& r : rows) {
            auto& v = sup[r.check_name];
            v = std::max(v, std::abs(r.ratio));
        }
        return sup;
    }

    std::string csv() const {
        std::ostringstream os;
        os << "check_name,p,q,s,m,lhs,rhs,ratio,satisfied,seed\n";
        for (const auto& r : rows)
            os << r.check_name << "," << fmt_double(r.p) << "," << fmt_double(r.q) << ","
               << fmt_double(r.s) << "," << r.m << "," << fmt_double(r.lhs) << ","
               << fmt_double(r.rhs) << "," << fmt_double(r.ratio) << "," << (r.satisfied ? 1 : 0)
               << "," << r.seed << "\n";
        return os.str();
    }
};

/// Run every checker operation over a deterministic random corpus.
inline LemmaSuiteReport lemma_suite(const ExperimentConfig& cfg) {
    const GridSpec grid = cfg.grid();
    DyadicPartition part(grid);
    LemmaSuiteReport rep;
    auto push = [&](FunctionalReport r, std::uint64_t seed) {
        r.seed = seed;
        rep.rows.push_back(r);
        if (!r.satisfied) rep.all_exact_pass = false;
    };
    const int mid_band = (grid.j_min + grid.j_max) / 2;
    for (int i = 0; i < cfg.lemmas.corpus_size; ++i) {
        const std::uint64_t seed = cfg.lemmas.seed + static_cast<std::uint64_t>(i);
        SpectralField w = random_divfree_field(grid, seed, 0.0, 1.0, mid_band);
        PhysicalField wp = dft_inverse(w);
        push(check_lemma_2_5(wp, 2.0), seed);
        push(check_lemma_2_5(wp, 4.0), seed);
        push(check_lemma_2_6(wp, 2.0, cfg.m), seed);
        push(check_planchon(w, 2.0), seed);
        push(check_planchon(w, 4.0), seed);
        // annulus-supported probe for Bernstein
        SpectralField band = delta_j(w, mid_band, part);
        const double lambda = std::ldexp(1.0, mid_band);
        if (band.max_abs() > 0.0) {
            push(check_bernstein(band, 1.0, 2.0, lambda, 0.5, 2.0), seed);
            push(check_bernstein(band, -1.0, 4.0, lambda, 0.5, 2.0), seed);
        }
        BesovParams eqv{-1.0, 2.0, 2.0};
        push(check_besov_equivalence(w, eqv, part), seed);
        push(check_embedding(w, BesovParams{0.5, 2.0, 1.0}, BesovParams{0.5, 2.0, 2.0}, part), seed);
        push(check_embedding(w, BesovParams{1.0, 2.0, 2.0}, BesovParams{0.25, 4.0, 2.0}, part), seed);
        push(check_cz_bound(w, 2.0), seed);
        push(check_cz_bound(w, 4.0), seed);
        push(check_lp_velocity_bound(w, 4.0), seed);
    }
    return rep;
}

}  // namespace vort
