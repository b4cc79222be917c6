#pragma once

#include <functional>

#include "vort/vorticity.hpp"

namespace vort {

struct SolverConfig {
    double nu = 0.1;
    double dt = 0.0;  // <= 0 selects automatic CFL-based steps
    double t_end = 1.0;
    double cfl = 0.4;
    int record_every = 1;

    void validate() const {
        if (!(nu > 0.0)) throw std::invalid_argument("SolverConfig: nu must be positive");
        if (!(t_end >= 0.0)) throw std::invalid_argument("SolverConfig: t_end must be nonnegative");
        if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("SolverConfig: cfl in (0, 1]");
        if (record_every < 1) throw std::invalid_argument("SolverConfig: record_every >= 1");
    }
};

struct SolverState {
    double t = 0.0;
    SpectralField omega_hat;
    std::int64_t step_index = 0;
    SolverConfig config;
};

struct SolverAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline SpectralField vorticity_rhs(const SpectralField& omega) {
    SpectralField u = biot_savart(omega);
    SpectralField nl = nonlinear_term(u, omega, NonlinearForm::conservative);
    nl *= -1.0;
    return project_divfree(nl);
}

inline void apply_viscous_factor(SpectralField& f, double nu, double dt) {
    const auto& g = f.grid;
    for (auto& comp : f.components)
        for (std::size_t i = 0; i < comp.size(); ++i)
            comp[i] *= std::exp(-nu * g.k_mag2(i) * dt);
}

}  // namespace detail

/// CFL time step dt = cfl * dx / max|u| (capped at t_end scale by run()).
inline double cfl_timestep(const SpectralField& omega, const SolverConfig& cfg) {
    const double dx = omega.grid.box_length / omega.grid.n;
    const double umax = lp_norm(biot_savart(omega), kInf);
    if (umax == 0.0) return cfg.t_end > 0.0 ? cfg.t_end : 1.0;
    return cfg.cfl * dx / umax;
}

/// One integrating-factor RK4 step of size dt: the viscous semigroup is
/// applied exactly, the nonlinear term with classical RK4 in the
/// exponentially rescaled variable.
inline SolverState step(const SolverState& state, double dt) {
    if (dt < 1e-12) throw SolverAbort("step: dt underflow");
    const SolverConfig& cfg = state.config;
    const SpectralField& w = state.omega_hat;
    auto E = [&](SpectralField f, double frac) {
        detail::apply_viscous_factor(f, cfg.nu, frac * dt);
        return f;
    };
    SpectralField a = detail::vorticity_rhs(w);
    a *= dt;
    SpectralField b = detail::vorticity_rhs(E(w + 0.5 * a, 0.5));
    b *= dt;
    SpectralField c = detail::vorticity_rhs(E(w, 0.5) + 0.5 * b);
    c *= dt;
    SpectralField d = detail::vorticity_rhs(E(w, 1.0) + E(c, 0.5));
    d *= dt;

    SolverState next = state;
    next.omega_hat = E(w, 1.0) + (1.0 / 6.0) * (E(a, 1.0) + 2.0 * E(b + c, 0.5) + d);
    next.omega_hat = project_divfree(dealias(next.omega_hat));
    for (auto& comp : next.omega_hat.components) comp[0] = Complex{0.0, 0.0};
    next.t = state.t + dt;
    next.step_index = state.step_index + 1;
    if (!std::isfinite(next.omega_hat.max_abs()))
        throw SolverAbort("step: non-finite state at t = " + std::to_string(next.t));
    return next;
}

using RecordCallback = std::function<void(const SolverState&)>;

/// Integrate to t_end, invoking the callback on the initial state, every
/// record_every-th accepted step, and the final state. Deterministic.
inline SolverState run(const SpectralField& omega0, const SolverConfig& config,
                       const RecordCallback& on_record = {}) {
    config.validate();
    require_divfree(omega0, "run");
    SolverState state;
    state.omega_hat = project_divfree(dealias(omega0));
    for (auto& comp : state.omega_hat.components) comp[0] = Complex{0.0, 0.0};
    state.config = config;
    if (on_record) on_record(state);
    if (config.t_end == 0.0) return state;

    double dt_auto = config.dt > 0.0 ? config.dt : cfl_timestep(state.omega_hat, config);
    while (state.t < config.t_end - 1e-14) {
        if (config.dt <= 0.0 && state.step_index % 10 == 0)
            dt_auto = cfl_timestep(state.omega_hat, config);
        const double dt = std::min(dt_auto, config.t_end - state.t);
        state = step(state, dt);
        const bool last = state.t >= config.t_end - 1e-14;
        if (on_record && (state.step_index % config.record_every == 0 || last))
            on_record(state);
    }
    return state;
}

/// Taylor-Green initial vorticity: curl of the classical single-mode
/// Taylor-Green velocity, projected divergence-free.
inline SpectralField taylor_green_vorticity(const GridSpec& grid, double amplitude = 1.0) {
    if (grid.dim != 3) throw std::invalid_argument("taylor_green_vorticity: 3-D only");
    const double k0 = grid.k_unit;
    PhysicalField u = sample_field(grid, 3, [&](int c, const std::array<double, 3>& x) {
        switch (c) {
            case 0: return amplitude * std::cos(k0 * x[0]) * std::sin(k0 * x[1]) * std::sin(k0 * x[2]);
            case 1: return -amplitude * std::sin(k0 * x[0]) * std::cos(k0 * x[1]) * std::sin(k0 * x[2]);
            default: return 0.0;
        }
    });
    return curl(project_divfree(dft_forward(u)));
}

}  // namespace vort
