#pragma once

#include "vort/functionals.hpp"

namespace vort {

inline void require_divfree(const SpectralField& f, const char* where) {
    const double scale = f.max_abs();
    if (scale == 0.0) return;
    if (mean_mode_abs(f) > 1e-10 * scale)
        throw std::invalid_argument(std::string(where) + ": field has nonzero mean");
    if (divergence(f).max_abs() > 1e-10 * scale * f.grid.k_unit * f.grid.n)
        throw std::invalid_argument(std::string(where) + ": field is not divergence-free");
}

/// Biot-Savart velocity: u_hat = i k x omega_hat / |k|^2, the inverse of
/// the curl on mean-free divergence-free fields.
inline SpectralField biot_savart(const SpectralField& omega) {
    if (omega.grid.dim != 3)
        throw std::invalid_argument("biot_savart: requires a 3-D field");
    require_divfree(omega, "biot_savart");
    SpectralField u = curl(omega);
    const auto& g = u.grid;
    for (auto& comp : u.components) {
        comp[0] = Complex{0.0, 0.0};
        for (std::size_t i = 1; i < comp.size(); ++i) comp[i] /= g.k_mag2(i);
    }
    return u;
}

/// Calderon-Zygmund ratio ||grad u||_p / ||omega||_p with u recovered by
/// Biot-Savart; exactly 1 at p = 2.
inline FunctionalReport check_cz_bound(const SpectralField& omega, double p) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("check_cz_bound: requires 1 < p < inf");
    FunctionalReport r;
    r.check_name = "cz_bound";
    r.p = p;
    r.rhs = lp_norm(omega, p);
    if (r.rhs == 0.0) throw std::invalid_argument("check_cz_bound: zero vorticity");
    SpectralField u = biot_savart(omega);
    // ||grad u||_p with the Euclidean magnitude over all 9 entries
    PhysicalField grad(u.grid, 9);
    int slot = 0;
    for (int axis = 0; axis < 3; ++axis) {
        PhysicalField d = dft_inverse(derive(u, axis));
        for (int c = 0; c < 3; ++c)
            grad.components[static_cast<std::size_t>(slot++)] = std::move(d.components[static_cast<std::size_t>(c)]);
    }
    r.lhs = lp_norm(grad, p);
    r.ratio = r.lhs / r.rhs;
    r.satisfied = std::isfinite(r.ratio);
    return r;
}

/// Velocity bound ratio ||u||_p / (||omega||_1 + ||omega||_p).
inline FunctionalReport check_lp_velocity_bound(const SpectralField& omega, double p) {
    const double m = omega.grid.dim;
    if (!(p > m / (m - 1.0)))
        throw std::invalid_argument("check_lp_velocity_bound: requires p > m/(m-1)");
    FunctionalReport r;
    r.check_name = "lp_velocity_bound";
    r.p = p;
    PhysicalField w = dft_inverse(omega);
    r.rhs = lp_norm(w, 1.0) + lp_norm(w, p);
    if (r.rhs == 0.0) {
        r.ratio = 0.0;
        return r;
    }
    r.lhs = lp_norm(biot_savart(omega), p);
    r.ratio = r.lhs / r.rhs;
    r.satisfied = std::isfinite(r.ratio);
    return r;
}

enum class NonlinearForm { advective, conservative };

/// Nonlinear vorticity term F(u, omega) = u.grad(omega) - omega.grad(u),
/// dealiased. The conservative form uses div(u (x) omega) - div(omega (x) u);
/// the two agree spectrally for divergence-free inputs.
inline SpectralField nonlinear_term(const SpectralField& u, const SpectralField& omega,
                                    NonlinearForm form = NonlinearForm::conservative) {
    require_same_grid(u.grid, omega.grid, "nonlinear_term");
    require_divfree(u, "nonlinear_term(u)");
    require_divfree(omega, "nonlinear_term(omega)");
    const GridSpec& g = u.grid;
    const std::size_t nm = g.size();
    PhysicalField up = dft_inverse(u);
    PhysicalField wp = dft_inverse(omega);
    SpectralField out(g, 3);

    if (form == NonlinearForm::advective) {
        PhysicalField acc(g, 3);
        for (int axis = 0; axis < 3; ++axis) {
            PhysicalField dw = dft_inverse(derive(omega, axis));
            PhysicalField du = dft_inverse(derive(u, axis));
            for (int c = 0; c < 3; ++c) {
                auto& a = acc.components[static_cast<std::size_t>(c)];
                const auto& ua = up.components[static_cast<std::size_t>(axis)];
                const auto& wa = wp.components[static_cast<std::size_t>(axis)];
                const auto& dwc = dw.components[static_cast<std::size_t>(c)];
                const auto& duc = du.components[static_cast<std::size_t>(c)];
                for (std::size_t i = 0; i < nm; ++i) a[i] += ua[i] * dwc[i] - wa[i] * duc[i];
            }
        }
        out = dealias(dft_forward(acc));
    } else {
        // d/dx_i of the dealiased products u_i w_c - w_i u_c
        for (int axis = 0; axis < 3; ++axis) {
            PhysicalField prod(g, 3);
            const auto& ua = up.components[static_cast<std::size_t>(axis)];
            const auto& wa = wp.components[static_cast<std::size_t>(axis)];
            for (int c = 0; c < 3; ++c) {
                auto& pc = prod.components[static_cast<std::size_t>(c)];
                const auto& uc = up.components[static_cast<std::size_t>(c)];
                const auto& wc = wp.components[static_cast<std::size_t>(c)];
                for (std::size_t i = 0; i < nm; ++i) pc[i] = ua[i] * wc[i] - wa[i] * uc[i];
            }
            out += derive(dealias(dft_forward(prod)), axis);
        }
    }
    return out;
}

/// (a.grad) b in physical space, dealiased.
inline SpectralField advect(const SpectralField& a, const SpectralField& b) {
    const std::size_t nm = a.grid.size();
    PhysicalField ap = dft_inverse(a);
    PhysicalField acc(a.grid, 3);
    for (int axis = 0; axis < 3; ++axis) {
        PhysicalField db = dft_inverse(derive(b, axis));
        const auto& aa = ap.components[static_cast<std::size_t>(axis)];
        for (int c = 0; c < 3; ++c) {
            auto& out = acc.components[static_cast<std::size_t>(c)];
            const auto& dbc = db.components[static_cast<std::size_t>(c)];
            for (std::size_t i = 0; i < nm; ++i) out[i] += aa[i] * dbc[i];
        }
    }
    return dealias(dft_forward(acc));
}

/// One evaluation of the full vorticity operator A(u, omega).
struct OperatorEval {
    SpectralField a_field;
    double viscous_norm = 0.0;
    double advection_norm = 0.0;
    double stretching_norm = 0.0;
};

/// A(u, omega) = nu Lap(omega) - u.grad(omega) + omega.grad(u), with u the
/// Biot-Savart velocity of omega; re-projected divergence-free.
inline OperatorEval vorticity_operator(const SpectralField& omega, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("vorticity_operator: nu must be positive");
    OperatorEval ev;
    SpectralField u = biot_savart(omega);
    SpectralField viscous = laplacian(omega);
    viscous *= nu;
    SpectralField nl = nonlinear_term(u, omega, NonlinearForm::conservative);
    ev.a_field = project_divfree(viscous - nl);
    ev.viscous_norm = l2_norm_spectral(viscous);
    ev.advection_norm = l2_norm_spectral(advect(u, omega));
    ev.stretching_norm = l2_norm_spectral(advect(omega, u));
    return ev;
}

/// Report of the dissipativity pairing of two states, with the norm
/// ingredients of the dissipativity bound attached.
struct PairingReport {
    FunctionalReport base;
    double qp_diff = 0.0;      // Q_p(omega - omega~)
    double qp_diff_conj = 0.0; // Q_p(omega - omega~)^{1/p'}
    double u_m = 0.0, v_m = 0.0;
    double omega_m = 0.0, omega_tilde_m = 0.0;
    double diff_l1 = 0.0;
};

/// <A(u,omega) - A(v,omega~), G(omega - omega~)>; satisfied when <= 0.
inline PairingReport dissipativity_pairing(const SpectralField& omega,
                                           const SpectralField& omega_tilde, double nu,
                                           double p, int m = 3) {
    if (!(p >= 2.0)) throw std::invalid_argument("dissipativity_pairing: p must be >= 2");
    PairingReport rep;
    rep.base.check_name = "dissipativity_pairing";
    rep.base.p = p;
    rep.base.m = m;

    SpectralField diff = omega - omega_tilde;
    PhysicalField diff_phys = dft_inverse(diff);
    if (lp_norm(diff_phys, 2.0) == 0.0) {
        rep.base.degenerate = true;
        rep.base.satisfied = true;
        return rep;
    }

    OperatorEval a1 = vorticity_operator(omega, nu);
    OperatorEval a2 = vorticity_operator(omega_tilde, nu);
    bool degen = false;
    PhysicalField gmap = duality_map(diff_phys, p, &degen);
    rep.base.lhs = inner_product(dft_inverse(a1.a_field - a2.a_field), gmap);
    rep.base.degenerate = degen;
    rep.base.satisfied = rep.base.lhs <= 0.0;
    rep.base.ratio = rep.base.lhs;

    rep.qp_diff = q_p(diff_phys, p);
    const double p_conj = p / (p - 1.0);
    rep.qp_diff_conj = std::pow(rep.qp_diff, 1.0 / p_conj);
    rep.u_m = lp_norm(biot_savart(omega), static_cast<double>(m));
    rep.v_m = lp_norm(biot_savart(omega_tilde), static_cast<double>(m));
    rep.omega_m = lp_norm(omega, static_cast<double>(m));
    rep.omega_tilde_m = lp_norm(omega_tilde, static_cast<double>(m));
    rep.diff_l1 = lp_norm(diff_phys, 1.0);
    return rep;
}

}  // namespace vort
