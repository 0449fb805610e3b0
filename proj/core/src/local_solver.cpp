#include "swiptfog/local_solver.hpp"

#include <cmath>
#include <numbers>

namespace swiptfog {

Attempt try_solve_local(const SystemParams& params, double g_ap_u, double iota, double e_s) {
    const double ops_rate = params.k_ops * params.r_th;
    if (!(ops_rate < params.f_op)) return {std::nullopt, {Infeasibility::ComputeTooSlow}};

    ModeSolution s;
    s.mode = Mode::Local;
    s.tau_ipt = params.t_b * (params.f_op - ops_rate) / params.f_op;
    s.tau_cpt = ops_rate * params.t_b / params.f_op;

    const double snr_per_rho = params.p_ap * g_ap_u / params.noise_n;
    const double exponent = params.r_th * params.f_op / (params.bandwidth * (params.f_op - ops_rate));
    s.rho = std::expm1(std::numbers::ln2 * exponent) / snr_per_rho;
    if (!(s.rho <= kRhoCeiling)) return {std::nullopt, {Infeasibility::ChannelTooWeak}};

    s.e_id = params.xi * params.task_bits();
    s.e_cpt = params.energy_per_op() * params.k_ops * params.task_bits();
    s.e_rf = params.eta * (1.0 - s.rho) * params.p_ap * g_ap_u * s.tau_ipt;
    return {with_credit(s, iota, e_s), {}};
}

Verdict local_feasible(const SystemParams& params, double g_ap_u) {
    return try_solve_local(params, g_ap_u, 0.0, 0.0).verdict;
}

ModeSolution solve_local(const SystemParams& params, double g_ap_u, double iota, double e_s) {
    auto attempt = try_solve_local(params, g_ap_u, iota, e_s);
    if (!attempt.solution) throw InfeasibleError(attempt.verdict.reason);
    return *attempt.solution;
}

} // namespace swiptfog
