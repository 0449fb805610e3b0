#include "swiptfog_tools/csi.hpp"

#include <swiptfog/local_solver.hpp>

#include <cmath>
#include <numbers>

namespace swiptfog::tools {

std::optional<ModeSolution> replay_plan(const SystemParams& params, const ModeSolution& plan,
                                        const LinkGains& truth) {
    using std::numbers::ln2;
    if (plan.mode == Mode::HarvestOnly) return plan;
    ModeSolution s = plan;
    const double b = params.bits_per_hz();
    s.rho = params.noise_n / (params.p_ap * truth.ap_u) * std::expm1(ln2 * b / s.tau_ipt);
    if (!(s.rho <= kRhoCeiling)) return std::nullopt;
    if (s.mode == Mode::Offload) {
        s.p_uf = params.noise_s / truth.uf * std::expm1(ln2 * b / s.tau_uf);
        if (!(s.p_uf <= params.p_uf_max * (1.0 + 1e-12))) return std::nullopt;
        s.e_uf = s.p_uf * s.tau_uf;
    }
    s.e_rf = params.eta * (1.0 - s.rho) * params.p_ap * truth.ap_u * s.tau_ipt;
    return with_credit(s, plan.iota, plan.e_s);
}

} // namespace swiptfog::tools
