#include "swiptfog/mode_selector.hpp"

#include "swiptfog/local_solver.hpp"
#include "swiptfog/offload_solver.hpp"

namespace swiptfog {

ModeCandidates evaluate_modes(const SystemParams& params, const LinkGains& gains) {
    return {try_solve_local(params, gains.ap_u, 0.0, 0.0), try_solve_offload(params, gains, 0.0, 0.0)};
}

std::optional<ModeSolution> choose_mode(const ModeCandidates& candidates, double iota, double e_s) {
    const auto& local = candidates.local.solution;
    const auto& offload = candidates.offload.solution;
    if (!local && !offload) return std::nullopt;
    if (!offload) return with_credit(*local, iota, e_s);
    if (!local) return with_credit(*offload, iota, e_s);
    auto l = with_credit(*local, iota, e_s);
    auto o = with_credit(*offload, iota, e_s);
    return l.e_u <= o.e_u ? l : o;
}

std::optional<ModeSolution> try_select_mode(const SystemParams& params, const LinkGains& gains,
                                            double iota, double e_s) {
    return choose_mode(evaluate_modes(params, gains), iota, e_s);
}

ModeSolution select_mode(const SystemParams& params, const LinkGains& gains, double iota, double e_s) {
    auto chosen = try_select_mode(params, gains, iota, e_s);
    if (!chosen) throw InfeasibleError(Infeasibility::BothModesInfeasible);
    return *chosen;
}

} // namespace swiptfog
