#pragma once

#include "swiptfog/channel.hpp"
#include "swiptfog/params.hpp"
#include "swiptfog/solution.hpp"

#include <optional>

namespace swiptfog {

/// Both branch solvers' answers for one MU in one block, before any credit is applied.
struct ModeCandidates {
    Attempt local;
    Attempt offload;
};

/// Runs both solvers with iota = e_s = 0.
ModeCandidates evaluate_modes(const SystemParams& params, const LinkGains& gains);

/// Applies the credit to both candidates and keeps the cheaper one (ties go to Local).
/// Empty when neither mode is feasible.
std::optional<ModeSolution> choose_mode(const ModeCandidates& candidates, double iota, double e_s);

/// Throws InfeasibleError(BothModesInfeasible).
ModeSolution select_mode(const SystemParams& params, const LinkGains& gains, double iota, double e_s);

std::optional<ModeSolution> try_select_mode(const SystemParams& params, const LinkGains& gains,
                                            double iota, double e_s);

} // namespace swiptfog
