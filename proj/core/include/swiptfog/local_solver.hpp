#pragma once

#include "swiptfog/params.hpp"
#include "swiptfog/solution.hpp"

namespace swiptfog {

/// PS ratios above this count as 1 (the MU would harvest nothing).
inline constexpr double kRhoCeiling = 1.0 - 1e-9;

/// Local computing is feasible iff K R_th < f_op and the decoding PS ratio stays below 1.
Verdict local_feasible(const SystemParams& params, double g_ap_u);

/// Closed-form local optimum, or the infeasibility reason.
Attempt try_solve_local(const SystemParams& params, double g_ap_u, double iota, double e_s);

/// Closed-form local optimum. Throws InfeasibleError.
ModeSolution solve_local(const SystemParams& params, double g_ap_u, double iota, double e_s);

} // namespace swiptfog
