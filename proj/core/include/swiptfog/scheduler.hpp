#pragma once

#include "swiptfog/channel.hpp"
#include "swiptfog/params.hpp"
#include "swiptfog/solution.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swiptfog {

/// TDMA order of one frame with the per-block operating points.
struct Schedule {
    std::vector<std::vector<int>> psi;     ///< psi[m][t] = 1 iff MU m is served in block t
    std::vector<std::size_t> order;        ///< block t -> MU
    std::vector<ModeSolution> solutions;   ///< per block
    std::vector<double> iota_trace;        ///< credit seen by the MU of block t, J
    double total_e_u = 0.0;
};

/// Energy the HAP's beamformed block leaves for MUs served later: eta P_AP g tau.
double broadcast_increment(const SystemParams& params, double g_ap_u_prev, double tau_ipt_prev) noexcept;

/// A block spent harvesting: tau_ipt = T_b, rho = 0, no task served, e_u = 0.
ModeSolution harvest_only(const SystemParams& params, double g_ap_u, double iota, double e_s);

/// Serves MUs in the given order, accumulating iota. MUs with no feasible mode harvest only.
Schedule evaluate_order(const SystemParams& params, std::span<const LinkGains> gains,
                        std::span<const double> e_s, std::span<const std::size_t> order);

/// Greedy order: each block serves the unscheduled MU with the smallest e_u (ties to the lowest index).
Schedule greedy_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                         std::span<const double> e_s);

/// Uniform random permutation drawn from `seed`.
Schedule random_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                         std::span<const double> e_s, std::uint64_t seed);

inline constexpr std::size_t kMaxExhaustiveUsers = 9;

/// Global optimum over all M! orders. Throws std::invalid_argument for M > kMaxExhaustiveUsers.
Schedule exhaustive_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                             std::span<const double> e_s);

/// Largest total over all orders (test and reporting aid). Same size limit as exhaustive_schedule.
Schedule worst_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                        std::span<const double> e_s);

} // namespace swiptfog
