#pragma once

#include "swiptfog/channel.hpp"
#include "swiptfog/params.hpp"
#include "swiptfog/solution.hpp"

#include <limits>
#include <optional>

namespace swiptfog {

enum class LambertBranch { Principal, Lower };

const char* to_string(LambertBranch branch) noexcept;

/// Solves w e^w = x. Principal: x >= -1/e. Lower: -1/e <= x < 0. Throws std::domain_error otherwise.
double lambert_w(double x, LambertBranch branch);

/// Principal branch at x = e^log_x, usable where e^log_x overflows.
double lambert_w0_exp(double log_x);

/// A threshold from a closed form, checked against a root-finding oracle.
struct ThresholdReport {
    static constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    double value = nan;         ///< K0 [ops/bit], beta0 [-], or L_max [dB]
    LambertBranch branch_used = LambertBranch::Principal;
    double oracle_value = nan;  ///< bisection on the energy balance
    double rel_gap = nan;       ///< |value - oracle| / |oracle|

    /// Literal evaluation of the uncorrected closed form, kept for comparison only.
    double printed_value = nan;
    LambertBranch printed_branch = LambertBranch::Principal;

    int refinements = 0;        ///< fixed-point passes of the closed form
    bool precondition_holds = true;

    /// Path loss only: per-mode bounds [dB] and the mode that sets the maximum.
    double local_bound = nan;
    double offload_bound = nan;
    std::optional<Mode> limiting_mode;
};

/// Largest path loss [dB] at which some mode still closes its energy balance with gain g = 10^(-L/10)
/// as the effective HAP-MU gain. `gains.uf` and `gains.fu` fix the fog links; `gains.ap_u` is ignored.
/// Throws std::domain_error when neither mode has a defined bound.
ThresholdReport max_path_loss(const SystemParams& params, const LinkGains& gains, double iota = 0.0,
                              double e_s = 0.0);

/// High-SNR variant with the decoding-noise terms dropped. Requires K R_th < f_op.
ThresholdReport max_path_loss_high_snr(const SystemParams& params, const LinkGains& gains,
                                       double iota = 0.0, double e_s = 0.0);

/// K at which local and offload energies are equal. Throws NoCrossover.
ThresholdReport k_threshold(const SystemParams& params, const LinkGains& gains);

/// beta at which local and offload energies are equal. Throws NoCrossover.
ThresholdReport beta_threshold(const SystemParams& params, const LinkGains& gains);

/// Local minus offload net energy; +inf when only offload is feasible, -inf when only local is.
/// NaN when neither is.
double mode_energy_gap(const SystemParams& params, const LinkGains& gains);

/// Lambert branch used for the uncorrected threshold formulas.
inline constexpr LambertBranch kPrintedKBranch = LambertBranch::Principal;
inline constexpr LambertBranch kPrintedBetaBranch = LambertBranch::Principal;

/// Literal evaluations of the uncorrected K0 and beta0 expressions.
double printed_k_threshold(const SystemParams& params, const LinkGains& gains, LambertBranch branch);
double printed_beta_threshold(const SystemParams& params, const LinkGains& gains, LambertBranch branch);

} // namespace swiptfog
