#pragma once

#include "swiptfog/errors.hpp"

#include <optional>

namespace swiptfog {

enum class Mode { Local, Offload, HarvestOnly };

const char* to_string(Mode mode) noexcept;

/// Optimized operating point of one MU in one block, with its energy ledger.
struct ModeSolution {
    Mode mode = Mode::Local;

    double tau_ipt = 0.0;    ///< decode + harvest, s
    double tau_cpt = 0.0;    ///< local computing, s
    double tau_uf = 0.0;     ///< uplink offload, s
    double tau_fogcpt = 0.0; ///< fog computing, s
    double tau_fu = 0.0;     ///< result feedback, s
    double rho = 0.0;        ///< PS ratio
    double p_uf = 0.0;       ///< MU transmit power, W

    double e_id = 0.0;  ///< decoding energy, J
    double e_cpt = 0.0; ///< local computing energy, J
    double e_uf = 0.0;  ///< offloading energy, J
    double e_rf = 0.0;  ///< energy harvested in this block, J
    double e_eh = 0.0;  ///< e_rf + iota, J
    double e_u = 0.0;   ///< net required energy, J (negative is surplus)

    double iota = 0.0;  ///< broadcast credit the ledger was built with
    double e_s = 0.0;   ///< stored energy the ledger was built with

    /// Offload: transmit power the unconstrained stationary point needs (the clamp threshold).
    double required_power = 0.0;
    /// Offload: p_uf was clamped to p_uf_max.
    bool power_clamped = false;

    /// Energy spent by the MU this block.
    [[nodiscard]] double consumed() const noexcept { return e_id + e_cpt + e_uf; }
    /// Sum of the time slots in use.
    [[nodiscard]] double busy_time() const noexcept {
        return tau_ipt + tau_cpt + tau_uf + tau_fogcpt + tau_fu;
    }
};

/// Rebuilds e_eh and e_u for another (iota, e_s). The operating point does not depend on either.
ModeSolution with_credit(ModeSolution solution, double iota, double e_s) noexcept;

/// A solver's answer: a solution, or the reason there is none.
struct Attempt {
    std::optional<ModeSolution> solution;
    Verdict verdict;

    [[nodiscard]] bool feasible() const noexcept { return solution.has_value(); }
};

} // namespace swiptfog
