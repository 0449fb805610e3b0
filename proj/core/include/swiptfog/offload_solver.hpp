#pragma once

#include "swiptfog/channel.hpp"
#include "swiptfog/params.hpp"
#include "swiptfog/solution.hpp"

#include <functional>

namespace swiptfog {

/// Time left for decoding and uplink once fog computing and feedback are pinned to their minima.
struct OffloadBudget {
    double t_frak = 0.0;
    double tau_fogcpt = 0.0;
    double tau_fu = 0.0;
};

/// Throws InfeasibleError(BudgetExhausted) when t_frak <= 0.
OffloadBudget offload_budget(const SystemParams& params, double g_fu);

/// Shortest uplink slot, reached at p_uf_max.
double min_uplink_time(const SystemParams& params, double g_uf);

/// Feasible iff the shortest uplink slot fits in the budget and the induced PS ratio stays below 1.
Verdict offload_feasible(const SystemParams& params, double g_uf, const OffloadBudget& budget,
                         double g_ap_u);
Verdict offload_feasible(const SystemParams& params, const LinkGains& gains);

/// Reduced objective in tau_ipt, written with four shorthand constants.
struct OffloadTerms {
    double a = 0.0;      ///< sigma_s^2 / g_uf
    double b = 0.0;      ///< R_th T_b / B
    double c = 0.0;      ///< eta P_AP g_ap_u
    double d = 0.0;      ///< sigma_n^2 / (P_AP g_ap_u)
    double t_frak = 0.0;
    double fixed = 0.0;  ///< xi R_th T_b - iota - e_s
};

OffloadTerms offload_terms(const SystemParams& params, const LinkGains& gains,
                           const OffloadBudget& budget, double iota, double e_s);

/// Objective at tau in (0, t_frak). Throws std::domain_error outside.
double vartheta(const OffloadTerms& terms, double tau);
double vartheta(const SystemParams& params, const LinkGains& gains, double tau_ipt, double iota,
                double e_s);

/// First derivative of the objective. Throws std::domain_error outside (0, t_frak).
/// May overflow to +-inf near the ends.
double vartheta_prime(const OffloadTerms& terms, double tau);
double vartheta_prime(const SystemParams& params, const LinkGains& gains, double tau_ipt);

/// Sign of the derivative, well defined even where both exponentials overflow.
int vartheta_prime_sign(const OffloadTerms& terms, double tau);

/// Minimizer of the objective over [eps t_frak, (1 - eps) t_frak].
struct StationaryPoint {
    double tau = 0.0;
    double lo = 0.0;        ///< final bracket
    double hi = 0.0;
    bool interior = false;  ///< false: the derivative kept one sign and an end was taken
    int evaluations = 0;
};

inline constexpr double kBracketInset = 1e-9;
inline constexpr double kTauTolerance = 1e-12;

/// Bisection on the derivative sign. `observer` sees every midpoint with its sign.
StationaryPoint find_stationary_point(const OffloadTerms& terms, double t_b,
                                      const std::function<void(double, int)>& observer = {});

Attempt try_solve_offload(const SystemParams& params, const LinkGains& gains, double iota, double e_s);

/// Throws InfeasibleError.
ModeSolution solve_offload(const SystemParams& params, const LinkGains& gains, double iota, double e_s);

} // namespace swiptfog
