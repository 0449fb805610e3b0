#pragma once

#include "swiptfog/channel.hpp"
#include "swiptfog/params.hpp"

namespace swiptfog {

/// Lattice settings for the brute-force oracles.
struct GridOptions {
    int n_grid = 400;       ///< cells per axis, >= 50
    int refine_levels = 0;  ///< zoom passes around the incumbent (each keeps +-n/8 cells)
};

struct LocalGridPoint {
    double tau_ipt = 0.0;
    double rho = 0.0;
    double e_u = 0.0;
};

struct OffloadGridPoint {
    double tau_ipt = 0.0;
    double p_uf = 0.0;
    double tau_uf = 0.0;
    double rho = 0.0;
    double e_u = 0.0;
};

/// Scans (tau_ipt, rho) over (0, T_b) x (0, 1); rho on a log axis. Throws NoFeasiblePoint.
LocalGridPoint grid_search_local(const SystemParams& params, double g_ap_u, double iota, double e_s,
                                 const GridOptions& options = {});

/// Scans (tau_ipt, P_uf) over (0, t_frak) x (0, p_uf_max]; P_uf on a log axis, tau_uf from the uplink
/// rate equality, rho from the downlink rate equality. Throws NoFeasiblePoint.
OffloadGridPoint grid_search_offload(const SystemParams& params, const LinkGains& gains, double iota,
                                     double e_s, const GridOptions& options = {});

} // namespace swiptfog
