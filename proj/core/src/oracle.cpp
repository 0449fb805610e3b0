#include "swiptfog/oracle.hpp"

#include "swiptfog/errors.hpp"
#include "swiptfog/offload_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace swiptfog {
namespace {

using std::numbers::ln2;

/// Open interval (lo, hi), or half-open (lo, hi] when `closed_hi`. Log axes hold log10 values.
struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    bool log = false;
    bool closed_hi = false;
    double hi_value = 0.0;  // exact value at the closed end

    [[nodiscard]] double coord(int k, int n) const { return lo + (hi - lo) * k / n; }
    [[nodiscard]] double value(int k, int n) const {
        if (closed_hi && k == n) return hi_value;
        const double x = coord(k, n);
        return log ? std::pow(10.0, x) : x;
    }
    [[nodiscard]] int last(int n) const { return closed_hi ? n : n - 1; }

    /// +-w cells around node k; the zoomed axis keeps the closed end only if it still reaches it.
    [[nodiscard]] Axis zoom(int k, int n, int w) const {
        Axis z = *this;
        z.lo = coord(std::max(k - w, 0), n);
        const int top = std::min(k + w, n);
        z.hi = coord(top, n);
        z.closed_hi = closed_hi && top == n;
        return z;
    }
};

void check_grid(const GridOptions& o) {
    if (o.n_grid < 50) throw std::invalid_argument("n_grid must be >= 50");
    if (o.refine_levels < 0) throw std::invalid_argument("refine_levels must be >= 0");
}

constexpr double kInf = std::numeric_limits<double>::infinity();

/// The second axis stays at full range while tau narrows: along the budget boundary the
/// energy is nearly flat in it, so an early zoom would lock onto a lattice artifact.
constexpr int kFullRangeLevels = 2;

/// Zoom half-width in cells. The optimum sits on a constraint corner, so the incumbent of a
/// coarse lattice can be several cells away from it.
int zoom_width(int n) { return std::max(2, n / 4); }

} // namespace

LocalGridPoint grid_search_local(const SystemParams& params, double g_ap_u, double iota, double e_s,
                                 const GridOptions& options) {
    check_grid(options);
    const int n = options.n_grid;
    const double snr = params.p_ap * g_ap_u / params.noise_n;
    const double per_bit = params.xi + params.k_ops * params.energy_per_op();
    // smallest PS ratio that can meet R_th even with tau_ipt = T_b
    const double rho_min = std::expm1(ln2 * params.bits_per_hz()) / snr;
    if (!(rho_min < 1.0)) throw NoFeasiblePoint("no PS ratio below 1 meets R_th");

    Axis tau_axis{0.0, params.t_b};
    Axis rho_axis{std::log10(rho_min), 0.0, true};

    LocalGridPoint best;
    best.e_u = kInf;
    std::vector<double> tau(static_cast<std::size_t>(n));
    for (int level = 0; level <= options.refine_levels; ++level) {
        int best_i = -1;
        int best_j = -1;
        double level_e = kInf;
        for (int i = 1; i <= tau_axis.last(n); ++i) tau[static_cast<std::size_t>(i - 1)] = tau_axis.value(i, n);
        for (int j = 1; j <= rho_axis.last(n); ++j) {
            const double rho = rho_axis.value(j, n);
            if (!(rho > 0.0 && rho < 1.0)) continue;
            const double spectral = std::log1p(rho * snr) / ln2;
            const double harvest_rate = params.eta * (1.0 - rho) * params.p_ap * g_ap_u;
            for (int i = 1; i <= tau_axis.last(n); ++i) {
                const double t = tau[static_cast<std::size_t>(i - 1)];
                if (!(t > 0.0 && t < params.t_b)) continue;
                const double rate = params.bandwidth * t / params.t_b * spectral;
                if (rate < params.r_th) continue;
                if ((params.t_b - t) * params.f_op < params.k_ops * rate * params.t_b) continue;
                const double e = per_bit * rate * params.t_b - harvest_rate * t - iota - e_s;
                if (e < level_e) {
                    level_e = e;
                    if (e < best.e_u) best = {t, rho, e};
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i < 0) {
            if (level == 0) throw NoFeasiblePoint("no lattice point satisfies the local constraints");
            break;
        }
        tau_axis = tau_axis.zoom(best_i, n, zoom_width(n));
        if (level + 1 >= kFullRangeLevels) rho_axis = rho_axis.zoom(best_j, n, zoom_width(n));
    }
    return best;
}

OffloadGridPoint grid_search_offload(const SystemParams& params, const LinkGains& gains, double iota,
                                     double e_s, const GridOptions& options) {
    check_grid(options);
    const int n = options.n_grid;
    OffloadBudget budget;
    try {
        budget = offload_budget(params, gains.fu);
    } catch (const InfeasibleError&) {
        throw NoFeasiblePoint("fog compute and feedback fill the block");
    }
    const double b = params.bits_per_hz();
    const double a = params.noise_s / gains.uf;
    const double d = params.noise_n / (params.p_ap * gains.ap_u);
    const double c = params.eta * params.p_ap * gains.ap_u;
    const double fixed = params.xi * params.task_bits() - iota - e_s;
    // smallest power that fits the uplink into the whole budget
    const double p_min = a * std::expm1(ln2 * b / budget.t_frak);
    if (!(p_min < params.p_uf_max)) throw NoFeasiblePoint("uplink cannot fit the budget at p_uf_max");

    Axis tau_axis{0.0, budget.t_frak};
    Axis p_axis{std::log10(p_min), std::log10(params.p_uf_max), true, true, params.p_uf_max};

    OffloadGridPoint best;
    best.e_u = kInf;
    std::vector<double> tau(static_cast<std::size_t>(n));
    std::vector<double> rho(static_cast<std::size_t>(n));
    std::vector<double> harvest(static_cast<std::size_t>(n));
    for (int level = 0; level <= options.refine_levels; ++level) {
        for (int i = 1; i <= tau_axis.last(n); ++i) {
            const auto k = static_cast<std::size_t>(i - 1);
            tau[k] = tau_axis.value(i, n);
            rho[k] = d * std::expm1(ln2 * b / tau[k]);
            harvest[k] = c * (1.0 - rho[k]) * tau[k];
        }
        int best_i = -1;
        int best_j = -1;
        double level_e = kInf;
        for (int j = 1; j <= p_axis.last(n); ++j) {
            const double p = p_axis.value(j, n);
            if (!(p > 0.0 && p <= params.p_uf_max)) continue;
            const double tau_uf = b / (std::log1p(p / a) / ln2);
            const double spend = fixed + p * tau_uf;
            for (int i = 1; i <= tau_axis.last(n); ++i) {
                const auto k = static_cast<std::size_t>(i - 1);
                if (tau[k] + tau_uf > budget.t_frak) break;
                if (!(tau[k] > 0.0) || !(rho[k] < 1.0)) continue;
                const double e = spend - harvest[k];
                if (e < level_e) {
                    level_e = e;
                    if (e < best.e_u) best = {tau[k], p, tau_uf, rho[k], e};
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i < 0) {
            if (level == 0) throw NoFeasiblePoint("no lattice point satisfies the offload constraints");
            break;
        }
        tau_axis = tau_axis.zoom(best_i, n, zoom_width(n));
        if (level + 1 >= kFullRangeLevels) p_axis = p_axis.zoom(best_j, n, zoom_width(n));
    }
    return best;
}

} // namespace swiptfog
