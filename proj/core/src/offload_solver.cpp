#include "swiptfog/offload_solver.hpp"

#include "swiptfog/local_solver.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace swiptfog {
namespace {

using std::numbers::ln2;

OffloadBudget unchecked_budget(const SystemParams& params, double g_fu) {
    OffloadBudget b;
    b.tau_fogcpt = params.k_ops * params.task_bits() / params.f_fogop;
    if (params.beta > 0.0) {
        const double spectral = std::log1p(g_fu * params.p_fu_max / params.noise_f) / ln2;
        b.tau_fu = params.beta * params.bits_per_hz() / spectral;
    }
    b.t_frak = params.t_b - b.tau_fogcpt - b.tau_fu;
    return b;
}

void check_domain(const OffloadTerms& t, double tau) {
    if (!(tau > 0.0 && tau < t.t_frak))
        throw std::domain_error("tau_ipt outside the open interval (0, t_frak)");
}

Attempt solve_with_budget(const SystemParams& params, const LinkGains& gains,
                          const OffloadBudget& budget, double iota, double e_s) {
    if (!(budget.t_frak > 0.0)) return {std::nullopt, {Infeasibility::BudgetExhausted}};
    const double tau_uf_min = min_uplink_time(params, gains.uf);
    if (!(tau_uf_min < budget.t_frak)) return {std::nullopt, {Infeasibility::LinkTooWeak}};
    if (!(gains.ap_u > 0.0)) return {std::nullopt, {Infeasibility::ChannelTooWeak}};

    const auto terms = offload_terms(params, gains, budget, 0.0, 0.0);
    const auto stationary = find_stationary_point(terms, params.t_b);
    const double alpha = stationary.tau;

    ModeSolution s;
    s.mode = Mode::Offload;
    s.tau_fogcpt = budget.tau_fogcpt;
    s.tau_fu = budget.tau_fu;
    s.required_power = terms.a * std::expm1(ln2 * terms.b / (budget.t_frak - alpha));
    if (s.required_power <= params.p_uf_max) {
        s.tau_ipt = alpha;
        s.tau_uf = budget.t_frak - alpha;
        s.p_uf = s.required_power;
    } else {
        s.power_clamped = true;
        s.p_uf = params.p_uf_max;
        s.tau_uf = tau_uf_min;
        s.tau_ipt = budget.t_frak - tau_uf_min;
    }
    s.rho = terms.d * std::expm1(ln2 * terms.b / s.tau_ipt);
    if (!(s.rho <= kRhoCeiling)) return {std::nullopt, {Infeasibility::ChannelTooWeak}};

    s.e_id = params.xi * params.task_bits();
    s.e_uf = s.p_uf * s.tau_uf;
    s.e_rf = params.eta * (1.0 - s.rho) * params.p_ap * gains.ap_u * s.tau_ipt;
    return {with_credit(s, iota, e_s), {}};
}

} // namespace

OffloadBudget offload_budget(const SystemParams& params, double g_fu) {
    auto b = unchecked_budget(params, g_fu);
    if (!(b.t_frak > 0.0)) throw InfeasibleError(Infeasibility::BudgetExhausted);
    return b;
}

double min_uplink_time(const SystemParams& params, double g_uf) {
    const double spectral = std::log1p(g_uf * params.p_uf_max / params.noise_s) / ln2;
    return params.bits_per_hz() / spectral;
}

Verdict offload_feasible(const SystemParams& params, double g_uf, const OffloadBudget& budget,
                         double g_ap_u) {
    return solve_with_budget(params, {g_ap_u, g_uf, 0.0}, budget, 0.0, 0.0).verdict;
}

Verdict offload_feasible(const SystemParams& params, const LinkGains& gains) {
    return try_solve_offload(params, gains, 0.0, 0.0).verdict;
}

OffloadTerms offload_terms(const SystemParams& params, const LinkGains& gains,
                           const OffloadBudget& budget, double iota, double e_s) {
    OffloadTerms t;
    t.a = params.noise_s / gains.uf;
    t.b = params.bits_per_hz();
    t.c = params.eta * params.p_ap * gains.ap_u;
    t.d = params.noise_n / (params.p_ap * gains.ap_u);
    t.t_frak = budget.t_frak;
    t.fixed = params.xi * params.task_bits() - iota - e_s;
    return t;
}

double vartheta(const OffloadTerms& t, double tau) {
    check_domain(t, tau);
    const double u = t.t_frak - tau;
    const double uplink = u * t.a * std::expm1(ln2 * t.b / u);
    const double noise = t.d > 0.0 ? t.d * std::expm1(ln2 * t.b / tau) : 0.0;
    const double harvest = t.c > 0.0 ? tau * t.c * (1.0 - noise) : 0.0;
    return t.fixed + uplink - harvest;
}

double vartheta(const SystemParams& params, const LinkGains& gains, double tau_ipt, double iota,
                double e_s) {
    const auto budget = offload_budget(params, gains.fu);
    return vartheta(offload_terms(params, gains, budget, iota, e_s), tau_ipt);
}

double vartheta_prime(const OffloadTerms& t, double tau) {
    check_domain(t, tau);
    const double x = ln2 * t.b / (t.t_frak - tau);
    const double y = ln2 * t.b / tau;
    // e^x (x - 1) + 1 and e^y (1 - y) - 1, rearranged around expm1
    const double up = std::expm1(x) * (x - 1.0) + x;
    const double down = std::expm1(y) * (1.0 - y) - y;
    const double cd = t.c * t.d;
    return t.a * up + (cd > 0.0 ? cd * down : 0.0) - t.c;
}

double vartheta_prime(const SystemParams& params, const LinkGains& gains, double tau_ipt) {
    const auto budget = offload_budget(params, gains.fu);
    return vartheta_prime(offload_terms(params, gains, budget, 0.0, 0.0), tau_ipt);
}

int vartheta_prime_sign(const OffloadTerms& t, double tau) {
    const double v = vartheta_prime(t, tau);
    if (!std::isnan(v)) return (v > 0.0) - (v < 0.0);
    // both exponentials overflowed: compare the dominant terms in log space
    const double x = ln2 * t.b / (t.t_frak - tau);
    const double y = ln2 * t.b / tau;
    const double up = std::log(t.a) + x + std::log(x - 1.0);
    const double down = std::log(t.c * t.d) + y + std::log(y - 1.0);
    return (up > down) - (up < down);
}

StationaryPoint find_stationary_point(const OffloadTerms& terms, double t_b,
                                      const std::function<void(double, int)>& observer) {
    StationaryPoint sp;
    sp.lo = kBracketInset * terms.t_frak;
    sp.hi = (1.0 - kBracketInset) * terms.t_frak;
    const int s_lo = vartheta_prime_sign(terms, sp.lo);
    const int s_hi = vartheta_prime_sign(terms, sp.hi);
    sp.evaluations = 2;

    if (s_lo < 0 && s_hi > 0) {
        auto f = [&](double tau) {
            const int s = vartheta_prime_sign(terms, tau);
            ++sp.evaluations;
            if (observer) observer(tau, s);
            return static_cast<double>(s);
        };
        auto tol = [&](double lo, double hi) { return hi - lo <= kTauTolerance * t_b; };
        std::uintmax_t max_iter = 400;
        const auto [lo, hi] = boost::math::tools::bisect(f, sp.lo, sp.hi, tol, max_iter);
        sp.lo = lo;
        sp.hi = hi;
        sp.tau = 0.5 * (lo + hi);
        sp.interior = true;
        return sp;
    }

    auto shape = terms;
    shape.fixed = 0.0;
    sp.tau = vartheta(shape, sp.lo) <= vartheta(shape, sp.hi) ? sp.lo : sp.hi;
    return sp;
}

Attempt try_solve_offload(const SystemParams& params, const LinkGains& gains, double iota, double e_s) {
    return solve_with_budget(params, gains, unchecked_budget(params, gains.fu), iota, e_s);
}

ModeSolution solve_offload(const SystemParams& params, const LinkGains& gains, double iota, double e_s) {
    auto attempt = try_solve_offload(params, gains, iota, e_s);
    if (!attempt.solution) throw InfeasibleError(attempt.verdict.reason);
    return *attempt.solution;
}

} // namespace swiptfog
