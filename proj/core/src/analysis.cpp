#include "swiptfog/analysis.hpp"

#include "swiptfog/errors.hpp"
#include "swiptfog/local_solver.hpp"
#include "swiptfog/mode_selector.hpp"
#include "swiptfog/offload_solver.hpp"

#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace swiptfog {
namespace {

using std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kBranchPoint = -0.36787944117144233; // -1/e
constexpr int kMaxRefinements = 100;

double rel_gap(double value, double oracle) {
    if (value == oracle) return 0.0;
    return std::abs(value - oracle) / std::abs(oracle);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

/// Bisection on the sign of f over [lo, hi]; f(lo) and f(hi) must have opposite signs.
template <class F>
double bisect_sign(F f, double lo, double hi, double rel_tol) {
    auto g = [&](double x) { return static_cast<double>(sign_of(f(x))); };
    auto tol = [&](double a, double b) {
        return b - a <= rel_tol * std::max({std::abs(a), std::abs(b), 1.0});
    };
    std::uintmax_t max_iter = 400;
    const auto [a, b] = boost::math::tools::bisect(g, lo, hi, tol, max_iter);
    return 0.5 * (a + b);
}

/// Solves p tau 2^(b/tau) = s tau - r for tau in (0, tau_max).
/// With y = b ln2 / tau: y = s b ln2 / r - W(z), z = (p b ln2 / r) e^(s b ln2 / r).
double balance_tau(double p, double s, double r, double b, double tau_max, double hint,
                   LambertBranch& branch) {
    const double bl = b * ln2;
    auto accept = [&](double y) { return y > 0.0 && bl / y < tau_max; };

    if (r == 0.0) {
        const double y = std::log(s / p);
        if (!accept(y)) throw NoCrossover("energy balance has no root in the block");
        branch = LambertBranch::Principal;
        return bl / y;
    }
    const double shift = s * bl / r;
    if (r > 0.0) {
        const double y = shift - lambert_w0_exp(std::log(p * bl / r) + shift);
        if (!accept(y)) throw NoCrossover("energy balance has no root in the block");
        branch = LambertBranch::Principal;
        return bl / y;
    }
    const double z = (p * bl / r) * std::exp(shift);
    if (!(z >= kBranchPoint)) throw NoCrossover("energy balance has no real root");
    double best = kNaN;
    for (auto br : {LambertBranch::Principal, LambertBranch::Lower}) {
        if (br == LambertBranch::Lower && z >= 0.0) continue;
        const double y = shift - lambert_w(z, br);
        if (!accept(y)) continue;
        const double tau = bl / y;
        if (std::isnan(best) || std::abs(tau - hint) < std::abs(best - hint)) {
            best = tau;
            branch = br;
        }
    }
    if (std::isnan(best)) throw NoCrossover("energy balance has no root in the block");
    return best;
}

/// Net energy with no credit: consumed minus harvested.
double core_energy(const ModeSolution& s) { return s.consumed() - s.e_rf; }

struct PathLossTerms {
    bool local_defined = false;
    bool offload_defined = false;
    double tau_l = 0.0;   // local decoding slot
    double c_loc = 0.0;   // 2^(R f_op / (B (f_op - K R))) - 1
    double need_loc = 0.0;
    double e_off = 0.0;   // decoding slot of the clamped offload
    double d_off = 0.0;   // 2^(R T / (B E)) - 1
    double need_off = 0.0;
};

PathLossTerms path_loss_terms(const SystemParams& params, const LinkGains& gains, double iota,
                              double e_s) {
    PathLossTerms t;
    const double ops_rate = params.k_ops * params.r_th;
    const double bits = params.task_bits();
    if (ops_rate < params.f_op) {
        t.local_defined = true;
        t.tau_l = params.t_b * (params.f_op - ops_rate) / params.f_op;
        t.c_loc = std::expm1(ln2 * params.r_th * params.f_op / (params.bandwidth * (params.f_op - ops_rate)));
        t.need_loc = (params.xi + params.k_ops * params.energy_per_op()) * bits - iota - e_s;
    }
    const double tau_fogcpt = params.k_ops * bits / params.f_fogop;
    double tau_fu = 0.0;
    if (params.beta > 0.0)
        tau_fu = params.beta * params.bits_per_hz() / (std::log1p(gains.fu * params.p_fu_max / params.noise_f) / ln2);
    const double f_rate = params.bandwidth * std::log1p(gains.uf * params.p_uf_max / params.noise_s) / ln2;
    const double h = bits / f_rate;
    t.e_off = params.t_b - tau_fogcpt - tau_fu - h;
    if (t.e_off > 0.0) {
        t.offload_defined = true;
        t.d_off = std::expm1(ln2 * bits / (params.bandwidth * t.e_off));
        t.need_off = (params.p_uf_max / f_rate + params.xi) * bits - iota - e_s;
    }
    return t;
}

double gain_to_db(double g) { return g > 0.0 ? -10.0 * std::log10(g) : kInf; }

/// Bisection on the balance need - harvested(L) over L in dB.
double balance_root_db(double need, double slot, double noise_term, double eta, double p_ap) {
    auto f = [&](double loss_db) {
        const double g = gain_from_db(loss_db);
        return need - eta * slot * (p_ap * g - noise_term);
    };
    double lo = -400.0;
    double hi = 800.0;
    if (f(hi) <= 0.0) return kInf;
    if (f(lo) >= 0.0) return -kInf;
    return bisect_sign(f, lo, hi, 1e-15);
}

ThresholdReport path_loss_report(const SystemParams& params, const PathLossTerms& t, double noise_n) {
    if (!t.local_defined && !t.offload_defined)
        throw std::domain_error("neither mode has a defined path loss bound");
    ThresholdReport rep;
    double oracle_loc = -kInf;
    double oracle_off = -kInf;
    double loc = -kInf;
    double off = -kInf;
    if (t.local_defined) {
        const double noise = noise_n * t.c_loc;
        loc = gain_to_db((t.need_loc + params.eta * noise * t.tau_l) / (params.eta * params.p_ap * t.tau_l));
        oracle_loc = balance_root_db(t.need_loc, t.tau_l, noise, params.eta, params.p_ap);
        rep.local_bound = loc;
    }
    if (t.offload_defined) {
        const double noise = noise_n * t.d_off;
        off = gain_to_db((t.need_off + params.eta * noise * t.e_off) / (params.eta * params.p_ap * t.e_off));
        oracle_off = balance_root_db(t.need_off, t.e_off, noise, params.eta, params.p_ap);
        rep.offload_bound = off;
    }
    rep.limiting_mode = loc >= off ? Mode::Local : Mode::Offload;
    rep.value = std::max(loc, off);
    rep.oracle_value = std::max(oracle_loc, oracle_off);
    rep.rel_gap = rel_gap(rep.value, rep.oracle_value);
    return rep;
}

} // namespace

const char* to_string(LambertBranch branch) noexcept {
    return branch == LambertBranch::Principal ? "principal" : "lower";
}

double lambert_w(double x, LambertBranch branch) {
    if (!std::isfinite(x)) throw std::domain_error("lambert_w needs a finite argument");
    if (x < kBranchPoint) throw std::domain_error("lambert_w argument below -1/e");
    if (x == kBranchPoint) return -1.0;
    if (branch == LambertBranch::Principal) return boost::math::lambert_w0(x);
    if (!(x < 0.0)) throw std::domain_error("lower lambert_w branch needs x < 0");
    return boost::math::lambert_wm1(x);
}

double lambert_w0_exp(double log_x) {
    if (log_x < 700.0) return lambert_w(std::exp(log_x), LambertBranch::Principal);
    // w + ln w = log_x by Newton from the asymptotic guess
    double w = log_x - std::log(log_x);
    for (int i = 0; i < 50; ++i) {
        const double step = (w + std::log(w) - log_x) / (1.0 + 1.0 / w);
        w -= step;
        if (std::abs(step) <= 1e-16 * w) break;
    }
    return w;
}

double mode_energy_gap(const SystemParams& params, const LinkGains& gains) {
    const auto c = evaluate_modes(params, gains);
    if (!c.local.solution && !c.offload.solution) return kNaN;
    if (!c.local.solution) return kInf;
    if (!c.offload.solution) return -kInf;
    return c.local.solution->e_u - c.offload.solution->e_u;
}

ThresholdReport max_path_loss(const SystemParams& params, const LinkGains& gains, double iota, double e_s) {
    return path_loss_report(params, path_loss_terms(params, gains, iota, e_s), params.noise_n);
}

ThresholdReport max_path_loss_high_snr(const SystemParams& params, const LinkGains& gains, double iota,
                                       double e_s) {
    if (!(params.k_ops * params.r_th < params.f_op))
        throw std::domain_error("high-SNR bound requires K R_th < f_op");
    return path_loss_report(params, path_loss_terms(params, gains, iota, e_s), 0.0);
}

ThresholdReport k_threshold(const SystemParams& params, const LinkGains& gains) {
    ThresholdReport rep;

    // oracle: sign change of the solver gap over [1, f_op / R_th - 1]
    auto gap = [&](double k) {
        auto p = params;
        p.k_ops = k;
        const double g = mode_energy_gap(p, gains);
        return std::isnan(g) ? kInf : g;
    };
    const double lo = 1.0;
    const double hi = params.f_op / params.r_th - 1.0;
    if (!(hi > lo)) throw NoCrossover("K bracket is empty");
    const int s_lo = sign_of(gap(lo));
    const int s_hi = sign_of(gap(hi));
    if (s_lo == 0) rep.oracle_value = lo;
    else if (s_hi == 0) rep.oracle_value = hi;
    else if (s_lo == s_hi) throw NoCrossover("local and offload energies do not cross for K in [1, f_op/R_th - 1]");
    else rep.oracle_value = bisect_sign(gap, lo, hi, 1e-15);

    // closed form: local energy with K eliminated through tau = T (1 - K R / f_op)
    // equals the offload energy, which is refreshed at each new K
    const double big_g = params.p_ap * gains.ap_u;
    const double p = params.eta * params.noise_n;
    const double s = params.energy_per_op() * params.f_op + params.eta * big_g + p;
    const double b = params.bits_per_hz();
    double k = std::clamp(params.k_ops, lo, hi);
    double tau_hint = params.t_b * (1.0 - k * params.r_th / params.f_op);
    for (rep.refinements = 1; rep.refinements <= kMaxRefinements; ++rep.refinements) {
        auto pk = params;
        pk.k_ops = k;
        const auto off = try_solve_offload(pk, gains, 0.0, 0.0);
        if (!off.solution) throw NoCrossover("offload infeasible while refining K0");
        const double q = core_energy(*off.solution);
        const double r = params.xi * params.task_bits() + params.energy_per_op() * params.f_op * params.t_b - q;
        const double tau = balance_tau(p, s, r, b, params.t_b, tau_hint, rep.branch_used);
        const double k_next = params.f_op * (params.t_b - tau) / (params.r_th * params.t_b);
        tau_hint = tau;
        const bool done = std::abs(k_next - k) <= 1e-15 * std::abs(k_next);
        k = k_next;
        if (done) break;
    }
    rep.value = k;
    rep.rel_gap = rel_gap(rep.value, rep.oracle_value);
    rep.precondition_holds = rep.value * params.task_bits() <= 1e-3 * params.f_fogop * params.t_b;
    rep.printed_branch = kPrintedKBranch;
    rep.printed_value = printed_k_threshold(params, gains, kPrintedKBranch);
    return rep;
}

ThresholdReport beta_threshold(const SystemParams& params, const LinkGains& gains) {
    ThresholdReport rep;

    auto gap = [&](double log_beta) {
        auto p = params;
        p.beta = std::pow(10.0, log_beta);
        return mode_energy_gap(p, gains);
    };
    // log-spaced scan over [1e-4, 1e4], then bisection on the first sign change
    constexpr int kScan = 80;
    double prev_x = -4.0;
    double prev_g = gap(prev_x);
    bool found = false;
    for (int i = 1; i <= kScan && !found; ++i) {
        const double x = -4.0 + 8.0 * i / kScan;
        const double g = gap(x);
        if (!std::isnan(prev_g) && !std::isnan(g) && sign_of(prev_g) != sign_of(g)) {
            if (sign_of(prev_g) == 0) rep.oracle_value = std::pow(10.0, prev_x);
            else if (sign_of(g) == 0) rep.oracle_value = std::pow(10.0, x);
            else rep.oracle_value = std::pow(10.0, bisect_sign(gap, prev_x, x, 1e-15));
            found = true;
        }
        prev_x = x;
        prev_g = g;
    }
    if (!found) throw NoCrossover("local and offload energies do not cross for beta in [1e-4, 1e4]");

    // closed form: offload energy with its uplink cost frozen, decoding slot solved by Lambert W,
    // beta recovered from the feedback slot; the uplink cost is refreshed at each new beta
    const auto loc = try_solve_local(params, gains.ap_u, 0.0, 0.0);
    if (!loc.solution) throw NoCrossover("local computing infeasible");
    const double q_loc = core_energy(*loc.solution);
    const double big_g = params.p_ap * gains.ap_u;
    const double p = params.eta * params.noise_n;
    const double s = params.eta * big_g + p;
    const double b = params.bits_per_hz();
    const double per_beta = b / (std::log1p(gains.fu * params.p_fu_max / params.noise_f) / ln2);
    const double tau_fogcpt = params.k_ops * params.task_bits() / params.f_fogop;

    double beta = params.beta;
    {
        auto pb = params;
        pb.beta = beta;
        if (!try_solve_offload(pb, gains, 0.0, 0.0).solution) beta = 1e-4;
    }
    double tau_hint = 0.0;
    for (rep.refinements = 1; rep.refinements <= kMaxRefinements; ++rep.refinements) {
        auto pb = params;
        pb.beta = beta;
        const auto off = try_solve_offload(pb, gains, 0.0, 0.0);
        if (!off.solution) throw NoCrossover("offload infeasible while refining beta0");
        const auto& o = *off.solution;
        if (tau_hint == 0.0) tau_hint = o.tau_ipt;
        const double r = params.xi * params.task_bits() + o.e_uf - q_loc;
        const double tau_max = params.t_b - tau_fogcpt - o.tau_uf;
        const double tau = balance_tau(p, s, r, b, tau_max, tau_hint, rep.branch_used);
        const double beta_next = (params.t_b - tau_fogcpt - (tau + o.tau_uf)) / per_beta;
        if (!(beta_next > 0.0)) throw NoCrossover("offload stays cheaper as beta -> 0");
        tau_hint = tau;
        const bool done = std::abs(beta_next - beta) <= 1e-15 * std::abs(beta_next);
        beta = beta_next;
        if (done) break;
    }
    rep.value = beta;
    rep.rel_gap = rel_gap(rep.value, rep.oracle_value);
    rep.printed_branch = kPrintedBetaBranch;
    rep.printed_value = printed_beta_threshold(params, gains, kPrintedBetaBranch);
    return rep;
}

double printed_k_threshold(const SystemParams& params, const LinkGains& gains, LambertBranch branch) {
    const double psi = ln2 * params.r_th * params.t_b;
    const double a = params.energy_per_op();
    const double g = params.p_ap * gains.ap_u;
    const double f = params.bandwidth * std::log1p(gains.uf * params.p_uf_max / params.noise_s) / ln2;
    const double h = params.r_th * params.t_b / f;
    const double gh = g * h;
    const double en = params.eta * params.noise_n;
    const double x = a * psi * params.f_op + params.eta * g * psi + en * psi;
    const double arg = -(en * psi / gh) * std::exp(-(a * params.f_op + params.eta * g + en) * psi / gh);
    double w = kNaN;
    try {
        w = lambert_w(arg, branch);
    } catch (const std::domain_error&) {
        return kNaN;
    }
    return params.f_op * (x + w * gh + ln2 * params.r_th * h) / (params.r_th * (x + w * gh));
}

double printed_beta_threshold(const SystemParams& params, const LinkGains& gains, LambertBranch branch) {
    const double psi = ln2 * params.r_th * params.t_b;
    const double bits = params.task_bits();
    const double g = params.p_ap * gains.ap_u;
    const double en = params.eta * params.noise_n;
    const double f = params.bandwidth * std::log1p(gains.uf * params.p_uf_max / params.noise_s) / ln2;
    const double h = bits / f;
    const double ops_rate = params.k_ops * params.r_th;
    const double c = std::expm1(ln2 * params.r_th * params.f_op / (params.bandwidth * (params.f_op - ops_rate)));
    const double i = params.k_ops * params.energy_per_op() * bits -
                     params.eta * g * (params.t_b - ops_rate * params.t_b / params.f_op) *
                         (1.0 - params.noise_n * c / g) -
                     params.p_uf_max * h;
    const double j = params.t_b - h - params.k_ops * bits / params.f_fogop;
    const double l = params.bandwidth * (std::log1p(gains.fu * params.p_fu_max / params.noise_f) / ln2) / bits;
    const double ij = i * j;
    const double arg = -(en * psi / ij) * std::exp(-params.eta * (g + params.noise_n) * psi / ij);
    double w = kNaN;
    try {
        w = lambert_w(arg, branch);
    } catch (const std::domain_error&) {
        return kNaN;
    }
    return l * (g + i * psi / (params.eta * g * psi + en * psi + w * ij));
}

} // namespace swiptfog
