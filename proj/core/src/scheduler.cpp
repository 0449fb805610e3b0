#include "swiptfog/scheduler.hpp"

#include "swiptfog/mode_selector.hpp"
#include "swiptfog/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swiptfog {
namespace {

struct Context {
    const SystemParams& params;
    std::span<const LinkGains> gains;
    std::span<const double> e_s;
    std::vector<ModeCandidates> candidates;

    Context(const SystemParams& p, std::span<const LinkGains> g, std::span<const double> s)
        : params(p), gains(g), e_s(s) {
        if (g.empty()) throw std::invalid_argument("schedule needs at least one MU");
        if (g.size() != s.size()) throw std::invalid_argument("gains and e_s differ in length");
        candidates.reserve(g.size());
        for (const auto& link : g) candidates.push_back(evaluate_modes(p, link));
    }

    [[nodiscard]] std::size_t size() const { return gains.size(); }

    [[nodiscard]] ModeSolution serve(std::size_t m, double iota) const {
        if (auto s = choose_mode(candidates[m], iota, e_s[m])) return *s;
        return harvest_only(params, gains[m].ap_u, iota, e_s[m]);
    }

    [[nodiscard]] double total(std::span<const std::size_t> order) const {
        double iota = 0.0;
        double sum = 0.0;
        for (auto m : order) {
            const auto s = serve(m, iota);
            sum += s.e_u;
            iota += broadcast_increment(params, gains[m].ap_u, s.tau_ipt);
        }
        return sum;
    }

    [[nodiscard]] Schedule run(std::span<const std::size_t> order) const {
        const auto n = size();
        Schedule out;
        out.order.assign(order.begin(), order.end());
        out.psi.assign(n, std::vector<int>(n, 0));
        double iota = 0.0;
        for (std::size_t t = 0; t < order.size(); ++t) {
            const auto m = order[t];
            out.psi[m][t] = 1;
            auto s = serve(m, iota);
            out.iota_trace.push_back(iota);
            out.total_e_u += s.e_u;
            iota += broadcast_increment(params, gains[m].ap_u, s.tau_ipt);
            out.solutions.push_back(std::move(s));
        }
        return out;
    }
};

void check_order(std::span<const std::size_t> order, std::size_t n) {
    if (order.size() != n) throw std::invalid_argument("order length differs from MU count");
    std::vector<char> seen(n, 0);
    for (auto m : order) {
        if (m >= n || seen[m]) throw std::invalid_argument("order is not a permutation");
        seen[m] = 1;
    }
}

template <class Better>
Schedule enumerate(const Context& ctx, Better better) {
    if (ctx.size() > kMaxExhaustiveUsers)
        throw std::invalid_argument("exhaustive search is limited to " + std::to_string(kMaxExhaustiveUsers) +
                                    " MUs (" + std::to_string(ctx.size()) +
                                    " given); use greedy_schedule for larger frames");
    std::vector<std::size_t> order(ctx.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto best_order = order;
    double best = ctx.total(order);
    while (std::next_permutation(order.begin(), order.end())) {
        const double v = ctx.total(order);
        if (better(v, best)) {
            best = v;
            best_order = order;
        }
    }
    return ctx.run(best_order);
}

} // namespace

double broadcast_increment(const SystemParams& params, double g_ap_u_prev, double tau_ipt_prev) noexcept {
    return params.eta * params.p_ap * g_ap_u_prev * tau_ipt_prev;
}

ModeSolution harvest_only(const SystemParams& params, double g_ap_u, double iota, double e_s) {
    ModeSolution s;
    s.mode = Mode::HarvestOnly;
    s.tau_ipt = params.t_b;
    s.rho = 0.0;
    s.e_rf = params.eta * params.p_ap * g_ap_u * params.t_b;
    s.e_eh = s.e_rf + iota;
    s.iota = iota;
    s.e_s = e_s;
    s.e_u = 0.0;
    return s;
}

Schedule evaluate_order(const SystemParams& params, std::span<const LinkGains> gains,
                        std::span<const double> e_s, std::span<const std::size_t> order) {
    Context ctx(params, gains, e_s);
    check_order(order, ctx.size());
    return ctx.run(order);
}

Schedule greedy_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                         std::span<const double> e_s) {
    Context ctx(params, gains, e_s);
    const auto n = ctx.size();
    std::vector<char> done(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    double iota = 0.0;

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pick = n;
        double pick_e_u = 0.0;
        double pick_tau = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            if (done[m]) continue;
            auto s = choose_mode(ctx.candidates[m], iota, e_s[m]);
            if (!s) continue;
            if (pick == n || s->e_u < pick_e_u) {
                pick = m;
                pick_e_u = s->e_u;
                pick_tau = s->tau_ipt;
            }
        }
        if (pick == n) break;  // only infeasible MUs remain
        done[pick] = 1;
        order.push_back(pick);
        iota += broadcast_increment(params, gains[pick].ap_u, pick_tau);
    }
    for (std::size_t m = 0; m < n; ++m)
        if (!done[m]) order.push_back(m);
    return ctx.run(order);
}

Schedule random_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                         std::span<const double> e_s, std::uint64_t seed) {
    Context ctx(params, gains, e_s);
    std::vector<std::size_t> order(ctx.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto engine = make_engine(seed, Stream::Order);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[uniform_below(engine, i)]);
    return ctx.run(order);
}

Schedule exhaustive_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                             std::span<const double> e_s) {
    Context ctx(params, gains, e_s);
    return enumerate(ctx, [](double v, double best) { return v < best; });
}

Schedule worst_schedule(const SystemParams& params, std::span<const LinkGains> gains,
                        std::span<const double> e_s) {
    Context ctx(params, gains, e_s);
    return enumerate(ctx, [](double v, double best) { return v > best; });
}

} // namespace swiptfog
