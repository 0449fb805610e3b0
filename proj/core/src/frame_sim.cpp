#include "swiptfog/frame_sim.hpp"

#include "swiptfog/format.hpp"
#include "swiptfog/mode_selector.hpp"
#include "swiptfog/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

namespace swiptfog {

StepResult step_block(const SystemParams& params, const BatteryState& battery, const LinkGains& gains,
                      double iota) {
    StepResult r;
    r.battery = battery;
    auto& o = r.outcome;
    double next = battery.e_s;

    const auto candidate = try_select_mode(params, gains, iota, 0.0);
    if (candidate && std::max(candidate->e_u, 0.0) <= battery.e_s) {
        o.mode = candidate->mode;
        o.solution = *candidate;
        o.demand = candidate->e_u;
        o.harvested = candidate->e_eh;
        o.consumed = candidate->consumed();
        next = battery.e_s - o.demand;
    } else {
        o.mode = Mode::HarvestOnly;
        o.solution = harvest_only(params, gains.ap_u, iota, 0.0);
        o.harvested = o.solution.e_eh;
        next = battery.e_s + o.harvested;
    }
    if (battery.capacity && next > *battery.capacity) {
        o.spilled = next - *battery.capacity;
        next = *battery.capacity;
    }
    r.battery.e_s = next;
    return r;
}

double FrameTrace::e_s_at(int frame, int mu) const {
    for (const auto& rec : records)
        if (rec.frame == frame && rec.mu == mu) return rec.e_s;
    throw std::out_of_range("no record for this frame and MU");
}

int FrameTrace::harvest_only_blocks(int mu) const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [mu](const FrameRecord& r) {
        return r.mu == mu && r.mode == Mode::HarvestOnly;
    }));
}

void FrameTrace::write_csv(std::ostream& out) const {
    out << "frame,mu,mode,e_s,e_u,e_eh\n";
    for (const auto& r : records) {
        out << r.frame << ',' << r.mu << ',' << to_string(r.mode) << ',' << format_number(r.e_s) << ','
            << format_number(r.e_u) << ',' << format_number(r.e_eh) << '\n';
    }
}

FrameTrace run_frames(const SystemParams& params, const Geometry& geometry, int n_frames,
                      std::uint64_t seed, const FrameOptions& options) {
    if (n_frames < 1) throw std::invalid_argument("n_frames must be >= 1");
    geometry.validate();
    const auto n_mu = geometry.mu_pos.size();

    FrameTrace trace;
    trace.n_frames = n_frames;
    trace.n_mu = static_cast<int>(n_mu);
    std::vector<BatteryState> batteries(n_mu, BatteryState{options.initial_e_s, options.battery_cap});
    for (const auto& b : batteries) trace.e_s_start.push_back(b.e_s);
    trace.records.reserve(static_cast<std::size_t>(n_frames) * n_mu);

    std::vector<LinkGains> gains(n_mu);
    std::vector<double> stored(n_mu);
    for (int frame = 0; frame < n_frames; ++frame) {
        for (std::size_t m = 0; m < n_mu; ++m) {
            gains[m] = gen_channel(params, geometry, m, seed, static_cast<std::uint64_t>(frame)).gains();
            stored[m] = batteries[m].e_s;
        }
        const auto plan = greedy_schedule(params, gains, stored);

        double iota = 0.0;
        for (std::size_t t = 0; t < plan.order.size(); ++t) {
            const auto m = plan.order[t];
            const auto step = step_block(params, batteries[m], gains[m], iota);
            batteries[m] = step.battery;
            const auto& o = step.outcome;
            trace.total_harvested += o.harvested;
            trace.total_consumed += o.consumed;
            trace.total_spilled += o.spilled;
            trace.records.push_back({frame, static_cast<int>(m), static_cast<int>(t), o.mode,
                                     batteries[m].e_s, o.demand, o.harvested});
            iota += broadcast_increment(params, gains[m].ap_u, o.solution.tau_ipt);
        }
    }
    for (const auto& b : batteries) trace.e_s_end.push_back(b.e_s);
    return trace;
}

} // namespace swiptfog
