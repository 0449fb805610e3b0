#pragma once

#include "swiptfog/channel.hpp"
#include "swiptfog/params.hpp"
#include "swiptfog/solution.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace swiptfog {

/// One MU's battery.
struct BatteryState {
    double e_s = 0.0;                ///< stored energy, J
    std::optional<double> capacity;  ///< saturation level, J; unbounded when empty
};

/// What happened in one block.
struct BlockOutcome {
    Mode mode = Mode::HarvestOnly;
    ModeSolution solution;  ///< ledger built with e_s = 0, so e_u is the block's net demand
    double demand = 0.0;    ///< e_u drawn from the battery (negative charges it); 0 when harvesting
    double harvested = 0.0; ///< J entering the battery side of the ledger
    double consumed = 0.0;  ///< J spent on decoding, computing or offloading
    double spilled = 0.0;   ///< J lost to the capacity cap
};

struct StepResult {
    BlockOutcome outcome;
    BatteryState battery;
};

/// Serves the block iff the MU can afford max(e_u, 0) from storage, else harvests for the whole block.
StepResult step_block(const SystemParams& params, const BatteryState& battery, const LinkGains& gains,
                      double iota);

struct FrameRecord {
    int frame = 0;
    int mu = 0;
    int block = 0;       ///< position of the MU in the frame's order
    Mode mode = Mode::HarvestOnly;
    double e_s = 0.0;    ///< storage after the block, J
    double e_u = 0.0;    ///< net demand of the block, J
    double e_eh = 0.0;   ///< harvested incl. broadcast credit, J
};

struct FrameTrace {
    int n_frames = 0;
    int n_mu = 0;
    std::vector<FrameRecord> records;  ///< frame-major, then block order
    std::vector<double> e_s_start;
    std::vector<double> e_s_end;
    double total_harvested = 0.0;
    double total_consumed = 0.0;
    double total_spilled = 0.0;

    /// Storage of `mu` at the end of `frame`.
    [[nodiscard]] double e_s_at(int frame, int mu) const;
    [[nodiscard]] int harvest_only_blocks(int mu) const;

    /// Columns: frame, mu, mode, e_s, e_u, e_eh.
    void write_csv(std::ostream& out) const;
};

struct FrameOptions {
    std::optional<double> battery_cap;
    double initial_e_s = 0.0;
};

/// Block-fading channels per (MU, frame), greedy order per frame, batteries carried across frames.
FrameTrace run_frames(const SystemParams& params, const Geometry& geometry, int n_frames,
                      std::uint64_t seed, const FrameOptions& options = {});

} // namespace swiptfog
