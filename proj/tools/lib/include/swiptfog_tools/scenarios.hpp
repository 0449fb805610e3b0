#pragma once

#include "swiptfog_tools/config.hpp"
#include "swiptfog_tools/table.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swiptfog::tools {

struct ScenarioResult {
    std::vector<Table> tables;  ///< the first table carries the scenario's name
    /// Values that are not reproducible between runs (wall-clock timings). Kept out of the CSVs.
    std::vector<std::pair<std::string, double>> timings;
};

using ScenarioFn = ScenarioResult (*)(const RunConfig&, int threads);

struct ScenarioInfo {
    const char* name;
    const char* summary;
    ScenarioFn run;
};

std::span<const ScenarioInfo> scenario_list();
/// nullptr for an unknown name.
const ScenarioInfo* find_scenario(std::string_view name);

/// Per-mode energies versus K, log-spaced in [k_min, k_max].
ScenarioResult run_sweep_k(const RunConfig& config, int threads);
/// Per-mode energies versus d_ap_u in [dist_min, dist_max] with d_uf fixed.
ScenarioResult run_sweep_dist(const RunConfig& config, int threads);
/// MU on the HAP-FS segment of length d_ap_f.
ScenarioResult run_line_placement(const RunConfig& config, int threads);
/// Mode map over the placement area, grid_res points per axis.
ScenarioResult run_placement_grid(const RunConfig& config, int threads);
/// Mode maps for each P_AP in pap_values, plus area shares.
ScenarioResult run_sweep_pap(const RunConfig& config, int threads);
/// Per-mode energies versus beta, log-spaced in [beta_min, beta_max].
ScenarioResult run_sweep_beta(const RunConfig& config, int threads);
/// Battery traces over n_frames for each distance in frame_distances.
ScenarioResult run_frames_scenario(const RunConfig& config, int threads);
/// Greedy, random, exhaustive and worst-order totals for M in [m_min, m_max].
ScenarioResult run_multiuser(const RunConfig& config, int threads);
/// Plans on perturbed CSI and replays them on the true channel, for each eps in eps_values.
ScenarioResult run_csi_error(const RunConfig& config, int threads);

} // namespace swiptfog::tools
