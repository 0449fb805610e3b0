#pragma once

#include <swiptfog/channel.hpp>
#include <swiptfog/params.hpp>

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace swiptfog::tools {

/// System parameters plus the settings of every scenario.
struct RunConfig {
    SystemParams params;

    int realizations = 200;
    std::uint64_t seed = 1;
    int grid_res = 41;  ///< points per axis of the placement maps

    // single-MU geometry
    double d_ap_u = 10.0;
    double d_uf = 8.0;
    double d_ap_f = 20.0;  ///< HAP-FS separation for line-placement

    // sweeps
    double k_min = 1e2;
    double k_max = 1e5;
    int k_points = 61;
    double beta_min = 1e-2;
    double beta_max = 1e4;
    int beta_points = 61;
    double dist_min = 1.0;
    double dist_max = 20.0;
    int dist_points = 77;
    int line_points = 77;

    // placement maps, csi-error
    Point hap_pos{0.0, 0.0};
    Point fs_pos{0.0, 20.0};
    double area_x_min = -20.0;
    double area_x_max = 20.0;
    double area_y_min = -10.0;
    double area_y_max = 30.0;
    std::vector<double> pap_values{0.5, 1.0, 2.0, 5.0, 10.0};
    std::vector<double> eps_values{0.0, 0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.10};

    // frames
    int n_frames = 100;
    std::vector<double> frame_distances{18.0, 20.0};
    std::optional<double> battery_cap;
    double initial_e_s = 0.0;

    // multiuser
    int m_min = 2;
    int m_max = 6;
    double mu_r_min = 2.0;   ///< MUs are dropped uniformly on an annulus around the HAP
    double mu_r_max = 15.0;

    /// Throws ConfigError.
    void validate() const;
};

/// Reads `key = value` lines. Parameter keys and run keys share one namespace; unknown keys are errors.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

/// Run settings (not the system parameters) as printable pairs.
std::vector<std::pair<std::string, std::string>> run_entries(const RunConfig& config);

} // namespace swiptfog::tools
