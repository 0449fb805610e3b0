#include "swiptfog_tools/runner.hpp"

#include "swiptfog_tools/config.hpp"
#include "swiptfog_tools/parallel.hpp"
#include "swiptfog_tools/scenarios.hpp"

#include <swiptfog/errors.hpp>
#include <swiptfog/format.hpp>

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#ifndef SWIPTFOG_GIT_DESCRIBE
#define SWIPTFOG_GIT_DESCRIBE "unknown"
#endif

namespace swiptfog::tools {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

ordered_json number_json(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

bool writable_dir(const fs::path& dir, std::string& why) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        why = ec.message();
        return false;
    }
    if (!fs::is_directory(dir, ec)) {
        why = "not a directory";
        return false;
    }
    const auto probe = dir / ".swipt-fog-probe";
    {
        std::ofstream out(probe);
        if (!out || !(out << "probe")) {
            why = "cannot create files";
            return false;
        }
    }
    fs::remove(probe, ec);
    return true;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("failed to write " + path.string());
}

} // namespace

const char* build_describe() noexcept { return SWIPTFOG_GIT_DESCRIBE; }

int run_request(const RunRequest& request, std::ostream& err) {
    const auto* scenario = find_scenario(request.scenario);
    if (!scenario) {
        err << "unknown scenario '" << request.scenario << "'; known:";
        for (const auto& s : scenario_list()) err << ' ' << s.name;
        err << '\n';
        return kExitUnknownScenario;
    }

    RunConfig config;
    int threads = 1;
    try {
        config = load_config(request.config);
        if (request.realizations) {
            if (*request.realizations < 1 || *request.realizations > std::numeric_limits<int>::max())
                throw ConfigError("--realizations must be >= 1");
            config.realizations = static_cast<int>(*request.realizations);
        }
        if (request.seed) config.seed = *request.seed;
        if (request.grid_res) {
            if (*request.grid_res < 2 || *request.grid_res > 100000) throw ConfigError("--grid-res must be in [2, 100000]");
            config.grid_res = static_cast<int>(*request.grid_res);
        }
        config.validate();
        threads = thread_count();
    } catch (const ConfigError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitInvalidConfig;
    }

    std::string why;
    if (!writable_dir(request.out_dir, why)) {
        err << "output directory " << request.out_dir.string() << " is not writable: " << why << '\n';
        return kExitUnwritableOutput;
    }

    const auto t0 = std::chrono::steady_clock::now();
    ScenarioResult result;
    try {
        result = scenario->run(config, threads);
    } catch (const std::exception& e) {
        err << scenario->name << " failed: " << e.what() << '\n';
        return kExitFailure;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ordered_json manifest;
    manifest["scenario"] = scenario->name;
    manifest["seed"] = config.seed;
    manifest["realizations"] = config.realizations;
    manifest["grid_res"] = config.grid_res;
    manifest["threads"] = threads;
    manifest["git_describe"] = build_describe();
    manifest["wall_time_s"] = wall;
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : param_entries(config.params)) params[name] = number_json(value);
    manifest["params"] = params;
    ordered_json run = ordered_json::object();
    for (const auto& [name, value] : run_entries(config)) run[name] = value;
    manifest["run"] = run;
    ordered_json files = ordered_json::array();
    try {
        for (const auto& table : result.tables) {
            std::ostringstream csv, cols;
            table.write_csv(csv);
            table.write_columns(cols);
            write_file(request.out_dir / (table.name + ".csv"), csv.str());
            write_file(request.out_dir / (table.name + ".columns.txt"), cols.str());
            files.push_back(table.name + ".csv");
        }
        manifest["outputs"] = files;
        ordered_json timings = ordered_json::object();
        for (const auto& [name, value] : result.timings) timings[name] = value;
        manifest["timings"] = timings;
        write_file(request.out_dir / "manifest.json", manifest.dump(2) + "\n");
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUnwritableOutput;
    }
    return kExitOk;
}

} // namespace swiptfog::tools
