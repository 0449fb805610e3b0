#include <swiptfog_tools/runner.hpp>
#include <swiptfog_tools/scenarios.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace swiptfog::tools;

    std::string scenarios;
    for (const auto& s : scenario_list()) scenarios += std::string("\n  ") + s.name + "  " + s.summary;

    CLI::App app{"Minimum-energy SWIPT sensors with fog offloading: scenario runner.\nScenarios:" + scenarios,
                 "swipt-fog"};
    app.set_version_flag("--version", build_describe());

    RunRequest req;
    long long realizations = 0;
    std::uint64_t seed = 0;
    long long grid_res = 0;
    app.add_option("scenario", req.scenario, "scenario name")->required();
    app.add_option("--config", req.config, "key = value parameter file")->required();
    app.add_option("--out", req.out_dir, "output directory (created if missing)")->required();
    auto* o_real = app.add_option("--realizations", realizations, "channel realizations or seeds per point");
    auto* o_seed = app.add_option("--seed", seed, "master seed");
    auto* o_grid = app.add_option("--grid-res", grid_res, "points per axis of the placement maps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidConfig;
    }
    if (*o_real) req.realizations = realizations;
    if (*o_seed) req.seed = seed;
    if (*o_grid) req.grid_res = grid_res;
    return run_request(req, std::cerr);
}
