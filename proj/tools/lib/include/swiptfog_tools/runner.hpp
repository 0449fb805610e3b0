#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace swiptfog::tools {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUnknownScenario = 2,
    kExitUnwritableOutput = 3,
    kExitInvalidConfig = 4,
};

struct RunRequest {
    std::string scenario;
    std::filesystem::path config;
    std::filesystem::path out_dir;
    std::optional<long long> realizations;
    std::optional<std::uint64_t> seed;
    std::optional<long long> grid_res;
};

/// Validates everything before touching out_dir, runs the scenario, then writes
/// `<table>.csv`, `<table>.columns.txt` and `manifest.json`. Diagnostics go to `err`.
int run_request(const RunRequest& request, std::ostream& err);

/// Version string baked in at configure time.
const char* build_describe() noexcept;

} // namespace swiptfog::tools
