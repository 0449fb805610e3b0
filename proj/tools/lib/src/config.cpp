#include "swiptfog_tools/config.hpp"

#include <swiptfog/errors.hpp>
#include <swiptfog/format.hpp>
#include <swiptfog/scheduler.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <string_view>
#include <type_traits>

namespace swiptfog::tools {
namespace {

std::vector<std::string_view> split_list(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int parse_int(std::string_view text) {
    const double v = parse_number(text);
    if (v != std::floor(v) || std::abs(v) > std::numeric_limits<int>::max())
        throw ConfigError("not an integer: '" + std::string(text) + "'");
    return static_cast<int>(v);
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    for (auto item : split_list(text)) out.push_back(parse_number(item));
    return out;
}

Point parse_point(std::string_view text) {
    const auto items = split_list(text);
    if (items.size() != 2) throw ConfigError("expected 'x, y': '" + std::string(text) + "'");
    return {parse_number(items[0]), parse_number(items[1])};
}

std::string list_text(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_number(v[i]);
    }
    return s;
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

struct RunKey {
    const char* name;
    Setter set;
    std::function<std::string(const RunConfig&)> show;
};

template <class T>
RunKey number_key(const char* name, T RunConfig::*member) {
    return {name,
            [member](RunConfig& c, std::string_view v) {
                if constexpr (std::is_same_v<T, int>) c.*member = parse_int(v);
                else c.*member = parse_number(v);
            },
            [member](const RunConfig& c) { return format_number(static_cast<double>(c.*member)); }};
}

RunKey list_key(const char* name, std::vector<double> RunConfig::*member) {
    return {name, [member](RunConfig& c, std::string_view v) { c.*member = parse_list(v); },
            [member](const RunConfig& c) { return list_text(c.*member); }};
}

RunKey point_key(const char* name, Point RunConfig::*member) {
    return {name, [member](RunConfig& c, std::string_view v) { c.*member = parse_point(v); },
            [member](const RunConfig& c) {
                return format_number((c.*member).x) + "," + format_number((c.*member).y);
            }};
}

const std::vector<RunKey>& run_keys() {
    static const std::vector<RunKey> keys = {
        number_key("realizations", &RunConfig::realizations),
        {"seed",
         [](RunConfig& c, std::string_view v) {
             const double s = parse_number(v);
             if (s < 0 || s != std::floor(s) || s >= 18446744073709551616.0)
                 throw ConfigError("seed must be an integer in [0, 2^64)");
             c.seed = static_cast<std::uint64_t>(s);
         },
         [](const RunConfig& c) { return std::to_string(c.seed); }},
        number_key("grid_res", &RunConfig::grid_res),
        number_key("d_ap_u", &RunConfig::d_ap_u),
        number_key("d_uf", &RunConfig::d_uf),
        number_key("d_ap_f", &RunConfig::d_ap_f),
        number_key("k_min", &RunConfig::k_min),
        number_key("k_max", &RunConfig::k_max),
        number_key("k_points", &RunConfig::k_points),
        number_key("beta_min", &RunConfig::beta_min),
        number_key("beta_max", &RunConfig::beta_max),
        number_key("beta_points", &RunConfig::beta_points),
        number_key("dist_min", &RunConfig::dist_min),
        number_key("dist_max", &RunConfig::dist_max),
        number_key("dist_points", &RunConfig::dist_points),
        number_key("line_points", &RunConfig::line_points),
        point_key("hap_pos", &RunConfig::hap_pos),
        point_key("fs_pos", &RunConfig::fs_pos),
        number_key("area_x_min", &RunConfig::area_x_min),
        number_key("area_x_max", &RunConfig::area_x_max),
        number_key("area_y_min", &RunConfig::area_y_min),
        number_key("area_y_max", &RunConfig::area_y_max),
        list_key("pap_values", &RunConfig::pap_values),
        list_key("eps_values", &RunConfig::eps_values),
        number_key("n_frames", &RunConfig::n_frames),
        list_key("frame_distances", &RunConfig::frame_distances),
        {"battery_cap",
         [](RunConfig& c, std::string_view v) {
             const double cap = parse_number(v);
             if (std::isinf(cap) && cap > 0) c.battery_cap.reset();
             else c.battery_cap = cap;
         },
         [](const RunConfig& c) { return c.battery_cap ? format_number(*c.battery_cap) : "inf"; }},
        number_key("initial_e_s", &RunConfig::initial_e_s),
        number_key("m_min", &RunConfig::m_min),
        number_key("m_max", &RunConfig::m_max),
        number_key("mu_r_min", &RunConfig::mu_r_min),
        number_key("mu_r_max", &RunConfig::mu_r_max),
    };
    return keys;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

bool finite_range(double lo, double hi) { return std::isfinite(lo) && std::isfinite(hi) && lo < hi; }

} // namespace

void RunConfig::validate() const {
    params.validate();
    require(realizations >= 1, "realizations must be >= 1");
    require(grid_res >= 2, "grid_res must be >= 2");
    require(d_ap_u >= kMinDistance && std::isfinite(d_ap_u), "d_ap_u must be >= 0.1 m");
    require(d_uf >= kMinDistance && std::isfinite(d_uf), "d_uf must be >= 0.1 m");
    require(d_ap_f > 2 * kMinDistance && std::isfinite(d_ap_f), "d_ap_f must exceed 0.2 m");
    require(k_min >= 0.0 && finite_range(k_min, k_max), "need 0 <= k_min < k_max");
    require(k_min > 0.0, "k_min must be positive (log-spaced sweep)");
    require(k_points >= 2, "k_points must be >= 2");
    require(beta_min > 0.0 && finite_range(beta_min, beta_max), "need 0 < beta_min < beta_max");
    require(beta_points >= 2, "beta_points must be >= 2");
    require(dist_min >= kMinDistance && finite_range(dist_min, dist_max), "need 0.1 <= dist_min < dist_max");
    require(dist_points >= 2, "dist_points must be >= 2");
    require(line_points >= 2, "line_points must be >= 2");
    require(std::isfinite(hap_pos.x) && std::isfinite(hap_pos.y), "hap_pos must be finite");
    require(std::isfinite(fs_pos.x) && std::isfinite(fs_pos.y), "fs_pos must be finite");
    require(finite_range(area_x_min, area_x_max), "need area_x_min < area_x_max");
    require(finite_range(area_y_min, area_y_max), "need area_y_min < area_y_max");
    require(!pap_values.empty(), "pap_values must not be empty");
    for (double p : pap_values) require(p > 0.0 && std::isfinite(p), "pap_values must be positive");
    require(!eps_values.empty(), "eps_values must not be empty");
    for (double e : eps_values) require(e >= 0.0 && e < 1.0, "eps_values must lie in [0, 1)");
    require(n_frames >= 1, "n_frames must be >= 1");
    require(!frame_distances.empty(), "frame_distances must not be empty");
    for (double d : frame_distances)
        require(d >= kMinDistance && std::isfinite(d), "frame_distances must be >= 0.1 m");
    require(!battery_cap || *battery_cap >= 0.0, "battery_cap must be >= 0");
    require(initial_e_s >= 0.0 && std::isfinite(initial_e_s), "initial_e_s must be >= 0");
    require(!battery_cap || initial_e_s <= *battery_cap, "initial_e_s exceeds battery_cap");
    require(m_min >= 1 && m_min <= m_max, "need 1 <= m_min <= m_max");
    require(m_max <= static_cast<int>(kMaxExhaustiveUsers), "m_max exceeds the exhaustive search limit");
    require(mu_r_min >= kMinDistance && finite_range(mu_r_min, mu_r_max), "need 0.1 <= mu_r_min < mu_r_max");
}

RunConfig parse_config(std::istream& in) {
    RunConfig config;
    for (const auto& kv : parse_key_values(in)) {
        try {
            if (apply_param(config.params, kv.key, kv.value)) continue;
            bool known = false;
            for (const auto& k : run_keys()) {
                if (kv.key == k.name) {
                    k.set(config, kv.value);
                    known = true;
                    break;
                }
            }
            if (!known) throw ConfigError("unknown key '" + kv.key + "'");
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(kv.line) + ": " + e.what());
        }
    }
    config.validate();
    return config;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    return parse_config(in);
}

std::vector<std::pair<std::string, std::string>> run_entries(const RunConfig& config) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& k : run_keys()) out.emplace_back(k.name, k.show(config));
    return out;
}

} // namespace swiptfog::tools
