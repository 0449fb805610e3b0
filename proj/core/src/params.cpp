#include "swiptfog/params.hpp"

#include "swiptfog/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

namespace swiptfog {
namespace {

struct Field {
    const char* name;
    double SystemParams::*member;
};

constexpr Field kFields[] = {
    {"p_ap", &SystemParams::p_ap},
    {"bandwidth", &SystemParams::bandwidth},
    {"noise_n", &SystemParams::noise_n},
    {"noise_s", &SystemParams::noise_s},
    {"noise_f", &SystemParams::noise_f},
    {"rician_k_db", &SystemParams::rician_k_db},
    {"carrier_mhz", &SystemParams::carrier_mhz},
    {"pl_coeff", &SystemParams::pl_coeff},
    {"r_th", &SystemParams::r_th},
    {"t_b", &SystemParams::t_b},
    {"k_ops", &SystemParams::k_ops},
    {"eta", &SystemParams::eta},
    {"xi", &SystemParams::xi},
    {"p_uf_max", &SystemParams::p_uf_max},
    {"f_op", &SystemParams::f_op},
    {"f_fogop", &SystemParams::f_fogop},
    {"m_c", &SystemParams::m_c},
    {"act", &SystemParams::act},
    {"fanout", &SystemParams::fanout},
    {"n0_ln2", &SystemParams::n0_ln2},
    {"beta", &SystemParams::beta},
    {"p_fu_max", &SystemParams::p_fu_max},
};

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw ConfigError(std::string(name) + " must be positive and finite");
}

} // namespace

void SystemParams::validate() const {
    require_positive(p_ap, "p_ap");
    if (n_antennas < 1) throw ConfigError("n_antennas must be >= 1");
    require_positive(bandwidth, "bandwidth");
    require_positive(noise_n, "noise_n");
    require_positive(noise_s, "noise_s");
    require_positive(noise_f, "noise_f");
    if (std::isnan(rician_k_db)) throw ConfigError("rician_k_db must not be NaN");
    require_positive(carrier_mhz, "carrier_mhz");
    require_positive(pl_coeff, "pl_coeff");
    require_positive(r_th, "r_th");
    require_positive(t_b, "t_b");
    if (!(k_ops >= 0.0) || !std::isfinite(k_ops)) throw ConfigError("k_ops must be >= 0 and finite");
    if (!(eta > 0.0 && eta < 1.0)) throw ConfigError("eta must lie in (0, 1)");
    if (!(xi >= 0.0) || !std::isfinite(xi)) throw ConfigError("xi must be >= 0 and finite");
    require_positive(p_uf_max, "p_uf_max");
    require_positive(f_op, "f_op");
    if (!(f_fogop > 0.0)) throw ConfigError("f_fogop must be positive");
    require_positive(m_c, "m_c");
    require_positive(act, "act");
    require_positive(fanout, "fanout");
    require_positive(n0_ln2, "n0_ln2");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be >= 0 and finite");
    require_positive(p_fu_max, "p_fu_max");
}

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double parse_number(std::string_view text) {
    auto s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end)
        throw ConfigError("not a number: '" + std::string(text) + "'");
    return value;
}

std::vector<KeyValue> parse_key_values(std::istream& in) {
    std::vector<KeyValue> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        out.push_back({std::string(key), std::string(value), line_no});
    }
    return out;
}

bool apply_param(SystemParams& params, std::string_view key, std::string_view value) {
    for (const auto& f : kFields) {
        if (key == f.name) {
            params.*f.member = parse_number(value);
            return true;
        }
    }
    if (key == "n_antennas") {
        const double v = parse_number(value);
        if (v != std::floor(v) || v < 1 || v > std::numeric_limits<int>::max())
            throw ConfigError("n_antennas must be a positive integer");
        params.n_antennas = static_cast<int>(v);
        return true;
    }
    if (key == "noise_dbm") {
        const double w = dbm_to_watts(parse_number(value));
        params.noise_n = params.noise_s = params.noise_f = w;
        return true;
    }
    if (key == "noise_n_dbm") { params.noise_n = dbm_to_watts(parse_number(value)); return true; }
    if (key == "noise_s_dbm") { params.noise_s = dbm_to_watts(parse_number(value)); return true; }
    if (key == "noise_f_dbm") { params.noise_f = dbm_to_watts(parse_number(value)); return true; }
    return false;
}

SystemParams parse_params(std::istream& in) {
    SystemParams params;
    for (const auto& kv : parse_key_values(in)) {
        if (!apply_param(params, kv.key, kv.value))
            throw ConfigError("line " + std::to_string(kv.line) + ": unknown key '" + kv.key + "'");
    }
    params.validate();
    return params;
}

SystemParams load_params(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    return parse_params(in);
}

std::vector<std::pair<std::string, double>> param_entries(const SystemParams& params) {
    std::vector<std::pair<std::string, double>> out;
    out.emplace_back("p_ap", params.p_ap);
    out.emplace_back("n_antennas", params.n_antennas);
    for (const auto& f : kFields) {
        if (f.member == &SystemParams::p_ap) continue;
        out.emplace_back(f.name, params.*f.member);
    }
    return out;
}

} // namespace swiptfog
