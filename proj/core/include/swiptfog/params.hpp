#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swiptfog {

/// Distances below this are outside the path-loss model, meters.
inline constexpr double kMinDistance = 0.1;

/// Every constant of the system model. Defaults are the reference deployment.
struct SystemParams {
    double p_ap = 1.0;         ///< HAP transmit power, W
    int n_antennas = 8;        ///< HAP antennas
    double bandwidth = 2e6;    ///< Hz
    double noise_n = 1e-17;    ///< MU receiver noise, W (-140 dBm)
    double noise_s = 1e-17;    ///< FS receiver noise, W
    double noise_f = 1e-17;    ///< MU feedback receiver noise, W
    double rician_k_db = 3.5;  ///< +inf: pure LoS, -inf: Rayleigh
    double carrier_mhz = 915.0;
    double pl_coeff = 22.0;    ///< distance power loss coefficient
    double r_th = 2e4;         ///< minimum rate, bit/s
    double t_b = 1.0;          ///< block duration, s
    double k_ops = 1e4;        ///< operations per bit
    double eta = 0.6;          ///< EH conversion efficiency
    double xi = 1e-10;         ///< decoding energy, J/bit
    double p_uf_max = 1e-3;    ///< MU max transmit power, W
    double f_op = 1e9;         ///< MU operations per second
    double f_fogop = 1e15;     ///< FS operations per second
    double m_c = 1e4;          ///< immaturity factor
    double act = 0.1;          ///< activity factor
    double fanout = 3.0;
    double n0_ln2 = 3e-21;     ///< Landauer energy per operation, J
    double beta = 1e-2;        ///< result scaling factor
    double p_fu_max = 1.0;     ///< FS feedback transmit power, W

    /// Throws ConfigError naming the first offending field.
    void validate() const;

    /// Energy per logic operation on the MU, J.
    [[nodiscard]] double energy_per_op() const noexcept { return fanout * act * m_c * n0_ln2; }
    /// Task size per unit bandwidth, R_th * T_b / B.
    [[nodiscard]] double bits_per_hz() const noexcept { return r_th * t_b / bandwidth; }
    /// Task size, bits.
    [[nodiscard]] double task_bits() const noexcept { return r_th * t_b; }
};

double dbm_to_watts(double dbm) noexcept;

/// Parses a number in the C locale. Accepts inf/-inf and a leading '+'.
double parse_number(std::string_view text);

/// One `key = value` line.
struct KeyValue {
    std::string key;
    std::string value;
    int line = 0;
};

/// Splits a `key = value` file. Blank lines and lines starting with '#' are skipped.
std::vector<KeyValue> parse_key_values(std::istream& in);

/// Applies one parameter. Returns false if `key` is not a parameter name.
bool apply_param(SystemParams& params, std::string_view key, std::string_view value);

/// Loads a parameter file. Unknown keys are errors.
SystemParams load_params(const std::filesystem::path& path);
SystemParams parse_params(std::istream& in);

/// Name/value listing of all fields, in declaration order.
std::vector<std::pair<std::string, double>> param_entries(const SystemParams& params);

} // namespace swiptfog
