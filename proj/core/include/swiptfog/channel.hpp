#pragma once

#include "swiptfog/params.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace swiptfog {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b) noexcept;

/// Node placement, meters.
struct Geometry {
    Point hap_pos;
    Point fs_pos{0.0, 20.0};
    std::vector<Point> mu_pos;

    /// Throws std::domain_error when any MU sits closer than kMinDistance to the HAP or FS.
    void validate() const;

    [[nodiscard]] double d_ap_u(std::size_t mu) const { return distance(hap_pos, mu_pos.at(mu)); }
    [[nodiscard]] double d_uf(std::size_t mu) const { return distance(mu_pos.at(mu), fs_pos); }
    [[nodiscard]] double d_fu(std::size_t mu) const { return d_uf(mu); }
};

/// One MU with the HAP at the origin, the MU at (d_ap_u, 0) and the FS at (d_ap_u, d_uf).
Geometry single_mu_geometry(double d_ap_u, double d_uf);

/// Linear power gains of one block.
struct LinkGains {
    double ap_u = 0.0; ///< |h_AP-u^H w|^2 after MRT
    double uf = 0.0;   ///< |h_u-f|^2
    double fu = 0.0;   ///< |h_f-u|^2
};

struct ChannelRealization {
    std::vector<std::complex<double>> h_ap_u;
    std::complex<double> h_uf;
    std::complex<double> h_fu;
    double g_ap_u = 0.0;
    double g_uf = 0.0;
    double g_fu = 0.0;

    [[nodiscard]] LinkGains gains() const noexcept { return {g_ap_u, g_uf, g_fu}; }
};

/// ITU indoor model: 20 log10(f_c) + n log10(d) - 28. Throws std::domain_error below kMinDistance.
double path_loss_db(double d, double f_c_mhz, double n_coeff);

/// 10^(-L/10).
double gain_from_db(double loss_db) noexcept;

/// Mean per-antenna power gain at distance d.
double mean_path_gain(const SystemParams& params, double d);

/// |h^H w|^2 at w = h / |h|, i.e. the squared norm. Throws std::invalid_argument on a zero vector.
double mrt_effective_gain(std::span<const std::complex<double>> h);

/// Rician block-fading draw for one MU in one block. Deterministic in (seed, mu_index, block).
ChannelRealization gen_channel(const SystemParams& params, const Geometry& geometry,
                               std::size_t mu_index, std::uint64_t seed, std::uint64_t block = 0);

/// Multiplies every coefficient by (1 + eps u), u ~ U[-1, 1], and recomputes gains.
ChannelRealization perturb_csi(const ChannelRealization& ch, double eps, std::uint64_t seed);

} // namespace swiptfog
