#include "swiptfog/channel.hpp"

#include "swiptfog/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swiptfog {

double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

void Geometry::validate() const {
    if (mu_pos.empty()) throw std::domain_error("geometry has no MU");
    for (std::size_t m = 0; m < mu_pos.size(); ++m) {
        if (d_ap_u(m) < kMinDistance || d_uf(m) < kMinDistance)
            throw std::domain_error("MU " + std::to_string(m) + " closer than 0.1 m to the HAP or FS");
    }
}

Geometry single_mu_geometry(double d_ap_u, double d_uf) {
    Geometry g;
    g.hap_pos = {0.0, 0.0};
    g.mu_pos = {{d_ap_u, 0.0}};
    g.fs_pos = {d_ap_u, d_uf};
    return g;
}

double path_loss_db(double d, double f_c_mhz, double n_coeff) {
    if (!(d >= kMinDistance)) throw std::domain_error("distance below 0.1 m");
    if (!(f_c_mhz > 0.0) || !(n_coeff > 0.0)) throw std::domain_error("non-positive path loss parameter");
    return 20.0 * std::log10(f_c_mhz) + n_coeff * std::log10(d) - 28.0;
}

double gain_from_db(double loss_db) noexcept { return std::pow(10.0, -loss_db / 10.0); }

double mean_path_gain(const SystemParams& params, double d) {
    return gain_from_db(path_loss_db(d, params.carrier_mhz, params.pl_coeff));
}

double mrt_effective_gain(std::span<const std::complex<double>> h) {
    double sum = 0.0;
    for (const auto& c : h) sum += std::norm(c);
    if (!(sum > 0.0)) throw std::invalid_argument("MRT needs a nonzero channel vector");
    return sum;
}

ChannelRealization gen_channel(const SystemParams& params, const Geometry& geometry,
                               std::size_t mu_index, std::uint64_t seed, std::uint64_t block) {
    const double kr = std::pow(10.0, params.rician_k_db / 10.0);
    double los_w = 1.0;
    double nlos_w = 0.0;
    if (std::isfinite(kr)) {
        los_w = std::sqrt(kr / (kr + 1.0));
        nlos_w = std::sqrt(1.0 / (kr + 1.0));
    }

    auto engine = make_engine(seed, Stream::Channel, {mu_index, block});
    const double half = std::sqrt(0.5);
    auto draw = [&](double mean_gain) {
        const double re = standard_normal(engine) * half;
        const double im = standard_normal(engine) * half;
        const std::complex<double> z{re, im};
        return std::sqrt(mean_gain) * (los_w + nlos_w * z);
    };

    ChannelRealization ch;
    const double g_ap = mean_path_gain(params, geometry.d_ap_u(mu_index));
    const double g_uf = mean_path_gain(params, geometry.d_uf(mu_index));
    const double g_fu = mean_path_gain(params, geometry.d_fu(mu_index));
    ch.h_ap_u.resize(static_cast<std::size_t>(params.n_antennas));
    for (auto& c : ch.h_ap_u) c = draw(g_ap);
    ch.h_uf = draw(g_uf);
    ch.h_fu = draw(g_fu);
    ch.g_ap_u = mrt_effective_gain(ch.h_ap_u);
    ch.g_uf = std::norm(ch.h_uf);
    ch.g_fu = std::norm(ch.h_fu);
    return ch;
}

ChannelRealization perturb_csi(const ChannelRealization& ch, double eps, std::uint64_t seed) {
    if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in [0, 1)");
    if (eps == 0.0) return ch;
    auto engine = make_engine(seed, Stream::Csi);
    auto factor = [&] { return 1.0 + eps * (2.0 * uniform01(engine) - 1.0); };

    ChannelRealization out = ch;
    for (auto& c : out.h_ap_u) c *= factor();
    out.h_uf *= factor();
    out.h_fu *= factor();
    out.g_ap_u = mrt_effective_gain(out.h_ap_u);
    out.g_uf = std::norm(out.h_uf);
    out.g_fu = std::norm(out.h_fu);
    return out;
}

} // namespace swiptfog
