#include "swiptfog_tools/scenarios.hpp"

#include "swiptfog_tools/csi.hpp"
#include "swiptfog_tools/parallel.hpp"

#include <swiptfog/channel.hpp>
#include <swiptfog/frame_sim.hpp>
#include <swiptfog/mode_selector.hpp>
#include <swiptfog/random.hpp>
#include <swiptfog/scheduler.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace swiptfog::tools {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> log_space(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> lin_space(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    out.back() = hi;
    return out;
}

/// One realization of one MU, both modes solved with no credit and an empty battery.
struct Sample {
    bool local_ok = false;
    bool offload_ok = false;
    double local_e_u = 0.0;
    double local_e_eh = 0.0;
    double local_e_cpt = 0.0;
    double offload_e_u = 0.0;
    double offload_e_eh = 0.0;
    double offload_e_uf = 0.0;
    int choice = -1;  // 0 local, 1 offload, -1 neither
    double chosen_e_u = 0.0;
};

Sample sample(const SystemParams& params, const LinkGains& gains) {
    const auto c = evaluate_modes(params, gains);
    Sample s;
    if (c.local.solution) {
        s.local_ok = true;
        s.local_e_u = c.local.solution->e_u;
        s.local_e_eh = c.local.solution->e_eh;
        s.local_e_cpt = c.local.solution->e_cpt;
    }
    if (c.offload.solution) {
        s.offload_ok = true;
        s.offload_e_u = c.offload.solution->e_u;
        s.offload_e_eh = c.offload.solution->e_eh;
        s.offload_e_uf = c.offload.solution->e_uf;
    }
    if (auto chosen = choose_mode(c, 0.0, 0.0)) {
        s.choice = chosen->mode == Mode::Local ? 0 : 1;
        s.chosen_e_u = chosen->e_u;
    }
    return s;
}

/// Running means over the realizations where each quantity exists.
struct Summary {
    int n = 0;
    int local_n = 0;
    int offload_n = 0;
    int served = 0;
    int local_chosen = 0;
    double local_e_u = 0.0;
    double local_e_eh = 0.0;
    double local_e_cpt = 0.0;
    double offload_e_u = 0.0;
    double offload_e_eh = 0.0;
    double offload_e_uf = 0.0;
    double chosen_e_u = 0.0;

    void add(const Sample& s) {
        ++n;
        if (s.local_ok) {
            ++local_n;
            local_e_u += s.local_e_u;
            local_e_eh += s.local_e_eh;
            local_e_cpt += s.local_e_cpt;
        }
        if (s.offload_ok) {
            ++offload_n;
            offload_e_u += s.offload_e_u;
            offload_e_eh += s.offload_e_eh;
            offload_e_uf += s.offload_e_uf;
        }
        if (s.choice >= 0) {
            ++served;
            chosen_e_u += s.chosen_e_u;
            if (s.choice == 0) ++local_chosen;
        }
    }

    static double mean(double sum, int count) { return count ? sum / count : kNaN; }
    [[nodiscard]] double local_mean() const { return mean(local_e_u, local_n); }
    [[nodiscard]] double offload_mean() const { return mean(offload_e_u, offload_n); }
    [[nodiscard]] double chosen_mean() const { return mean(chosen_e_u, served); }
    [[nodiscard]] double local_share() const { return served ? static_cast<double>(local_chosen) / served : kNaN; }
};

std::vector<Column> sweep_columns(const char* x, const char* x_desc) {
    return {
        {x, x_desc},
        {"local_e_u", "mean net required energy of local computing over realizations where it is feasible, J"},
        {"offload_e_u", "mean net required energy of fog offloading over realizations where it is feasible, J"},
        {"gap", "local_e_u - offload_e_u, J (positive: offloading is cheaper)"},
        {"local_e_eh", "mean harvested energy in local computing, J"},
        {"offload_e_eh", "mean harvested energy in fog offloading, J"},
        {"local_e_cpt", "mean local computing energy, J"},
        {"offload_e_uf", "mean uplink offloading energy, J"},
        {"e_id", "decoding energy xi R_th T_b, J"},
        {"local_feasible", "fraction of realizations where local computing is feasible"},
        {"offload_feasible", "fraction of realizations where fog offloading is feasible"},
        {"local_share", "fraction of served realizations that select local computing"},
        {"served", "fraction of realizations where some mode is feasible"},
    };
}

std::vector<Cell> sweep_row(double x, const Summary& s, const SystemParams& params) {
    const double n = s.n;
    return {x,
            s.local_mean(),
            s.offload_mean(),
            s.local_mean() - s.offload_mean(),
            Summary::mean(s.local_e_eh, s.local_n),
            Summary::mean(s.offload_e_eh, s.offload_n),
            Summary::mean(s.local_e_cpt, s.local_n),
            Summary::mean(s.offload_e_uf, s.offload_n),
            params.xi * params.task_bits(),
            s.local_n / n,
            s.offload_n / n,
            s.local_share(),
            s.served / n};
}

/// Evaluates `setup(i)` at every sweep point for every realization; realization r uses channel block r.
using PointSetup = std::function<std::pair<SystemParams, Geometry>(std::size_t)>;

std::vector<Summary> sweep(const RunConfig& config, int threads, std::size_t points, const PointSetup& setup) {
    const auto reals = static_cast<std::size_t>(config.realizations);
    std::vector<std::pair<SystemParams, Geometry>> setups;
    setups.reserve(points);
    for (std::size_t i = 0; i < points; ++i) setups.push_back(setup(i));
    std::vector<Sample> samples(reals * points);
    parallel_for(reals, threads, [&](std::size_t r) {
        for (std::size_t i = 0; i < points; ++i) {
            const auto& [params, geometry] = setups[i];
            const auto ch = gen_channel(params, geometry, 0, config.seed, r);
            samples[r * points + i] = sample(params, ch.gains());
        }
    });
    std::vector<Summary> out(points);
    for (std::size_t r = 0; r < reals; ++r)
        for (std::size_t i = 0; i < points; ++i) out[i].add(samples[r * points + i]);
    return out;
}

Table sweep_table(const char* name, const char* x, const char* x_desc, const std::vector<double>& xs,
                  const std::vector<Summary>& sums, const std::function<SystemParams(std::size_t)>& params_at) {
    Table t{name, sweep_columns(x, x_desc), {}};
    for (std::size_t i = 0; i < xs.size(); ++i) t.add_row(sweep_row(xs[i], sums[i], params_at(i)));
    return t;
}

// ---------------------------------------------------------------------------------------------
// placement maps

struct CellSummary {
    bool excluded = false;
    Summary sum;
};

const char* cell_mode(const CellSummary& c) {
    if (c.excluded) return "excluded";
    const auto& s = c.sum;
    if (2 * s.served < s.n || !(s.chosen_mean() <= 0.0)) return "accumulate";
    return 2 * s.local_chosen >= s.served ? "local" : "offload";
}

std::vector<CellSummary> placement_map(const RunConfig& config, const SystemParams& params, int threads,
                                       const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t nx = xs.size();
    std::vector<CellSummary> cells(nx * ys.size());
    parallel_for(cells.size(), threads, [&](std::size_t k) {
        const Point mu{xs[k % nx], ys[k / nx]};
        auto& cell = cells[k];
        if (distance(mu, config.hap_pos) < kMinDistance || distance(mu, config.fs_pos) < kMinDistance) {
            cell.excluded = true;
            return;
        }
        const Geometry geometry{config.hap_pos, config.fs_pos, {mu}};
        for (int r = 0; r < config.realizations; ++r) {
            const auto ch = gen_channel(params, geometry, 0, config.seed, static_cast<std::uint64_t>(r));
            cell.sum.add(sample(params, ch.gains()));
        }
    });
    return cells;
}

std::vector<Column> map_columns(bool with_pap) {
    std::vector<Column> cols;
    if (with_pap) cols.push_back({"p_ap", "HAP transmit power, W"});
    const std::vector<Column> rest = {
        {"x", "MU x coordinate, m"},
        {"y", "MU y coordinate, m"},
        {"d_ap_u", "HAP-MU distance, m"},
        {"d_uf", "MU-FS distance, m"},
        {"local_e_u", "mean local computing energy where feasible, J"},
        {"offload_e_u", "mean fog offloading energy where feasible, J"},
        {"best_e_u", "mean energy of the selected mode over served realizations, J"},
        {"local_feasible", "fraction of realizations where local computing is feasible"},
        {"offload_feasible", "fraction of realizations where fog offloading is feasible"},
        {"served", "fraction of realizations where some mode is feasible"},
        {"local_share", "fraction of served realizations that select local computing"},
        {"mode", "local | offload | accumulate (served in under half the realizations, or best_e_u > 0) | "
                 "excluded (closer than 0.1 m to the HAP or FS)"},
    };
    cols.insert(cols.end(), rest.begin(), rest.end());
    return cols;
}

void add_map_rows(Table& t, const RunConfig& config, const std::vector<double>& xs, const std::vector<double>& ys,
                  const std::vector<CellSummary>& cells, const double* p_ap) {
    const std::size_t nx = xs.size();
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const Point mu{xs[k % nx], ys[k / nx]};
        const auto& c = cells[k];
        const auto& s = c.sum;
        const double n = s.n ? s.n : kNaN;
        std::vector<Cell> row;
        if (p_ap) row.emplace_back(*p_ap);
        const std::vector<Cell> rest = {
            mu.x, mu.y, distance(mu, config.hap_pos), distance(mu, config.fs_pos),
            s.local_mean(), s.offload_mean(), s.chosen_mean(),
            s.local_n / n, s.offload_n / n, s.served / n, s.local_share(),
            std::string(cell_mode(c))};
        row.insert(row.end(), rest.begin(), rest.end());
        t.add_row(std::move(row));
    }
}

std::vector<double> area_xs(const RunConfig& c) { return lin_space(c.area_x_min, c.area_x_max, c.grid_res); }
std::vector<double> area_ys(const RunConfig& c) { return lin_space(c.area_y_min, c.area_y_max, c.grid_res); }

// ---------------------------------------------------------------------------------------------
// multiuser

Geometry drop_users(const RunConfig& config, std::size_t m_count, std::uint64_t r) {
    auto engine = make_engine(config.seed, Stream::Placement, {m_count, r});
    Geometry g{config.hap_pos, config.fs_pos, {}};
    const double a = config.mu_r_min * config.mu_r_min;
    const double b = config.mu_r_max * config.mu_r_max;
    while (g.mu_pos.size() < m_count) {
        const double radius = std::sqrt(a + (b - a) * uniform01(engine));
        const double angle = 2.0 * std::numbers::pi * uniform01(engine);
        const Point p{config.hap_pos.x + radius * std::cos(angle), config.hap_pos.y + radius * std::sin(angle)};
        if (distance(p, config.fs_pos) >= kMinDistance) g.mu_pos.push_back(p);
    }
    return g;
}

struct MultiSample {
    double greedy = 0.0;
    double random = 0.0;
    double exhaustive = 0.0;
    double worst = 0.0;
    double greedy_s = 0.0;
    double exhaustive_s = 0.0;
};

template <class F>
auto timed(double& seconds, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto out = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// ---------------------------------------------------------------------------------------------
// csi-error

Point drop_in_area(const RunConfig& config, std::uint64_t r) {
    auto engine = make_engine(config.seed, Stream::Placement, {r});
    while (true) {
        const Point p{config.area_x_min + (config.area_x_max - config.area_x_min) * uniform01(engine),
                      config.area_y_min + (config.area_y_max - config.area_y_min) * uniform01(engine)};
        if (distance(p, config.hap_pos) >= kMinDistance && distance(p, config.fs_pos) >= kMinDistance) return p;
    }
}

struct CsiSample {
    bool ideal = false;       // some mode feasible on the true channel
    bool outage = false;
    bool mismatch = false;
    double e_u = 0.0;
};

} // namespace

ScenarioResult run_sweep_k(const RunConfig& config, int threads) {
    const auto ks = log_space(config.k_min, config.k_max, config.k_points);
    const auto geometry = single_mu_geometry(config.d_ap_u, config.d_uf);
    auto params_at = [&](std::size_t i) {
        auto p = config.params;
        p.k_ops = ks[i];
        return p;
    };
    const auto sums = sweep(config, threads, ks.size(), [&](std::size_t i) { return std::pair{params_at(i), geometry}; });
    return {{sweep_table("sweep-k", "k_ops", "computational complexity K, operations per bit", ks, sums, params_at)}, {}};
}

ScenarioResult run_sweep_beta(const RunConfig& config, int threads) {
    const auto betas = log_space(config.beta_min, config.beta_max, config.beta_points);
    const auto geometry = single_mu_geometry(config.d_ap_u, config.d_uf);
    auto params_at = [&](std::size_t i) {
        auto p = config.params;
        p.beta = betas[i];
        return p;
    };
    const auto sums = sweep(config, threads, betas.size(), [&](std::size_t i) { return std::pair{params_at(i), geometry}; });
    return {{sweep_table("sweep-beta", "beta", "result scaling factor beta", betas, sums, params_at)}, {}};
}

ScenarioResult run_sweep_dist(const RunConfig& config, int threads) {
    const auto ds = lin_space(config.dist_min, config.dist_max, config.dist_points);
    const auto sums = sweep(config, threads, ds.size(), [&](std::size_t i) {
        return std::pair{config.params, single_mu_geometry(ds[i], config.d_uf)};
    });
    return {{sweep_table("sweep-dist", "d_ap_u", "HAP-MU distance with d_uf fixed, m", ds, sums,
                         [&](std::size_t) { return config.params; })},
            {}};
}

ScenarioResult run_line_placement(const RunConfig& config, int threads) {
    // the MU walks the open segment between the HAP and the FS
    const double lo = kMinDistance;
    const double hi = config.d_ap_f - kMinDistance;
    const auto ds = lin_space(lo, hi, config.line_points);
    const auto sums = sweep(config, threads, ds.size(), [&](std::size_t i) {
        Geometry g{{0.0, 0.0}, {config.d_ap_f, 0.0}, {{ds[i], 0.0}}};
        return std::pair{config.params, g};
    });
    auto table = sweep_table("line-placement", "d_ap_u",
                             "HAP-MU distance along the HAP-FS segment, m (d_uf = d_ap_f - d_ap_u)", ds, sums,
                             [&](std::size_t) { return config.params; });
    return {{std::move(table)}, {}};
}

ScenarioResult run_placement_grid(const RunConfig& config, int threads) {
    const auto xs = area_xs(config);
    const auto ys = area_ys(config);
    const auto cells = placement_map(config, config.params, threads, xs, ys);
    Table t{"placement-grid", map_columns(false), {}};
    add_map_rows(t, config, xs, ys, cells, nullptr);
    return {{std::move(t)}, {}};
}

ScenarioResult run_sweep_pap(const RunConfig& config, int threads) {
    const auto xs = area_xs(config);
    const auto ys = area_ys(config);
    Table maps{"sweep-pap", map_columns(true), {}};
    Table shares{"sweep-pap-summary",
                 {{"p_ap", "HAP transmit power, W"},
                  {"cells", "grid points outside the 0.1 m exclusion zones"},
                  {"local_cells", "points whose mode is local"},
                  {"offload_cells", "points whose mode is offload"},
                  {"accumulate_cells", "points that must accumulate energy first"}},
                 {}};
    for (double p_ap : config.pap_values) {
        auto params = config.params;
        params.p_ap = p_ap;
        const auto cells = placement_map(config, params, threads, xs, ys);
        add_map_rows(maps, config, xs, ys, cells, &p_ap);
        std::int64_t n = 0, local = 0, offload = 0, accumulate = 0;
        for (const auto& c : cells) {
            const std::string_view mode = cell_mode(c);
            if (mode == "excluded") continue;
            ++n;
            local += mode == "local";
            offload += mode == "offload";
            accumulate += mode == "accumulate";
        }
        shares.add_row({p_ap, n, local, offload, accumulate});
    }
    return {{std::move(maps), std::move(shares)}, {}};
}

ScenarioResult run_frames_scenario(const RunConfig& config, int threads) {
    const auto seeds = static_cast<std::size_t>(config.realizations);
    const auto n_dist = config.frame_distances.size();
    const auto frames = static_cast<std::size_t>(config.n_frames);
    FrameOptions options;
    options.battery_cap = config.battery_cap;
    options.initial_e_s = config.initial_e_s;

    struct Run {
        std::vector<double> e_s;        // per frame
        std::vector<char> harvest_only; // per frame
        FrameTrace trace;               // kept for seed 0 only
    };
    std::vector<Run> runs(n_dist * seeds);
    parallel_for(runs.size(), threads, [&](std::size_t k) {
        const auto di = k / seeds;
        const auto s = k % seeds;
        const auto geometry = single_mu_geometry(config.frame_distances[di], config.d_uf);
        auto trace = run_frames(config.params, geometry, config.n_frames,
                                derive_seed(config.seed, Stream::Realization, {s}), options);
        auto& run = runs[k];
        run.e_s.resize(frames);
        run.harvest_only.assign(frames, 0);
        for (const auto& rec : trace.records) {
            const auto f = static_cast<std::size_t>(rec.frame);
            run.e_s[f] = rec.e_s;
            if (rec.mode == Mode::HarvestOnly) run.harvest_only[f] = 1;
        }
        if (s == 0) run.trace = std::move(trace);
    });

    Table curve{"frames",
                {{"d_ap_u", "HAP-MU distance, m"},
                 {"frame", "frame index"},
                 {"mean_e_s", "stored energy at the end of the frame averaged over seeds, J"},
                 {"min_e_s", "smallest stored energy over seeds, J"},
                 {"max_e_s", "largest stored energy over seeds, J"},
                 {"harvest_only_share", "fraction of seeds whose block in this frame was harvest-only"}},
                {}};
    Table summary{"frames-summary",
                  {{"d_ap_u", "HAP-MU distance, m"},
                   {"seeds", "independent runs"},
                   {"seeds_with_harvest_only", "runs with at least one harvest-only block"},
                   {"harvest_only_blocks", "harvest-only blocks summed over runs"},
                   {"mean_final_e_s", "stored energy after the last frame averaged over seeds, J"},
                   {"mean_nondecreasing", "1 if the seed-averaged storage never decreases from frame to frame"}},
                  {}};
    Table trace{"frames-trace",
                {{"d_ap_u", "HAP-MU distance, m"},
                 {"frame", "frame index"},
                 {"mu", "MU index"},
                 {"mode", "Local | Offload | HarvestOnly"},
                 {"e_s", "stored energy after the block, J"},
                 {"e_u", "net demand of the block, J"},
                 {"e_eh", "harvested energy including broadcast credit, J"}},
                {}};
    for (std::size_t di = 0; di < n_dist; ++di) {
        const double d = config.frame_distances[di];
        std::vector<double> mean(frames, 0.0);
        std::int64_t with_ho = 0, ho_blocks = 0;
        for (std::size_t f = 0; f < frames; ++f) {
            double sum = 0.0;
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            std::int64_t ho = 0;
            for (std::size_t s = 0; s < seeds; ++s) {
                const auto& run = runs[di * seeds + s];
                sum += run.e_s[f];
                lo = std::min(lo, run.e_s[f]);
                hi = std::max(hi, run.e_s[f]);
                ho += run.harvest_only[f];
            }
            mean[f] = sum / static_cast<double>(seeds);
            curve.add_row({d, static_cast<std::int64_t>(f), mean[f], lo, hi,
                           static_cast<double>(ho) / static_cast<double>(seeds)});
        }
        for (std::size_t s = 0; s < seeds; ++s) {
            const auto& run = runs[di * seeds + s];
            std::int64_t blocks = 0;
            for (char h : run.harvest_only) blocks += h;
            ho_blocks += blocks;
            with_ho += blocks > 0;
        }
        bool nondecreasing = true;
        for (std::size_t f = 1; f < frames; ++f) nondecreasing = nondecreasing && mean[f] >= mean[f - 1];
        summary.add_row({d, static_cast<std::int64_t>(seeds), with_ho, ho_blocks, mean.back(),
                         static_cast<std::int64_t>(nondecreasing)});
        for (const auto& rec : runs[di * seeds].trace.records)
            trace.add_row({d, static_cast<std::int64_t>(rec.frame), static_cast<std::int64_t>(rec.mu),
                           std::string(to_string(rec.mode)), rec.e_s, rec.e_u, rec.e_eh});
    }
    return {{std::move(curve), std::move(summary), std::move(trace)}, {}};
}

ScenarioResult run_multiuser(const RunConfig& config, int threads) {
    const auto seeds = static_cast<std::size_t>(config.realizations);
    Table t{"multiuser",
            {{"m", "number of MUs in the frame"},
             {"greedy_mean", "greedy schedule total e_u averaged over seeds, J"},
             {"random_mean", "random schedule total e_u averaged over seeds, J"},
             {"exhaustive_mean", "best order total e_u averaged over seeds, J"},
             {"worst_mean", "worst order total e_u averaged over seeds, J"},
             {"greedy_excess_max", "largest greedy - exhaustive total over seeds, J"},
             {"exhaustive_above_greedy", "seeds where the exhaustive total exceeds the greedy total"},
             {"greedy_above_random", "seeds where the greedy total exceeds the random total"}},
            {}};
    ScenarioResult out;
    for (int m = config.m_min; m <= config.m_max; ++m) {
        const auto mu = static_cast<std::size_t>(m);
        std::vector<MultiSample> samples(seeds);
        parallel_for(seeds, threads, [&](std::size_t r) {
            const auto geometry = drop_users(config, mu, r);
            const auto seed = derive_seed(config.seed, Stream::Realization, {mu, r});
            std::vector<LinkGains> gains;
            for (std::size_t k = 0; k < mu; ++k) gains.push_back(gen_channel(config.params, geometry, k, seed).gains());
            const std::vector<double> e_s(mu, 0.0);
            auto& s = samples[r];
            s.greedy = timed(s.greedy_s, [&] { return greedy_schedule(config.params, gains, e_s); }).total_e_u;
            s.exhaustive =
                timed(s.exhaustive_s, [&] { return exhaustive_schedule(config.params, gains, e_s); }).total_e_u;
            s.random = random_schedule(config.params, gains, e_s, seed).total_e_u;
            s.worst = worst_schedule(config.params, gains, e_s).total_e_u;
        });
        double g = 0, rnd = 0, ex = 0, w = 0, excess = -std::numeric_limits<double>::infinity();
        double g_time = 0, ex_time = 0;
        std::int64_t ex_above = 0, g_above = 0;
        for (const auto& s : samples) {
            g += s.greedy;
            rnd += s.random;
            ex += s.exhaustive;
            w += s.worst;
            excess = std::max(excess, s.greedy - s.exhaustive);
            ex_above += s.exhaustive > s.greedy;
            g_above += s.greedy > s.random;
            g_time += s.greedy_s;
            ex_time += s.exhaustive_s;
        }
        const double n = static_cast<double>(seeds);
        t.add_row({static_cast<std::int64_t>(m), g / n, rnd / n, ex / n, w / n, excess, ex_above, g_above});
        out.timings.emplace_back("greedy_seconds_m" + std::to_string(m), g_time / n);
        out.timings.emplace_back("exhaustive_seconds_m" + std::to_string(m), ex_time / n);
    }
    out.tables.push_back(std::move(t));
    return out;
}

ScenarioResult run_csi_error(const RunConfig& config, int threads) {
    const auto reals = static_cast<std::size_t>(config.realizations);
    const auto n_eps = config.eps_values.size();
    std::vector<CsiSample> samples(reals * n_eps);
    parallel_for(reals, threads, [&](std::size_t r) {
        const Geometry geometry{config.hap_pos, config.fs_pos, {drop_in_area(config, r)}};
        const auto ch = gen_channel(config.params, geometry, 0, config.seed, r);
        const auto ideal = try_select_mode(config.params, ch.gains(), 0.0, 0.0);
        const auto csi_seed = derive_seed(config.seed, Stream::Csi, {r});
        for (std::size_t e = 0; e < n_eps; ++e) {
            auto& s = samples[r * n_eps + e];
            if (!ideal) continue;
            s.ideal = true;
            const auto estimate = perturb_csi(ch, config.eps_values[e], csi_seed);
            const auto plan = try_select_mode(config.params, estimate.gains(), 0.0, 0.0);
            std::optional<ModeSolution> real;
            if (plan) real = replay_plan(config.params, *plan, ch.gains());
            if (!real) {
                s.outage = true;
                continue;
            }
            s.mismatch = plan->mode != ideal->mode;
            s.e_u = real->e_u;
        }
    });
    Table t{"csi-error",
            {{"eps", "CSI error factor"},
             {"mean_e_u", "mean net required energy over realizations without outage, J"},
             {"rel_increase", "(mean_e_u - mean_e_u at the first eps) / |mean_e_u at the first eps|"},
             {"outage_rate", "fraction of feasible realizations whose plan fails on the true channel"},
             {"mismatch_rate", "fraction of feasible realizations that plan a different mode than with exact CSI"},
             {"feasible", "realizations where some mode is feasible on the true channel"}},
            {}};
    double base = kNaN;
    for (std::size_t e = 0; e < n_eps; ++e) {
        double sum = 0.0;
        std::int64_t ok = 0, feasible = 0, outage = 0, mismatch = 0;
        for (std::size_t r = 0; r < reals; ++r) {
            const auto& s = samples[r * n_eps + e];
            if (!s.ideal) continue;
            ++feasible;
            if (s.outage) {
                ++outage;
                continue;
            }
            ++ok;
            sum += s.e_u;
            mismatch += s.mismatch;
        }
        const double mean = ok ? sum / static_cast<double>(ok) : kNaN;
        if (e == 0) base = mean;
        const double f = feasible ? static_cast<double>(feasible) : kNaN;
        t.add_row({config.eps_values[e], mean, (mean - base) / std::abs(base), outage / f, mismatch / f, feasible});
    }
    return {{std::move(t)}, {}};
}

std::span<const ScenarioInfo> scenario_list() {
    static const ScenarioInfo list[] = {
        {"sweep-k", "mode energies versus computational complexity K", &run_sweep_k},
        {"sweep-dist", "mode energies versus HAP-MU distance with d_uf fixed", &run_sweep_dist},
        {"line-placement", "MU moving along the HAP-FS segment", &run_line_placement},
        {"placement-grid", "2-D mode map over the placement area", &run_placement_grid},
        {"sweep-pap", "2-D mode maps for several HAP powers", &run_sweep_pap},
        {"sweep-beta", "mode energies versus result scaling factor beta", &run_sweep_beta},
        {"frames", "battery storage over consecutive frames", &run_frames_scenario},
        {"multiuser", "greedy versus random versus exhaustive scheduling", &run_multiuser},
        {"csi-error", "energy penalty of planning on perturbed CSI", &run_csi_error},
    };
    return list;
}

const ScenarioInfo* find_scenario(std::string_view name) {
    for (const auto& s : scenario_list())
        if (name == s.name) return &s;
    return nullptr;
}

} // namespace swiptfog::tools
