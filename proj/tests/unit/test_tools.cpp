#include <swiptfog/errors.hpp>
#include <swiptfog/mode_selector.hpp>
#include <swiptfog/offload_solver.hpp>
#include <swiptfog_tools/config.hpp>
#include <swiptfog_tools/crossover.hpp>
#include <swiptfog_tools/csi.hpp>
#include <swiptfog_tools/parallel.hpp>
#include <swiptfog_tools/runner.hpp>
#include <swiptfog_tools/scenarios.hpp>
#include <swiptfog_tools/table.hpp>

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace swiptfog;
using namespace swiptfog::tools;
namespace fs = std::filesystem;

namespace {

RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() /
                ("swipt-fog-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    [[nodiscard]] const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

fs::path write_text(const fs::path& path, const std::string& text) {
    std::ofstream(path) << text;
    return path;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Small run settings so scenario tests stay fast.
const char* kSmallConfig =
    "realizations = 3\n"
    "k_points = 5\n"
    "beta_points = 5\n"
    "dist_points = 5\n"
    "n_frames = 4\n"
    "frame_distances = 18, 20\n"
    "m_max = 3\n"
    "eps_values = 0, 0.1\n";

class EnvGuard {
public:
    explicit EnvGuard(const char* name) : name_(name) {
        if (const char* v = std::getenv(name)) old_ = v;
    }
    ~EnvGuard() {
        if (old_) ::setenv(name_, old_->c_str(), 1);
        else ::unsetenv(name_);
    }

private:
    const char* name_;
    std::optional<std::string> old_;
};

int run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(SWIPT_FOG_BIN) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Config, DefaultsAndOverrides) {
    const auto c = parse("# run\nrealizations = 7\nseed = 12345678901234\nk_ops = 2e3\nfs_pos = 1, 2\n"
                         "pap_values = 1, 3\nbattery_cap = 1e-3\n");
    EXPECT_EQ(c.realizations, 7);
    EXPECT_EQ(c.seed, 12345678901234ull);
    EXPECT_EQ(c.params.k_ops, 2e3);
    EXPECT_EQ(c.fs_pos.x, 1.0);
    EXPECT_EQ(c.fs_pos.y, 2.0);
    EXPECT_EQ(c.pap_values, (std::vector<double>{1.0, 3.0}));
    ASSERT_TRUE(c.battery_cap.has_value());
    EXPECT_EQ(*c.battery_cap, 1e-3);
    EXPECT_FALSE(parse("battery_cap = inf\n").battery_cap.has_value());
    EXPECT_EQ(parse("").grid_res, 41);
}

TEST(Config, Errors) {
    EXPECT_THROW(parse("realizations = 0\n"), ConfigError);
    EXPECT_THROW(parse("realizations = 2.5\n"), ConfigError);
    EXPECT_THROW(parse("bogus = 1\n"), ConfigError);
    EXPECT_THROW(parse("seed = -1\n"), ConfigError);
    EXPECT_THROW(parse("fs_pos = 1\n"), ConfigError);
    EXPECT_THROW(parse("k_min = 10\nk_max = 5\n"), ConfigError);
    EXPECT_THROW(parse("m_max = 10\n"), ConfigError);
    EXPECT_THROW(parse("eta = 2\n"), ConfigError);
    try {
        parse("\n\nbogus = 1\n");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(Config, RunEntriesRoundTrip) {
    const auto c = parse("seed = 9\npap_values = 0.5, 2\n");
    std::string text;
    for (const auto& [k, v] : run_entries(c)) text += k + " = " + v + "\n";
    const auto again = parse(text);
    EXPECT_EQ(again.seed, 9u);
    EXPECT_EQ(again.pap_values, c.pap_values);
    EXPECT_EQ(again.grid_res, c.grid_res);
}

TEST(TableTest, CsvAndColumns) {
    Table t{"demo", {{"x", "abscissa"}, {"n", "count"}, {"s", "label"}}, {}};
    t.add_row({0.1, std::int64_t{3}, std::string("a")});
    t.add_row({1e-17, std::int64_t{-1}, std::string("b")});
    EXPECT_THROW(t.add_row({1.0}), std::invalid_argument);
    std::ostringstream csv, cols;
    t.write_csv(csv);
    t.write_columns(cols);
    EXPECT_EQ(csv.str(), "x,n,s\n0.1,3,a\n1e-17,-1,b\n");
    EXPECT_EQ(cols.str(), "x: abscissa\nn: count\ns: label\n");
    EXPECT_EQ(t.numbers("n"), (std::vector<double>{3.0, -1.0}));
    EXPECT_EQ(t.strings("s"), (std::vector<std::string>{"a", "b"}));
    EXPECT_THROW(static_cast<void>(t.index("missing")), std::out_of_range);
    EXPECT_THROW(static_cast<void>(t.numbers("s")), std::invalid_argument);
}

TEST(Crossovers, LinearAndLogInterpolation) {
    const std::vector<double> x{1, 2, 3, 4};
    const std::vector<double> g{-1, 1, 1, -3};
    const auto c = crossovers(x, g, false);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_DOUBLE_EQ(c[0], 1.5);
    EXPECT_DOUBLE_EQ(c[1], 3.25);

    const std::vector<double> lx{10, 1000};
    const std::vector<double> lg{-1, 1};
    EXPECT_NEAR(crossovers(lx, lg, true).at(0), 100.0, 1e-12);

    const std::vector<double> gz{-1, 0, 1};
    const std::vector<double> xz{1, 2, 3};
    EXPECT_EQ(crossovers(xz, gz, false), (std::vector<double>{2.0}));

    const std::vector<double> gn{-1, NAN, 1, INFINITY, -1};
    const std::vector<double> xn{1, 2, 3, 4, 5};
    const auto cn = crossovers(xn, gn, false);
    EXPECT_EQ(cn.size(), 2u);

    const std::vector<double> same{1, 2, 3};
    EXPECT_TRUE(crossovers(xz, same, false).empty());
}

TEST(Parallel, EveryIndexOnce) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Parallel, RethrowsTheFirstError) {
    EXPECT_THROW(parallel_for(100, 3,
                              [](std::size_t i) {
                                  if (i == 37) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

TEST(Parallel, ThreadCountHonoursTheEnvironment) {
    EnvGuard guard("SWIPT_FOG_THREADS");
    ::setenv("SWIPT_FOG_THREADS", "1", 1);
    EXPECT_EQ(thread_count(), 1);
    ::setenv("SWIPT_FOG_THREADS", "100000", 1);
    EXPECT_GE(thread_count(), 1);
    EXPECT_LE(thread_count(), 100000);
    ::setenv("SWIPT_FOG_THREADS", "0", 1);
    EXPECT_THROW(thread_count(), ConfigError);
    ::setenv("SWIPT_FOG_THREADS", "two", 1);
    EXPECT_THROW(thread_count(), ConfigError);
    ::unsetenv("SWIPT_FOG_THREADS");
    EXPECT_GE(thread_count(), 1);
}

TEST(Replay, PerfectCsiReproducesThePlan) {
    const SystemParams p;
    LinkGains g{8 * 4.75e-6, 1.08e-5, 1.08e-5};
    const auto plan = select_mode(p, g, 1e-7, 0.0);
    const auto r = replay_plan(p, plan, g);
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(r->e_u, plan.e_u, 1e-12 * std::abs(plan.e_u));
    EXPECT_NEAR(r->rho, plan.rho, 1e-12 * plan.rho);
    EXPECT_EQ(r->tau_ipt, plan.tau_ipt);
}

TEST(Replay, WeakerTruthCostsMoreOrFails) {
    const SystemParams p;
    LinkGains g{8 * 4.75e-6, 1.08e-5, 1.08e-5};
    const auto plan = select_mode(p, g, 0.0, 0.0);
    auto weaker = g;
    weaker.ap_u *= 0.9;
    weaker.uf *= 0.9;
    const auto r = replay_plan(p, plan, weaker);
    ASSERT_TRUE(r.has_value());
    EXPECT_GT(r->e_u, plan.e_u);
    auto dead = g;
    dead.ap_u = 1e-20;
    EXPECT_FALSE(replay_plan(p, plan, dead).has_value());
}

TEST(Replay, OffloadOutageWhenThePowerCapIsExceeded) {
    SystemParams p;
    p.k_ops = 6e4;
    LinkGains g{8 * 4.75e-6, 1.08e-5, 1.08e-5};
    p.p_uf_max = 0.5 * solve_offload(p, g, 0, 0).required_power;
    const auto plan = select_mode(p, g, 0.0, 0.0);
    ASSERT_EQ(plan.mode, Mode::Offload);
    ASSERT_TRUE(plan.power_clamped);
    auto weaker = g;
    weaker.uf *= 0.5;
    EXPECT_FALSE(replay_plan(p, plan, weaker).has_value());
}

TEST(Scenarios, RegistryKnowsEveryName) {
    for (const char* name : {"sweep-k", "sweep-dist", "line-placement", "placement-grid", "sweep-pap",
                             "sweep-beta", "frames", "multiuser", "csi-error"})
        EXPECT_NE(find_scenario(name), nullptr) << name;
    EXPECT_EQ(find_scenario("nope"), nullptr);
    EXPECT_EQ(scenario_list().size(), 9u);
}

TEST(Scenarios, SweepColumnsAreConsistent) {
    const auto c = parse(kSmallConfig);
    const auto r = run_sweep_k(c, 1);
    ASSERT_FALSE(r.tables.empty());
    const auto& t = r.tables.front();
    EXPECT_EQ(t.name, "sweep-k");
    EXPECT_EQ(t.rows.size(), 5u);
    EXPECT_EQ(t.columns.front().name, "k_ops");
    const auto x = t.numbers("k_ops");
    EXPECT_DOUBLE_EQ(x.front(), c.k_min);
    EXPECT_NEAR(x.back(), c.k_max, 1e-9 * c.k_max);
    const auto l = t.numbers("local_e_u");
    const auto o = t.numbers("offload_e_u");
    const auto gap = t.numbers("gap");
    for (std::size_t i = 0; i < gap.size(); ++i)
        if (std::isfinite(l[i]) && std::isfinite(o[i])) { EXPECT_DOUBLE_EQ(gap[i], l[i] - o[i]); }
}

TEST(Runner, ExitCodes) {
    TempDir tmp;
    const auto cfg = write_text(tmp.path() / "small.conf", kSmallConfig);
    std::ostringstream err;

    RunRequest bad_name{"no-such", cfg, tmp.path() / "a", {}, {}, {}};
    EXPECT_EQ(run_request(bad_name, err), kExitUnknownScenario);

    RunRequest zero{"sweep-k", cfg, tmp.path() / "zero", 0, {}, {}};
    EXPECT_EQ(run_request(zero, err), kExitInvalidConfig);
    EXPECT_FALSE(fs::exists(tmp.path() / "zero"));

    const auto broken = write_text(tmp.path() / "broken.conf", "realizations = 0\n");
    RunRequest bad_cfg{"sweep-k", broken, tmp.path() / "b", {}, {}, {}};
    EXPECT_EQ(run_request(bad_cfg, err), kExitInvalidConfig);
    EXPECT_FALSE(fs::exists(tmp.path() / "b"));

    RunRequest missing{"sweep-k", tmp.path() / "missing.conf", tmp.path() / "c", {}, {}, {}};
    EXPECT_EQ(run_request(missing, err), kExitInvalidConfig);

    const auto file = write_text(tmp.path() / "plain-file", "x");
    RunRequest unwritable{"sweep-k", cfg, file / "sub", {}, {}, {}};
    EXPECT_EQ(run_request(unwritable, err), kExitUnwritableOutput);

    RunRequest ok{"sweep-k", cfg, tmp.path() / "ok", {}, {}, {}};
    EXPECT_EQ(run_request(ok, err), kExitOk) << err.str();
    EXPECT_TRUE(fs::exists(tmp.path() / "ok" / "sweep-k.csv"));
    EXPECT_TRUE(fs::exists(tmp.path() / "ok" / "sweep-k.columns.txt"));
    EXPECT_TRUE(fs::exists(tmp.path() / "ok" / "manifest.json"));
    EXPECT_FALSE(fs::exists(tmp.path() / "ok" / ".swipt-fog-probe"));
}

TEST(Runner, OutputsAreReproducibleAcrossThreadCounts) {
    EnvGuard guard("SWIPT_FOG_THREADS");
    TempDir tmp;
    const auto cfg = write_text(tmp.path() / "small.conf", kSmallConfig);
    std::ostringstream err;
    for (const char* name : {"sweep-dist", "frames", "multiuser", "csi-error"}) {
        ::setenv("SWIPT_FOG_THREADS", "1", 1);
        ASSERT_EQ(run_request({name, cfg, tmp.path() / "one", {}, {}, {}}, err), kExitOk) << err.str();
        ::setenv("SWIPT_FOG_THREADS", "3", 1);
        ASSERT_EQ(run_request({name, cfg, tmp.path() / "three", {}, {}, {}}, err), kExitOk) << err.str();
        for (const auto& entry : fs::directory_iterator(tmp.path() / "one")) {
            if (entry.path().extension() != ".csv") continue;
            EXPECT_EQ(read_text(entry.path()), read_text(tmp.path() / "three" / entry.path().filename()))
                << name << " " << entry.path().filename();
        }
    }
}

TEST(Runner, SeedOverrideChangesTheDraws) {
    TempDir tmp;
    const auto cfg = write_text(tmp.path() / "small.conf", kSmallConfig);
    std::ostringstream err;
    ASSERT_EQ(run_request({"sweep-dist", cfg, tmp.path() / "a", {}, 1, {}}, err), kExitOk);
    ASSERT_EQ(run_request({"sweep-dist", cfg, tmp.path() / "b", {}, 2, {}}, err), kExitOk);
    EXPECT_NE(read_text(tmp.path() / "a" / "sweep-dist.csv"), read_text(tmp.path() / "b" / "sweep-dist.csv"));
    const auto manifest = read_text(tmp.path() / "b" / "manifest.json");
    EXPECT_NE(manifest.find("\"seed\": 2"), std::string::npos);
    EXPECT_NE(manifest.find("\"git_describe\""), std::string::npos);
}

TEST(Cli, ExitCodes) {
    TempDir tmp;
    const auto cfg = write_text(tmp.path() / "small.conf", kSmallConfig).string();
    const auto out = (tmp.path() / "out").string();
    EXPECT_EQ(run_cli("sweep-k --config " + cfg + " --out " + out), 0);
    EXPECT_TRUE(fs::exists(tmp.path() / "out" / "manifest.json"));
    EXPECT_EQ(run_cli("nope --config " + cfg + " --out " + out), 2);
    const auto file = write_text(tmp.path() / "plain-file", "x").string();
    EXPECT_EQ(run_cli("sweep-k --config " + cfg + " --out " + file + "/sub"), 3);
    EXPECT_EQ(run_cli("sweep-k --config " + cfg + " --out " + out + "2 --realizations 0"), 4);
    EXPECT_FALSE(fs::exists(tmp.path() / "out2"));
    EXPECT_EQ(run_cli("sweep-k --config " + cfg + " --out " + out + " --realizations x"), 4);
    EXPECT_EQ(run_cli("sweep-k --out " + out), 4);
    EXPECT_EQ(run_cli("--version"), 0);
    EXPECT_EQ(run_cli("sweep-k --config " + cfg + " --out " + out, "SWIPT_FOG_THREADS=0"), 4);
    EXPECT_EQ(run_cli("sweep-k --config " + cfg + " --out " + out, "SWIPT_FOG_THREADS=1"), 0);
}
