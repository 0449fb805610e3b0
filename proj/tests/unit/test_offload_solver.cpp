#include "reference.hpp"

#include <swiptfog/errors.hpp>
#include <swiptfog/offload_solver.hpp>
#include <swiptfog/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace swiptfog;

namespace {

LinkGains table_gains() { return ref::mean_gains(SystemParams{}, 10.0, 8.0); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

OffloadTerms terms_of(const SystemParams& p, const LinkGains& g) {
    return offload_terms(p, g, offload_budget(p, g.fu), 0.0, 0.0);
}

/// Random instances whose offload branch is feasible.
std::vector<ref::Instance> feasible_instances(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<ref::Instance> out;
    while (static_cast<int>(out.size()) < count) {
        auto in = ref::random_instance(rng);
        if (offload_feasible(in.params, in.gains)) out.push_back(in);
    }
    return out;
}

} // namespace

TEST(OffloadBudget, ReferenceDeployment) {
    const SystemParams p;
    const auto g = table_gains();
    const auto b = offload_budget(p, g.fu);
    EXPECT_DOUBLE_EQ(b.tau_fogcpt, 2e-7);
    const double fb = p.beta * p.r_th * p.t_b / (p.bandwidth * std::log2(1.0 + g.fu * p.p_fu_max / p.noise_f));
    EXPECT_NEAR(b.tau_fu, fb, 1e-15);
    EXPECT_NEAR(b.t_frak, p.t_b - 2e-7 - fb, 1e-15);
    EXPECT_NEAR(static_cast<double>(ref::offload_budget(p, g.fu)), b.t_frak, 1e-15);
}

TEST(OffloadBudget, ZeroBetaHasNoFeedbackSlot) {
    SystemParams p;
    p.beta = 0.0;
    EXPECT_EQ(offload_budget(p, table_gains().fu).tau_fu, 0.0);
}

TEST(OffloadBudget, ExhaustedWhenFogComputeFillsTheBlock) {
    SystemParams p;
    p.k_ops = 5e10;  // K R_th T_b / f_fog = T_b
    try {
        offload_budget(p, table_gains().fu);
        FAIL() << "expected InfeasibleError";
    } catch (const InfeasibleError& e) {
        EXPECT_EQ(e.reason(), Infeasibility::BudgetExhausted);
    }
    EXPECT_EQ(offload_feasible(p, table_gains()).reason, Infeasibility::BudgetExhausted);
}

TEST(OffloadSolver, ShortestUplinkAtTheReferenceDeployment) {
    const SystemParams p;
    const double t = min_uplink_time(p, table_gains().uf);
    EXPECT_NEAR(t, 3.386e-4, 1e-6);
    EXPECT_NEAR(t * std::log2(1.0 + p.p_uf_max * table_gains().uf / p.noise_s), p.bits_per_hz(), 1e-15);
}

TEST(OffloadSolver, LinkTooWeak) {
    const SystemParams p;
    auto g = table_gains();
    g.uf = 1e-30;
    EXPECT_EQ(offload_feasible(p, g).reason, Infeasibility::LinkTooWeak);
    EXPECT_THROW(solve_offload(p, g, 0, 0), InfeasibleError);
}

TEST(OffloadSolver, ChannelTooWeakOnTheDownlink) {
    const SystemParams p;
    auto g = table_gains();
    g.ap_u = 1e-20;
    EXPECT_EQ(offload_feasible(p, g).reason, Infeasibility::ChannelTooWeak);
}

TEST(Vartheta, MatchesTheTermByTermExpansion) {
    for (const auto& in : feasible_instances(1, 50)) {
        const auto t = terms_of(in.params, in.gains);
        for (double f : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            const double tau = f * t.t_frak;
            const double v = vartheta(t, tau);
            const double r = static_cast<double>(ref::vartheta(in.params, in.gains, tau));
            EXPECT_NEAR(v, r, 1e-10 * (std::abs(r) + in.params.xi * in.params.task_bits()));
        }
    }
}

TEST(Vartheta, CreditShiftsTheObjective) {
    const SystemParams p;
    const auto g = table_gains();
    const double tau = 0.4;
    const double base = vartheta(p, g, tau, 0.0, 0.0);
    EXPECT_NEAR(vartheta(p, g, tau, 2e-6, 3e-6), base - 5e-6, 1e-18);
}

TEST(Vartheta, DomainIsTheOpenBudget) {
    const SystemParams p;
    const auto t = terms_of(p, table_gains());
    EXPECT_THROW(vartheta(t, 0.0), std::domain_error);
    EXPECT_THROW(vartheta(t, -0.1), std::domain_error);
    EXPECT_THROW(vartheta(t, t.t_frak), std::domain_error);
    EXPECT_THROW(vartheta_prime(t, t.t_frak), std::domain_error);
    EXPECT_THROW(vartheta_prime(t, 0.0), std::domain_error);
    EXPECT_NO_THROW(vartheta(t, 0.5 * t.t_frak));
}

TEST(Vartheta, ConvexOnTheBudget) {
    for (const auto& in : feasible_instances(2, 40)) {
        const auto t = terms_of(in.params, in.gains);
        const double h = 1e-4 * t.t_frak;
        for (int k = 1; k < 200; ++k) {
            const double x = t.t_frak * k / 200.0;
            const double fm = vartheta(t, x - h), f0 = vartheta(t, x), fp = vartheta(t, x + h);
            const double scale = std::abs(fm) + std::abs(f0) + std::abs(fp);
            EXPECT_GE(fm + fp - 2.0 * f0, -1e-12 * scale) << "x=" << x;
        }
    }
}

TEST(Vartheta, DerivativeMatchesFiniteDifferences) {
    for (const auto& in : feasible_instances(3, 40)) {
        const auto t = terms_of(in.params, in.gains);
        auto f = [&](long double x) { return ref::vartheta(in.params, in.gains, x); };
        for (double frac : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95}) {
            const double x = frac * t.t_frak;
            const double fd = static_cast<double>(ref::derivative(f, x, 1e-5L * t.t_frak));
            const double an = vartheta_prime(t, x);
            EXPECT_LE(std::abs(an - fd), 1e-6 * std::max(std::abs(fd), t.c)) << "x=" << x;
        }
    }
}

TEST(Vartheta, DerivativeIsIncreasingAndChangesSign) {
    for (const auto& in : feasible_instances(4, 40)) {
        const auto t = terms_of(in.params, in.gains);
        EXPECT_LT(vartheta_prime_sign(t, kBracketInset * t.t_frak), 0);
        EXPECT_GT(vartheta_prime_sign(t, (1 - kBracketInset) * t.t_frak), 0);
        double prev = -INFINITY;
        for (int k = 1; k < 500; ++k) {
            const double v = vartheta_prime(t, t.t_frak * k / 500.0);
            EXPECT_GE(v, prev);
            prev = v;
        }
    }
}

TEST(Vartheta, SignSurvivesOverflowAtTheEnds) {
    SystemParams p;
    p.r_th = 1e6;
    const auto t = terms_of(p, table_gains());
    const double lo = 1e-9 * t.t_frak;
    EXPECT_TRUE(std::isnan(vartheta_prime(t, lo)) || std::isinf(vartheta_prime(t, lo)));
    EXPECT_EQ(vartheta_prime_sign(t, lo), -1);
    EXPECT_EQ(vartheta_prime_sign(t, t.t_frak - lo), 1);
}

TEST(StationaryPoint, BracketMeetsTheTolerance) {
    for (const auto& in : feasible_instances(5, 50)) {
        const auto t = terms_of(in.params, in.gains);
        std::vector<std::pair<double, int>> seen;
        const auto sp = find_stationary_point(t, in.params.t_b, [&](double x, int s) { seen.emplace_back(x, s); });
        ASSERT_TRUE(sp.interior);
        EXPECT_LE(sp.hi - sp.lo, kTauTolerance * in.params.t_b);
        EXPECT_GE(sp.tau, sp.lo);
        EXPECT_LE(sp.tau, sp.hi);
        EXPECT_LE(vartheta_prime_sign(t, sp.lo), 0);
        EXPECT_GE(vartheta_prime_sign(t, sp.hi), 0);
        // negative signs all sit left of positive ones
        double max_neg = 0.0, min_pos = t.t_frak;
        for (const auto& [x, s] : seen) {
            if (s < 0) max_neg = std::max(max_neg, x);
            if (s > 0) min_pos = std::min(min_pos, x);
        }
        EXPECT_LT(max_neg, min_pos);
        EXPECT_EQ(sp.evaluations, static_cast<int>(seen.size()) + 2);
    }
}

TEST(StationaryPoint, MonotoneDerivativeWithoutASignChangeTakesTheCheaperEnd) {
    OffloadTerms t;
    t.a = 1e-12;
    t.b = 0.01;
    t.c = 0.0;
    t.d = 0.0;
    t.t_frak = 0.9;
    const auto sp = find_stationary_point(t, 1.0);
    EXPECT_FALSE(sp.interior);
    EXPECT_EQ(sp.tau, kBracketInset * t.t_frak);
}

TEST(OffloadSolver, MatchesGoldenSectionOnRandomInstances) {
    int interior = 0;
    for (const auto& in : feasible_instances(6, 200)) {
        const auto s = solve_offload(in.params, in.gains, 0, 0);
        const auto r = ref::offload_optimum(in.params, in.gains);
        EXPECT_EQ(s.power_clamped, r.clamped);
        const double scale = in.params.xi * in.params.task_bits() + std::abs(static_cast<double>(r.e_u));
        EXPECT_LE(s.e_u, static_cast<double>(r.e_u) + 1e-10 * scale);
        EXPECT_NEAR(s.e_u, static_cast<double>(r.e_u), 1e-9 * scale);
        EXPECT_NEAR(s.tau_ipt, static_cast<double>(r.tau_ipt), 1e-6 * in.params.t_b);
        if (!s.power_clamped) ++interior;
    }
    EXPECT_GT(interior, 20);
}

TEST(OffloadSolver, UnclampedSolutionIsTightOnEveryConstraint) {
    for (const auto& in : feasible_instances(7, 100)) {
        const auto& p = in.params;
        const auto s = solve_offload(p, in.gains, 0, 0);
        const double t_frak = p.t_b - s.tau_fogcpt - s.tau_fu;
        EXPECT_NEAR(s.busy_time(), p.t_b, 1e-12);
        EXPECT_NEAR(s.tau_ipt + s.tau_uf, t_frak, 1e-12);
        const double up = p.bandwidth * s.tau_uf / p.t_b * std::log2(1.0 + s.p_uf * in.gains.uf / p.noise_s);
        const double down = p.bandwidth * s.tau_ipt / p.t_b * std::log2(1.0 + s.rho * p.p_ap * in.gains.ap_u / p.noise_n);
        EXPECT_LT(rel(up, p.r_th), 1e-9);
        EXPECT_LT(rel(down, p.r_th), 1e-9);
        EXPECT_LE(s.p_uf, p.p_uf_max * (1 + 1e-12));
        EXPECT_DOUBLE_EQ(s.e_uf, s.p_uf * s.tau_uf);
        EXPECT_DOUBLE_EQ(s.e_u, s.e_id + s.e_uf - s.e_eh);
        EXPECT_EQ(s.e_cpt, 0.0);
    }
}

TEST(OffloadSolver, ClampPinsThePowerExactly) {
    SystemParams p;
    const auto g = table_gains();
    const auto free = solve_offload(p, g, 0, 0);
    ASSERT_FALSE(free.power_clamped);
    EXPECT_DOUBLE_EQ(free.required_power, free.p_uf);
    p.p_uf_max = 0.5 * free.required_power;
    const auto s = solve_offload(p, g, 0, 0);
    EXPECT_TRUE(s.power_clamped);
    EXPECT_EQ(s.p_uf, p.p_uf_max);
    EXPECT_EQ(s.tau_uf, min_uplink_time(p, g.uf));
    EXPECT_DOUBLE_EQ(s.required_power, free.required_power);
    EXPECT_GT(s.e_u, free.e_u);
}

TEST(OffloadSolver, EnergyIsContinuousAcrossTheClamp) {
    for (const auto& in : feasible_instances(8, 30)) {
        auto p = in.params;
        const auto free = solve_offload(p, in.gains, 0, 0);
        if (free.power_clamped) continue;
        const double rho_req = free.required_power;
        p.p_uf_max = rho_req * (1 + 1e-9);
        const auto above = solve_offload(p, in.gains, 0, 0);
        p.p_uf_max = rho_req * (1 - 1e-9);
        const auto below = solve_offload(p, in.gains, 0, 0);
        EXPECT_FALSE(above.power_clamped);
        EXPECT_TRUE(below.power_clamped);
        const double scale = p.xi * p.task_bits() + std::abs(free.e_u);
        EXPECT_NEAR(above.e_u, below.e_u, 1e-7 * scale);
    }
}

TEST(OffloadSolver, CreditDoesNotMoveTheOperatingPoint) {
    const SystemParams p;
    const auto a = solve_offload(p, table_gains(), 0, 0);
    const auto b = solve_offload(p, table_gains(), 1e-5, 2e-5);
    EXPECT_EQ(a.tau_ipt, b.tau_ipt);
    EXPECT_EQ(a.p_uf, b.p_uf);
    EXPECT_DOUBLE_EQ(b.e_u, a.e_u - 3e-5);
}

TEST(OffloadSolver, NeverAboveTheLatticeOracle) {
    for (const auto& in : feasible_instances(9, 60)) {
        const auto s = solve_offload(in.params, in.gains, 0, 0);
        const auto grid = grid_search_offload(in.params, in.gains, 0, 0, {200, 0});
        const double scale = in.params.xi * in.params.task_bits() + std::abs(s.e_u);
        EXPECT_LE(s.e_u, grid.e_u + 1e-12 * scale);
    }
}
