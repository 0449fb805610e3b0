#include "reference.hpp"

#include <swiptfog/analysis.hpp>
#include <swiptfog/errors.hpp>
#include <swiptfog/local_solver.hpp>
#include <swiptfog/mode_selector.hpp>
#include <swiptfog/offload_solver.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace swiptfog;

namespace {

LinkGains table_gains() { return ref::mean_gains(SystemParams{}, 10.0, 8.0); }

ModeSolution fake(Mode mode, double e_id, double e_rf) {
    ModeSolution s;
    s.mode = mode;
    s.e_id = e_id;
    s.e_rf = e_rf;
    return with_credit(s, 0.0, 0.0);
}

} // namespace

TEST(WithCredit, RebuildsTheLedger) {
    auto s = fake(Mode::Local, 5.0, 2.0);
    EXPECT_EQ(s.e_u, 3.0);
    s = with_credit(s, 1.0, 0.5);
    EXPECT_EQ(s.e_eh, 3.0);
    EXPECT_EQ(s.e_u, 1.5);
    EXPECT_EQ(s.iota, 1.0);
    EXPECT_EQ(s.e_s, 0.5);
    s = with_credit(s, 0.0, 0.0);
    EXPECT_EQ(s.e_u, 3.0);
}

TEST(ChooseMode, TiesGoToLocal) {
    ModeCandidates c{{fake(Mode::Local, 1.0, 0.5), {}}, {fake(Mode::Offload, 1.0, 0.5), {}}};
    EXPECT_EQ(choose_mode(c, 0.0, 0.0)->mode, Mode::Local);
    c.offload.solution = fake(Mode::Offload, 1.0, 0.6);
    EXPECT_EQ(choose_mode(c, 0.0, 0.0)->mode, Mode::Offload);
}

TEST(ChooseMode, SingleFeasibleBranchIsTaken) {
    ModeCandidates c{{fake(Mode::Local, 1.0, 0.0), {}}, {std::nullopt, {Infeasibility::LinkTooWeak}}};
    EXPECT_EQ(choose_mode(c, 0.0, 0.0)->mode, Mode::Local);
    std::swap(c.local, c.offload);
    c.offload.solution->mode = Mode::Offload;
    EXPECT_EQ(choose_mode(c, 0.0, 0.0)->mode, Mode::Offload);
    c.offload = {std::nullopt, {Infeasibility::LinkTooWeak}};
    EXPECT_FALSE(choose_mode(c, 0.0, 0.0).has_value());
}

TEST(SelectMode, OnlyLocalWhenTheFogLinkIsDead) {
    const SystemParams p;
    auto g = table_gains();
    g.uf = 1e-30;
    const auto s = select_mode(p, g, 0, 0);
    EXPECT_EQ(s.mode, Mode::Local);
}

TEST(SelectMode, OnlyOffloadWhenTheCpuIsTooSlow) {
    SystemParams p;
    p.k_ops = 6e4;
    EXPECT_EQ(select_mode(p, table_gains(), 0, 0).mode, Mode::Offload);
}

TEST(SelectMode, BothInfeasibleThrows) {
    SystemParams p;
    p.k_ops = 6e4;
    auto g = table_gains();
    g.uf = 1e-30;
    try {
        select_mode(p, g, 0, 0);
        FAIL() << "expected InfeasibleError";
    } catch (const InfeasibleError& e) {
        EXPECT_EQ(e.reason(), Infeasibility::BothModesInfeasible);
    }
    EXPECT_FALSE(try_select_mode(p, g, 0, 0).has_value());
}

TEST(SelectMode, PicksTheArgminOfTheReferenceEnergies) {
    std::mt19937_64 rng(41);
    int local = 0, offload = 0;
    for (int i = 0; i < 400; ++i) {
        const auto in = ref::random_instance(rng);
        const auto chosen = try_select_mode(in.params, in.gains, 0, 0);
        const auto l = try_solve_local(in.params, in.gains.ap_u, 0, 0);
        const auto o = try_solve_offload(in.params, in.gains, 0, 0);
        ASSERT_EQ(chosen.has_value(), l.feasible() || o.feasible());
        if (!chosen) continue;
        if (l.feasible() && o.feasible()) {
            const double rl = static_cast<double>(ref::local_optimum(in.params, in.gains.ap_u, 0, 0).e_u);
            const double ro = static_cast<double>(ref::offload_optimum(in.params, in.gains).e_u);
            const double margin = 1e-9 * (std::abs(rl) + std::abs(ro));
            if (rl < ro - margin) { EXPECT_EQ(chosen->mode, Mode::Local); }
            if (ro < rl - margin) { EXPECT_EQ(chosen->mode, Mode::Offload); }
            EXPECT_EQ(chosen->e_u, std::min(l.solution->e_u, o.solution->e_u));
        } else {
            EXPECT_EQ(chosen->mode, l.feasible() ? Mode::Local : Mode::Offload);
        }
        (chosen->mode == Mode::Local ? local : offload)++;
    }
    EXPECT_GT(local, 0);
    EXPECT_GT(offload, 0);
}

TEST(SelectMode, CommonCreditNeverChangesTheChoice) {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto in = ref::random_instance(rng);
        const auto a = try_select_mode(in.params, in.gains, 0, 0);
        if (!a) continue;
        for (double shift : {1e-7, 1e-5, 1e-3}) {
            const auto b = try_select_mode(in.params, in.gains, shift, 0.5 * shift);
            ASSERT_TRUE(b.has_value());
            EXPECT_EQ(a->mode, b->mode);
            EXPECT_EQ(a->tau_ipt, b->tau_ipt);
            EXPECT_NEAR(b->e_u, a->e_u - 1.5 * shift, 1e-15 + 1e-12 * shift);
        }
    }
}

TEST(SelectMode, ModeFlipsAcrossTheComplexityThreshold) {
    const SystemParams p;
    const auto g = table_gains();
    const auto k0 = k_threshold(p, g);
    ASSERT_TRUE(std::isfinite(k0.value));
    auto below = p, above = p;
    below.k_ops = k0.value * 0.98;
    above.k_ops = k0.value * 1.02;
    EXPECT_EQ(select_mode(below, g, 0, 0).mode, Mode::Local);
    EXPECT_EQ(select_mode(above, g, 0, 0).mode, Mode::Offload);
}
