#include <gtest/gtest.h>

#include <cmath>

#include "hyperads/error.hpp"
#include "hyperads/fdm.hpp"
#include "hyperads/spectral.hpp"
#include "hyperads/validate.hpp"

using namespace hyperads;

namespace {

const Params base{0.01, 0.1, 1.0, 3.0};

TimeSeries ramp(double slope, std::size_t n = 101) {
    TimeSeries s;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 0.01 * static_cast<double>(i);
        s.times.push_back(t);
        s.sigma.push_back(slope * t);
        s.surface.push_back(1.0);
        s.conservation_residual.push_back(0.0);
    }
    return s;
}

double distance(const TimeSeries& a, const TimeSeries& b) {
    return compare_engines(a, b, uniform_grid(0.1, 2.0, 381), 1.0).max_sigma_deviation;
}

}  // namespace

TEST(Parabolic, ConservesAndIsMonotone) {
    for (auto closure : {WallClosure::local, WallClosure::nonlocal}) {
        ParabolicOptions opts;
        opts.closure = closure;
        const auto s = run_parabolic(base, InitialCondition::step(), 100, 2.0, opts);
        for (double r : s.conservation_residual) EXPECT_LT(r, 1e-12 * base.N0);
        for (std::size_t j = 1; j < s.size(); ++j) ASSERT_GE(s.sigma[j], s.sigma[j - 1]) << j;
        for (double v : audit_kinetics(s, base)) EXPECT_LT(std::abs(v), 1e-9);
    }
}

TEST(Parabolic, ClosuresAgree) {
    ParabolicOptions local, nonlocal;
    nonlocal.closure = WallClosure::nonlocal;
    const auto a = run_parabolic(base, InitialCondition::step(), 200, 2.0, local);
    const auto b = run_parabolic(base, InitialCondition::step(), 200, 2.0, nonlocal);
    EXPECT_LT(distance(a, b), 1e-3 * equilibrium(base).sigma);
}

TEST(Parabolic, ReachesEquilibrium) {
    const auto s = run_parabolic(base, InitialCondition::parabolic(), 50, 10.0);
    const double neq = s.inventory / (1.0 + 2.0 * base.L);
    EXPECT_NEAR(s.sigma.back(), base.L * neq, 1e-8);
    EXPECT_NEAR(s.surface.back(), neq, 1e-8);
}

TEST(Parabolic, RejectsBadStep) {
    ParabolicOptions opts;
    opts.k_over_h2 = 0.6;
    EXPECT_THROW(run_parabolic(base, InitialCondition::step(), 100, 1.0, opts), ConfigError);
}

TEST(Compare, IdenticalSeriesHaveZeroDeviation) {
    const auto s = run_parabolic(base, InitialCondition::step(), 50, 1.0);
    const auto rep = compare_engines(s, s, uniform_grid(0.0, 1.0, 101), 1e-12);
    EXPECT_EQ(rep.max_sigma_deviation, 0.0);
    EXPECT_EQ(rep.rms_sigma_deviation, 0.0);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.samples, 101u);
}

TEST(Compare, IsSymmetric) {
    const auto a = ramp(1.0), b = ramp(1.5);
    const auto grid = uniform_grid(0.0, 1.0, 51);
    const auto ab = compare_engines(a, b, grid, 0.4), ba = compare_engines(b, a, grid, 0.4);
    EXPECT_EQ(ab.max_sigma_deviation, ba.max_sigma_deviation);
    EXPECT_EQ(ab.rms_sigma_deviation, ba.rms_sigma_deviation);
    EXPECT_NEAR(ab.max_sigma_deviation, 0.5, 1e-14);
    EXPECT_FALSE(ab.pass);
    EXPECT_TRUE(compare_engines(a, b, grid, 0.6).pass);
}

TEST(Compare, GridOutsideSeriesThrows) {
    const auto a = ramp(1.0);
    EXPECT_THROW(compare_engines(a, a, uniform_grid(0.0, 1.5, 10), 1.0), InvalidInput);
}

TEST(Compare, HyperbolicApproachesParabolicAsBShrinks) {
    const auto oracle = run_parabolic(base, InitialCondition::step(), 200, 2.0);
    double prev = INFINITY;
    for (double B : {0.1, 1e-2, 1e-3, 1e-4}) {
        Params p = base;
        p.B = B;
        const auto h = run_fdm(p, InitialCondition::step(), Grid::from_lambda(400, default_lambda(p), 2.0));
        const double d = distance(h.series, oracle);
        EXPECT_LT(d, prev) << B;
        prev = d;
    }
}

TEST(Audit, KineticsResidualOfExactExponential) {
    // sigma = 1 - exp(-t/A) with N_s = 1/L solves the kinetics exactly; the
    // backward difference leaves an O(k) residual
    const Params p{0.5, 0.1, 2.0, 3.0};
    TimeSeries s;
    for (int i = 0; i <= 1000; ++i) {
        const double t = 1e-3 * i;
        s.times.push_back(t);
        s.sigma.push_back(1.0 - std::exp(-t / p.A));
        s.surface.push_back(1.0 / p.L);
        s.conservation_residual.push_back(0.0);
    }
    const auto r = audit_kinetics(s, p);
    ASSERT_EQ(r.size(), 1000u);
    for (double v : r) EXPECT_LT(std::abs(v), 1e-3);
}

TEST(Audit, ConservationNeedsProfiles) { EXPECT_THROW(audit_conservation(ramp(1.0)), InvalidInput); }

TEST(Landmarks, FirstLocalMaximum) {
    std::vector<double> t, v;
    for (int i = 0; i <= 200; ++i) {
        t.push_back(0.01 * i);
        v.push_back(std::sin(3.0 * t.back()));
    }
    const auto peak = first_local_maximum(t, v, 0.0, 2.0, 1e-9);
    ASSERT_TRUE(peak.has_value());
    EXPECT_NEAR(*peak, std::acos(-1.0) / 6.0, 0.01);
    std::vector<double> mono(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) mono[i] = 1.0 - std::exp(-t[i]);
    EXPECT_FALSE(first_local_maximum(t, mono, 0.0, 2.0, 1e-9).has_value());
    // a maximum sitting on the window start is not interior
    std::vector<double> down(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) down[i] = std::exp(-t[i]);
    EXPECT_FALSE(first_local_maximum(t, down, 0.0, 2.0, 1e-9).has_value());
}

TEST(Grid, UniformGridEndpoints) {
    const auto g = uniform_grid(0.05, 2.0, 40);
    ASSERT_EQ(g.size(), 40u);
    EXPECT_EQ(g.front(), 0.05);
    EXPECT_EQ(g.back(), 2.0);
}

TEST(Parabolic, NoAdsorption) {
    Params p = base;
    p.L = 0.0;
    const auto s = run_parabolic(p, InitialCondition::step(), 100, 2.0);
    for (double v : s.sigma) EXPECT_EQ(v, 0.0);
    EXPECT_NEAR(s.surface.back(), s.inventory, 1e-6 * p.N0);
}

TEST(Parabolic, EquilibriumValues) {
    const auto s = run_parabolic(base, InitialCondition::step(), 200, 10.0);
    const auto eq = equilibrium(base);
    EXPECT_NEAR(s.sigma.back(), eq.sigma, 0.005 * eq.sigma);
    EXPECT_NEAR(s.surface.back(), eq.density, 0.005 * eq.density);
}

TEST(Audit, FdmKineticsAtMachineLevelAndVanishingTail) {
    const auto r = run_fdm(base, InitialCondition::step(), Grid::from_lambda(200, default_lambda(base), 10.0));
    const auto res = audit_kinetics(r.series, base);
    double worst = 0.0;
    for (double v : res) worst = std::max(worst, std::abs(v));
    EXPECT_LT(worst, 1e-11);
    EXPECT_LT(std::abs(res.back()), 1e-13);
}

TEST(Compare, SpectralAgainstFdm) {
    const Params p{1e-3, 0.1, 1.0, 3.0};
    const auto f = run_fdm(p, InitialCondition::step(), Grid::from_lambda(400, default_lambda(p), 2.0)).series;
    const auto s = sample_series(solve_spectral(p, InitialCondition::step(), 50), uniform_grid(0.0, 2.0, 2001), {});
    const auto rep = compare_engines(s, f, uniform_grid(0.05, 2.0, 391), 0.05 * equilibrium(p).sigma);
    EXPECT_TRUE(rep.pass) << rep.max_sigma_deviation;
}
