// Copyright 2026 The revft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "revft/noise.hpp"

using namespace revft;

namespace {

// Reference SplitMix64 stepping, kept separate from the library's closed form.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

std::vector<Gate> every_gate_on_three_bits() {
    std::vector<Gate> out;
    for (auto k : kAllGateKinds) {
        out.push_back(arity(k) == 2 ? Gate::make(k, {2, 0}) : Gate::make(k, {1, 2, 0}));
    }
    return out;
}

}  // namespace

TEST(Seeding, MatchesSplitMix64Stream) {
    EXPECT_EQ(trial_seed(0, 0), 0xE220A8397B1DCDAFULL);
    SplitMix64 sm{12345};
    for (std::uint64_t t = 0; t < 100; t++) {
        EXPECT_EQ(trial_seed(12345, t), sm.next());
    }
}

TEST(Noise, ZeroRateIsExact) {
    Rng rng(1);
    for (const auto &g : every_gate_on_three_bits()) {
        for (std::uint64_t v = 0; v < 8; v++) {
            auto in = BitState::from_integer(v, 3);
            EXPECT_EQ(noisy_apply(g, in, NoiseModel::uniform(0.0), rng), apply_gate(g, in));
        }
    }
}

TEST(Noise, FullRateGivesUniformOutputs) {
    Rng rng(99);
    const int n = 80000;
    std::array<int, 8> hist{};
    auto gate = Gate::make(GateKind::MAJ, {0, 1, 2});
    for (int i = 0; i < n; i++) {
        auto out = noisy_apply(gate, BitState::from_string("110"), NoiseModel::uniform(1.0), rng);
        hist[out.to_integer()]++;
    }
    double chi2 = 0;
    for (int c : hist) {
        double e = n / 8.0;
        chi2 += (c - e) * (c - e) / e;
    }
    // 7 degrees of freedom, upper 0.1% point.
    EXPECT_LT(chi2, 24.32);
}

TEST(Noise, FailingGateLeavesOtherBitsAlone) {
    Rng rng(5);
    auto gate = Gate::make(GateKind::MAJ, {1, 3, 4});
    for (int i = 0; i < 200; i++) {
        auto out = noisy_apply(gate, BitState::from_string("101011"), NoiseModel::uniform(1.0), rng);
        EXPECT_TRUE(out[0]);
        EXPECT_TRUE(out[2]);
        EXPECT_TRUE(out[5]);
    }
}

TEST(Noise, InitRateIsSeparate) {
    Rng rng(3);
    NoiseModel m{1.0, 0.0};
    auto init = Gate::make(GateKind::INIT3, {0, 1, 2});
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(noisy_apply(init, BitState::from_string("111"), m, rng).str(), "000");
    }
    EXPECT_THROW(NoiseModel::uniform(1.5).validate(), Error);
    EXPECT_THROW((NoiseModel{0.1, 1.5}).validate(), Error);
    EXPECT_NO_THROW((NoiseModel{0.1, -1.0}).validate());
}

TEST(Intervals, WilsonBelowThirtyFailures) {
    auto wilson = [](double k, double n) {
        const double z = 1.959963984540054;
        double p = k / n;
        double c = (p + z * z / (2 * n)) / (1 + z * z / n);
        double h = z / (1 + z * z / n) * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
        return std::pair{c - h, c + h};
    };
    for (auto [k, n] : {std::pair{0.0, 100.0}, {10.0, 1000.0}, {29.0, 1e6}}) {
        auto r = SimReport::from_counts(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n), 0);
        auto [lo, hi] = wilson(k, n);
        EXPECT_NEAR(r.ci_low, std::max(0.0, lo), 1e-12);
        EXPECT_NEAR(r.ci_high, hi, 1e-12);
        EXPECT_DOUBLE_EQ(r.p_hat, k / n);
    }
    auto zero = SimReport::from_counts(0, 100, 0);
    EXPECT_NEAR(zero.ci_high, 0.0369935, 1e-6);
}

TEST(Intervals, NormalFromThirtyFailures) {
    auto r = SimReport::from_counts(50, 1000, 0);
    double h = 1.959963984540054 * std::sqrt(0.05 * 0.95 / 1000);
    EXPECT_NEAR(r.ci95_halfwidth, h, 1e-12);
    EXPECT_NEAR(r.ci_low, 0.05 - h, 1e-12);
    EXPECT_NEAR(r.ci_high, 0.05 + h, 1e-12);
}

TEST(Trials, ZeroNoiseNeverFails) {
    Circuit c = build_recovery_nonlocal();
    auto input = [](Rng &rng, BitState &s) {
        bool b = rng() & 1;
        for (BitIndex q : {0u, 1u, 2u}) {
            s.set(q, b);
        }
    };
    auto failed = [](const BitState &in, const BitState &out) {
        return (out[0] + out[3] + out[6] >= 2) != in[0];
    };
    auto r = run_trials(c, input, failed, NoiseModel::uniform(0.0), 10000, 4, 2);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_EQ(estimate_pbit(1, LayoutStrategy::nonlocal(), 0.0, 5000, 1).failures, 0u);
}

TEST(Trials, DeterministicAcrossThreadCounts) {
    auto a = estimate_pbit(1, LayoutStrategy::nonlocal(), 0.02, 20000, 77, {.threads = 1});
    auto b = estimate_pbit(1, LayoutStrategy::nonlocal(), 0.02, 20000, 77, {.threads = 3});
    auto c = estimate_pbit(1, LayoutStrategy::nonlocal(), 0.02, 20000, 77, {.threads = 8});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_GT(a.failures, 0u);
    auto d = estimate_pbit(1, LayoutStrategy::nonlocal(), 0.02, 20000, 78, {.threads = 1});
    EXPECT_NE(a.failures, d.failures);
}

TEST(Trials, RecoveryBelowPairBoundAtHalfPercent) {
    Circuit c = build_recovery_nonlocal();
    auto input = [](Rng &rng, BitState &s) {
        bool b = rng() & 1;
        for (BitIndex q : {0u, 1u, 2u}) {
            s.set(q, b);
        }
    };
    auto failed = [](const BitState &in, const BitState &out) {
        return (out[0] + out[3] + out[6] >= 2) != in[0];
    };
    const double g = 0.005;
    auto r = run_trials(c, input, failed, NoiseModel::uniform(g), 1000000, 11);
    // C(9,2) g^2 with G = 9.
    EXPECT_LE(r.p_hat, 36 * g * g + 3 * r.ci95_halfwidth);
}

TEST(Sweep, ZeroRatesGiveZeroRows) {
    auto rows = sweep_threshold({0.0, 0.0}, 1, LayoutStrategy::nonlocal(), 2000, 3);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto &r : rows) {
        EXPECT_EQ(r.report.failures, 0u);
        EXPECT_EQ(r.report.p_hat, 0.0);
    }
}

TEST(Sweep, RejectsBadLists) {
    EXPECT_THROW(sweep_threshold({0.01, 0.005}, 1, LayoutStrategy::nonlocal(), 10, 1), Error);
    EXPECT_THROW(sweep_threshold({0.5, 1.5}, 1, LayoutStrategy::nonlocal(), 10, 1), Error);
    EXPECT_THROW(estimate_pbit(1, LayoutStrategy::nonlocal(), -0.1, 10, 1), Error);
}

TEST(Sweep, NonDecreasingInG) {
    auto rows = sweep_threshold({0.002, 0.005, 0.009, 0.02, 0.05}, 1, LayoutStrategy::nonlocal(), 40000, 21);
    for (std::size_t i = 1; i < rows.size(); i++) {
        const auto &lo = rows[i - 1].report;
        const auto &hi = rows[i].report;
        EXPECT_GE(hi.p_hat + hi.ci95_halfwidth + lo.ci95_halfwidth, lo.p_hat) << rows[i].g;
    }
    EXPECT_GT(rows.back().report.p_hat, rows.front().report.p_hat);
}

TEST(Sweep, LevelOneStaysUnderAnalyticBound) {
    auto rows = sweep_threshold({0.002, 0.005, 0.009}, 1, LayoutStrategy::nonlocal(), 200000, 5);
    for (const auto &r : rows) {
        EXPECT_LE(r.report.p_hat, 36 * r.g * r.g + 3 * r.report.ci95_halfwidth) << r.g;
    }
}

TEST(Sweep, AtNineOperationThresholdLogicalRateBelowG) {
    const double g = 1.0 / 108;
    auto r = estimate_pbit(1, LayoutStrategy::nonlocal(), g, 100000, 8);
    EXPECT_LE(r.p_hat, g + 3 * r.ci95_halfwidth);
}

TEST(Sweep, CsvShape) {
    auto rows = sweep_threshold({0.0, 0.01}, 1, LayoutStrategy::nonlocal(), 1000, 42);
    auto csv = sweep_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "g,level,layout,trials,failures,p_hat,ci95,seed");
    EXPECT_NE(csv.find("\n0,1,nonlocal,1000,0,0,"), std::string::npos);
    EXPECT_EQ(csv, sweep_csv(sweep_threshold({0.0, 0.01}, 1, LayoutStrategy::nonlocal(), 1000, 42)));
}

TEST(Trials, LocalLayoutsRunUnderNoise) {
    for (const auto &layout : {LayoutStrategy::one_d(), LayoutStrategy::two_d()}) {
        EXPECT_EQ(estimate_pbit(1, layout, 0.0, 500, 1).failures, 0u);
        auto r = estimate_pbit(1, layout, 0.05, 5000, 1);
        EXPECT_GT(r.failures, 0u);
        EXPECT_LT(r.p_hat, 0.5);
    }
}
