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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "revft/builders.hpp"
#include "revft/circuit.hpp"

namespace revft {

using Rng = std::mt19937_64;

struct NoiseModel {
    double g_gate = 0.0;
    double g_init = -1.0;  // negative: same as g_gate

    static NoiseModel uniform(double g) {
        return {g, -1.0};
    }
    double init_rate() const {
        return g_init < 0 ? g_gate : g_init;
    }
    /// Throws unless both rates lie in [0, 1].
    void validate() const;
};

struct FaultEvent {
    std::size_t gate_index = 0;
    std::array<std::uint8_t, 3> replacement{};
};

/// Per-gate failure test against a precomputed 64-bit cut-off: one uniform
/// draw per gate, a second draw supplies the replacement bits on failure.
class FaultSampler {
   public:
    explicit FaultSampler(const NoiseModel &noise);

    void apply(const Gate &gate, std::span<std::uint8_t> bits, Rng &rng) const noexcept {
        std::uint64_t cut = gate.kind == GateKind::INIT3 ? init_cut_ : gate_cut_;
        bool always = gate.kind == GateKind::INIT3 ? init_always_ : gate_always_;
        std::uint64_t u = rng();
        if (always || u < cut) {
            std::uint64_t r = rng();
            const std::size_t n = arity(gate.kind);
            for (std::size_t k = 0; k < n; k++) {
                bits[gate.operands[k]] = static_cast<std::uint8_t>((r >> k) & 1);
            }
        } else {
            apply_gate_inplace(gate, bits);
        }
    }

   private:
    std::uint64_t gate_cut_ = 0;
    std::uint64_t init_cut_ = 0;
    bool gate_always_ = false;
    bool init_always_ = false;
};

BitState noisy_apply(const Gate &gate, BitState state, const NoiseModel &noise, Rng &rng);

/// Independent stream for trial `t`: an mt19937_64 seeded with the (t+1)-th
/// output of SplitMix64 started at `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) noexcept;
Rng trial_rng(std::uint64_t seed, std::uint64_t t);

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double p_hat = 0.0;
    double ci95_halfwidth = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;

    /// Normal interval once 30 failures are seen, Wilson below that.
    static SimReport from_counts(std::uint64_t failures, std::uint64_t trials, std::uint64_t seed);
    bool operator==(const SimReport &) const = default;
};

/// Fills the input state for one trial (the state arrives zeroed).
using InputGenerator = std::function<void(Rng &, BitState &)>;
using FailurePredicate = std::function<bool(const BitState &input, const BitState &output)>;

/// Worker count from REVFT_THREADS, else hardware concurrency.
unsigned default_threads();

SimReport run_trials(const Circuit &circuit, const InputGenerator &input, const FailurePredicate &failed,
                     const NoiseModel &noise, std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

/// Executes `circuit` exactly except for `fault`, whose replacement bits are
/// written in place of the gate's result.
BitState run_with_fault(const Circuit &circuit, BitState state, const FaultEvent &fault);

struct FaultViolation {
    FaultEvent fault;
    std::size_t distance = 0;
};

struct SingleFaultReport {
    std::size_t runs = 0;
    std::size_t max_distance = 0;
    std::vector<FaultViolation> violations;
};

/// Every (gate, replacement) pair on a clean codeword input; distance is the
/// Hamming distance of the declared outputs from the codeword.
SingleFaultReport enumerate_single_faults(const Circuit &circuit, bool codeword);

/// General form: distance is the largest Hamming distance, over the given
/// output blocks, between the faulty run and the fault-free run.
SingleFaultReport enumerate_single_faults(const Circuit &circuit, const BitState &input,
                                          const std::vector<std::vector<BitIndex>> &blocks, std::size_t allowed = 1);

struct PbitOptions {
    GateKind base_gate = GateKind::MAJ;
    InitLowering init_lowering = InitLowering::Encoded;
    NoiseModel noise;  // g_gate overridden by the g argument, g_init kept if set
    unsigned threads = 0;
};

/// Logical error rate of one compiled cycle: each trial draws uniform logical
/// values for the three operands, encodes them, runs the cycle under noise and
/// fails when the decoded first operand differs from the fault-free result.
SimReport estimate_pbit(int level, const LayoutStrategy &layout, double g, std::uint64_t trials, std::uint64_t seed,
                        const PbitOptions &options = {});

struct SweepRow {
    double g = 0.0;
    int level = 0;
    std::string layout;
    SimReport report;
};

/// One estimate_pbit row per g, every row reusing `seed` so rows are paired.
std::vector<SweepRow> sweep_threshold(const std::vector<double> &g_values, int level, const LayoutStrategy &layout,
                                      std::uint64_t trials, std::uint64_t seed, const PbitOptions &options = {});

std::string sweep_csv(const std::vector<SweepRow> &rows);

}  // namespace revft
