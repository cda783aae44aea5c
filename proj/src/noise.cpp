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

#include "revft/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

namespace revft {

namespace {

constexpr double kZ95 = 1.959963984540054;

void check_rate(double g, const char *what) {
    if (!(g >= 0.0 && g <= 1.0)) {
        std::ostringstream ss;
        ss << what << " must lie in [0, 1], got " << g;
        throw Error(Error::Code::InvalidArgument, ss.str());
    }
}

void cut_for(double g, std::uint64_t &cut, bool &always) {
    always = g >= 1.0;
    double scaled = std::ldexp(g, 64);
    if (always || scaled >= 18446744073709551615.0) {
        always = true;
        cut = 0;
        return;
    }
    cut = static_cast<std::uint64_t>(scaled);
}

}  // namespace

void NoiseModel::validate() const {
    check_rate(g_gate, "gate error rate");
    if (g_init >= 0) {
        check_rate(g_init, "initialization error rate");
    }
}

FaultSampler::FaultSampler(const NoiseModel &noise) {
    noise.validate();
    cut_for(noise.g_gate, gate_cut_, gate_always_);
    cut_for(noise.init_rate(), init_cut_, init_always_);
}

BitState noisy_apply(const Gate &gate, BitState state, const NoiseModel &noise, Rng &rng) {
    for (auto q : gate.targets()) {
        if (q >= state.size()) {
            throw Error(Error::Code::OutOfRange, "operand " + std::to_string(q) + " out of range");
        }
    }
    FaultSampler(noise).apply(gate, state.raw(), rng);
    return state;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) noexcept {
    std::uint64_t z = seed + (t + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng trial_rng(std::uint64_t seed, std::uint64_t t) {
    return Rng(trial_seed(seed, t));
}

SimReport SimReport::from_counts(std::uint64_t failures, std::uint64_t trials, std::uint64_t seed) {
    SimReport r;
    r.trials = trials;
    r.failures = failures;
    r.seed = seed;
    if (trials == 0) {
        return r;
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(failures) / n;
    r.p_hat = p;
    if (failures >= 30) {
        double h = kZ95 * std::sqrt(p * (1 - p) / n);
        r.ci95_halfwidth = h;
        r.ci_low = std::max(0.0, p - h);
        r.ci_high = std::min(1.0, p + h);
    } else {
        const double z2 = kZ95 * kZ95;
        double denom = 1 + z2 / n;
        double center = (p + z2 / (2 * n)) / denom;
        double h = kZ95 * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
        r.ci95_halfwidth = h;
        r.ci_low = failures == 0 ? 0.0 : std::max(0.0, center - h);
        r.ci_high = std::min(1.0, center + h);
    }
    return r;
}

unsigned default_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("REVFT_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return std::min<unsigned>(static_cast<unsigned>(v), 256);
        }
    }
    return hw;
}

SimReport run_trials(const Circuit &circuit, const InputGenerator &input, const FailurePredicate &failed,
                     const NoiseModel &noise, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    if (trials == 0) {
        throw Error(Error::Code::InvalidArgument, "trial count must be at least 1");
    }
    circuit.validate();
    const FaultSampler sampler(noise);
    if (threads == 0) {
        threads = default_threads();
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

    std::vector<std::uint64_t> failures(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned w) {
        try {
            // Contiguous trial ranges keep the result independent of the
            // worker count, since every trial owns its random stream.
            std::uint64_t lo = trials * w / threads;
            std::uint64_t hi = trials * (w + 1) / threads;
            BitState in(circuit.width());
            BitState state(circuit.width());
            std::uint64_t local = 0;
            for (std::uint64_t t = lo; t < hi; t++) {
                Rng rng = trial_rng(seed, t);
                std::fill(in.raw().begin(), in.raw().end(), 0);
                input(rng, in);
                state = in;
                auto bits = state.raw();
                for (const auto &g : circuit.gates()) {
                    sampler.apply(g, bits, rng);
                }
                local += failed(in, state) ? 1 : 0;
            }
            failures[w] = local;
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::uint64_t total = 0;
    for (auto f : failures) {
        total += f;
    }
    return SimReport::from_counts(total, trials, seed);
}

BitState run_with_fault(const Circuit &circuit, BitState state, const FaultEvent &fault) {
    if (state.size() != circuit.width()) {
        throw Error(Error::Code::InvalidArgument, "state width does not match circuit width");
    }
    if (fault.gate_index >= circuit.gates().size()) {
        throw Error(Error::Code::OutOfRange, "fault gate index out of range");
    }
    auto bits = state.raw();
    for (std::size_t k = 0; k < circuit.gates().size(); k++) {
        const auto &g = circuit.gates()[k];
        if (k == fault.gate_index) {
            for (std::size_t j = 0; j < arity(g.kind); j++) {
                bits[g.operands[j]] = fault.replacement[j] & 1;
            }
        } else {
            apply_gate_inplace(g, bits);
        }
    }
    return state;
}

SingleFaultReport enumerate_single_faults(const Circuit &circuit, const BitState &input,
                                          const std::vector<std::vector<BitIndex>> &blocks, std::size_t allowed) {
    circuit.validate();
    const BitState clean = run(circuit, input);
    SingleFaultReport rep;
    for (std::size_t k = 0; k < circuit.gates().size(); k++) {
        const std::size_t n = arity(circuit.gates()[k].kind);
        for (unsigned r = 0; r < (1u << n); r++) {
            FaultEvent f;
            f.gate_index = k;
            for (std::size_t j = 0; j < n; j++) {
                f.replacement[j] = (r >> j) & 1;
            }
            BitState out = run_with_fault(circuit, input, f);
            std::size_t worst = 0;
            for (const auto &blk : blocks) {
                std::size_t d = 0;
                for (auto q : blk) {
                    d += out[q] != clean[q];
                }
                worst = std::max(worst, d);
            }
            rep.runs++;
            rep.max_distance = std::max(rep.max_distance, worst);
            if (worst > allowed) {
                rep.violations.push_back({f, worst});
            }
        }
    }
    return rep;
}

SingleFaultReport enumerate_single_faults(const Circuit &circuit, bool codeword) {
    BitState in(circuit.width());
    for (auto q : circuit.inputs()) {
        in.set(q, codeword);
    }
    // Against the codeword itself rather than the clean run: the declared
    // outputs of a recovery circuit must hold the codeword.
    BitState expect(circuit.width());
    for (auto q : circuit.outputs()) {
        expect.set(q, codeword);
    }
    circuit.validate();
    SingleFaultReport rep;
    for (std::size_t k = 0; k < circuit.gates().size(); k++) {
        const std::size_t n = arity(circuit.gates()[k].kind);
        for (unsigned r = 0; r < (1u << n); r++) {
            FaultEvent f;
            f.gate_index = k;
            for (std::size_t j = 0; j < n; j++) {
                f.replacement[j] = (r >> j) & 1;
            }
            BitState out = run_with_fault(circuit, in, f);
            std::size_t d = 0;
            for (auto q : circuit.outputs()) {
                d += out[q] != expect[q];
            }
            rep.runs++;
            rep.max_distance = std::max(rep.max_distance, d);
            if (d > 1) {
                rep.violations.push_back({f, d});
            }
        }
    }
    return rep;
}

SimReport estimate_pbit(int level, const LayoutStrategy &layout, double g, std::uint64_t trials, std::uint64_t seed,
                        const PbitOptions &options) {
    if (level < 1) {
        throw Error(Error::Code::InvalidArgument, "estimate_pbit needs level >= 1");
    }
    NoiseModel noise = options.noise;
    noise.g_gate = g;
    noise.validate();
    const CompiledCycle cycle = compile_cycle(options.base_gate, level, layout, options.init_lowering);
    const GateKind base = options.base_gate;

    auto input = [&cycle](Rng &rng, BitState &s) {
        std::uint64_t v = rng();
        for (std::size_t k = 0; k < 3; k++) {
            if ((v >> k) & 1) {
                for (auto q : cycle.logical_inputs[k]) {
                    s.raw()[q] = 1;
                }
            }
        }
    };
    auto failed = [&cycle, base](const BitState &in, const BitState &out) {
        std::array<std::uint8_t, 3> logical{};
        for (std::size_t k = 0; k < 3; k++) {
            logical[k] = in[cycle.logical_inputs[k][0]];
        }
        apply_gate_inplace(Gate::make(base, {0, 1, 2}), logical);
        return ideal_decode(out, cycle.logical_outputs[0]) != (logical[0] != 0);
    };
    return run_trials(cycle.circuit, input, failed, noise, trials, seed, options.threads);
}

std::vector<SweepRow> sweep_threshold(const std::vector<double> &g_values, int level, const LayoutStrategy &layout,
                                      std::uint64_t trials, std::uint64_t seed, const PbitOptions &options) {
    if (g_values.empty()) {
        throw Error(Error::Code::InvalidArgument, "sweep needs at least one g value");
    }
    for (std::size_t k = 0; k < g_values.size(); k++) {
        check_rate(g_values[k], "g");
        if (k > 0 && g_values[k] < g_values[k - 1]) {
            throw Error(Error::Code::InvalidArgument, "g values must be ascending");
        }
    }
    std::vector<SweepRow> rows;
    for (double g : g_values) {
        rows.push_back({g, level, layout.str(), estimate_pbit(level, layout, g, trials, seed, options)});
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "g,level,layout,trials,failures,p_hat,ci95,seed\n";
    char buf[256];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof(buf), "%.9g,%d,%s,%llu,%llu,%.9g,%.9g,%llu\n", r.g, r.level, r.layout.c_str(),
                      static_cast<unsigned long long>(r.report.trials),
                      static_cast<unsigned long long>(r.report.failures), r.report.p_hat, r.report.ci95_halfwidth,
                      static_cast<unsigned long long>(r.report.seed));
        out += buf;
    }
    return out;
}

}  // namespace revft
