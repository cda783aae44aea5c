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

#include <set>

#include "revft/builders.hpp"
#include "revft/json_io.hpp"
#include "revft/noise.hpp"

using namespace revft;

namespace {

const char *kMajRows[8] = {"000", "001", "010", "111", "011", "110", "101", "100"};

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

BitState logical_input(const CompiledCycle &cyc, unsigned v) {
    BitState s(cyc.circuit.width());
    for (std::size_t op = 0; op < 3; op++) {
        bool bit = (v >> (2 - op)) & 1;
        for (auto q : cyc.logical_inputs[op]) {
            s.set(q, bit);
        }
    }
    return s;
}

const std::vector<LayoutStrategy> kLayouts = {LayoutStrategy::nonlocal(), LayoutStrategy::one_d(),
                                              LayoutStrategy::two_d(), LayoutStrategy::mixed(1)};

}  // namespace

TEST(Compile, LevelZeroIsTheBareGate) {
    auto cyc = compile_cycle(GateKind::MAJ, 0, LayoutStrategy::nonlocal());
    ASSERT_EQ(cyc.circuit.gates().size(), 1u);
    EXPECT_EQ(cyc.circuit.gates()[0].kind, GateKind::MAJ);
    EXPECT_EQ(cyc.circuit.width(), 3u);
}

TEST(Compile, RejectsBadArguments) {
    EXPECT_THROW(compile_cycle(GateKind::CNOT, 1, LayoutStrategy::nonlocal()), Error);
    EXPECT_THROW(compile_cycle(GateKind::MAJ, -1, LayoutStrategy::nonlocal()), Error);
}

TEST(Compile, TransversalMajAtLevelsOneAndTwo) {
    for (int level : {1, 2}) {
        for (const auto &layout : kLayouts) {
            for (auto init : {InitLowering::Encoded, InitLowering::Physical}) {
                auto cyc = compile_cycle(GateKind::MAJ, level, layout, init);
                ASSERT_EQ(cyc.logical_outputs.size(), 3u);
                for (unsigned v = 0; v < 8; v++) {
                    auto out = run(cyc.circuit, logical_input(cyc, v));
                    for (std::size_t op = 0; op < 3; op++) {
                        ASSERT_EQ(cyc.logical_outputs[op].size(), ipow(3, level));
                        bool want = kMajRows[v][op] == '1';
                        for (auto q : cyc.logical_outputs[op]) {
                            EXPECT_EQ(out[q], want) << layout.str() << " L=" << level << " in=" << kMajRows[v];
                        }
                    }
                }
            }
        }
    }
}

TEST(Compile, OtherBaseGatesAreTransversal) {
    for (auto kind : {GateKind::TOFFOLI, GateKind::MAJINV, GateKind::SWAP3}) {
        for (const auto &layout : kLayouts) {
            auto cyc = compile_cycle(kind, 1, layout);
            for (unsigned v = 0; v < 8; v++) {
                BitState phys(3);
                for (std::size_t op = 0; op < 3; op++) {
                    phys.set(op, (v >> (2 - op)) & 1);
                }
                auto want = apply_gate(Gate::make(kind, {0, 1, 2}), phys);
                auto out = run(cyc.circuit, logical_input(cyc, v));
                for (std::size_t op = 0; op < 3; op++) {
                    for (auto q : cyc.logical_outputs[op]) {
                        EXPECT_EQ(out[q], want[op]) << gate_name(kind) << " " << layout.str();
                    }
                }
            }
        }
    }
}

TEST(Compile, NonLocalCountsMatchClosedForms) {
    for (int level = 0; level <= 3; level++) {
        auto enc = compile_cycle(GateKind::MAJ, level, LayoutStrategy::nonlocal(), InitLowering::Encoded);
        auto phys = compile_cycle(GateKind::MAJ, level, LayoutStrategy::nonlocal(), InitLowering::Physical);
        EXPECT_EQ(enc.census.total, predicted_counts(level, 11).gates) << level;
        EXPECT_EQ(phys.census.total_excluding_init(), predicted_counts(level, 9).gates) << level;
        EXPECT_EQ(enc.circuit.width(), 3 * predicted_counts(level, 9).bits);
        EXPECT_EQ(enc.census, gate_census(enc.circuit));
    }
    auto l2 = compile_cycle(GateKind::MAJ, 2, LayoutStrategy::nonlocal(), InitLowering::Physical);
    EXPECT_EQ(l2.census.total_excluding_init(), 441u);
}

TEST(Compile, LevelOneTouchesEachOperandElevenTimes) {
    auto cyc = compile_cycle(GateKind::MAJ, 1, LayoutStrategy::nonlocal());
    for (std::size_t op = 0; op < 3; op++) {
        std::size_t touching = 0;
        for (const auto &g : cyc.circuit.gates()) {
            for (auto q : g.targets()) {
                if (q / 9 == op) {
                    touching++;
                    break;
                }
            }
        }
        EXPECT_EQ(touching, 11u);
    }
}

TEST(Compile, LocalLayoutsStayLocal) {
    for (int level : {1, 2}) {
        for (const auto &layout : kLayouts) {
            auto cyc = compile_cycle(GateKind::MAJ, level, layout);
            EXPECT_TRUE(check_locality(cyc.circuit, cyc.topology).empty()) << layout.str() << " L=" << level;
            if (layout == LayoutStrategy::one_d()) {
                EXPECT_TRUE(std::holds_alternative<Line1DTopology>(cyc.topology));
            }
            if (layout == LayoutStrategy::two_d()) {
                EXPECT_TRUE(std::holds_alternative<Lattice2DTopology>(cyc.topology));
            }
        }
    }
}

TEST(Compile, OneDReloadedFromJsonStaysLocal) {
    auto cyc = compile_cycle(GateKind::MAJ, 1, LayoutStrategy::one_d());
    auto doc = compiled_cycle_to_json(cyc);
    auto reloaded = circuit_from_json(doc);
    EXPECT_EQ(reloaded, cyc.circuit);
    EXPECT_TRUE(check_locality(reloaded, Line1DTopology{}).empty());
    EXPECT_EQ(doc["metadata"]["level"], 1);
    EXPECT_EQ(doc["metadata"]["layout"], "1d");
}

TEST(Compile, LevelOneCyclesTolerateOneFault) {
    for (const auto &layout : {LayoutStrategy::nonlocal(), LayoutStrategy::two_d(), LayoutStrategy::mixed(1)}) {
        for (auto init : {InitLowering::Encoded, InitLowering::Physical}) {
            auto cyc = compile_cycle(GateKind::MAJ, 1, layout, init);
            for (unsigned v = 0; v < 8; v++) {
                auto rep = enumerate_single_faults(cyc.circuit, logical_input(cyc, v), cyc.logical_outputs, 1);
                EXPECT_TRUE(rep.violations.empty()) << layout.str() << " in=" << kMajRows[v];
                EXPECT_LE(rep.max_distance, 1u);
            }
        }
    }
}

// On a line, some interleave SWAP3 must exchange bits of two codewords with
// different indices; its failure reaches two indices of one block after the
// transversal gate. Every other single fault is tolerated.
TEST(Compile, OneDFaultsOnlyHurtInCrossCodewordSwaps) {
    auto cyc = compile_cycle(GateKind::MAJ, 1, LayoutStrategy::one_d());
    std::set<std::size_t> bad;
    for (unsigned v = 0; v < 8; v++) {
        auto rep = enumerate_single_faults(cyc.circuit, logical_input(cyc, v), cyc.logical_outputs, 1);
        for (const auto &f : rep.violations) {
            bad.insert(f.fault.gate_index);
        }
    }
    for (auto gi : bad) {
        auto kind = cyc.circuit.gates()[gi].kind;
        EXPECT_TRUE(kind == GateKind::SWAP3 || kind == GateKind::SWAP) << gi;
    }
    EXPECT_EQ(bad.size(), 8u);
}

TEST(Compile, DataPositionsAreDistinct) {
    for (const auto &layout : kLayouts) {
        auto cyc = compile_cycle(GateKind::MAJ, 2, layout);
        std::set<BitIndex> seen;
        for (const auto &block : cyc.logical_outputs) {
            seen.insert(block.begin(), block.end());
        }
        EXPECT_EQ(seen.size(), 27u);
    }
}
