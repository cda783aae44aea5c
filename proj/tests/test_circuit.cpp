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

#include <algorithm>
#include <map>
#include <random>

#include "revft/circuit.hpp"
#include "revft/json_io.hpp"

using namespace revft;

namespace {

// MAJ truth table, input abc -> output abc.
const std::map<std::string, std::string> kMajTruth = {
    {"000", "000"}, {"001", "001"}, {"010", "010"}, {"011", "111"},
    {"100", "011"}, {"101", "110"}, {"110", "101"}, {"111", "100"},
};

// MAJ as CNOT(a,b), CNOT(a,c), TOFFOLI(b,c,a), composed from primitives.
BitState maj_by_composition(BitState s) {
    s = apply_gate(Gate::make(GateKind::CNOT, {0, 1}), s);
    s = apply_gate(Gate::make(GateKind::CNOT, {0, 2}), s);
    s = apply_gate(Gate::make(GateKind::TOFFOLI, {1, 2, 0}), s);
    return s;
}

Circuit random_reversible(std::mt19937_64 &rng, std::size_t width, std::size_t n) {
    const GateKind kinds[] = {GateKind::CNOT, GateKind::TOFFOLI, GateKind::MAJ,
                              GateKind::MAJINV, GateKind::SWAP, GateKind::SWAP3};
    Circuit c = Circuit::open(width);
    for (std::size_t i = 0; i < n; i++) {
        GateKind k = kinds[rng() % 6];
        std::vector<BitIndex> ops;
        while (ops.size() < arity(k)) {
            BitIndex q = static_cast<BitIndex>(rng() % width);
            if (std::find(ops.begin(), ops.end(), q) == ops.end()) {
                ops.push_back(q);
            }
        }
        c.append(Gate::make(k, std::span<const BitIndex>(ops)));
    }
    return c;
}

}  // namespace

TEST(Gates, MajMatchesTruthTable) {
    for (const auto &[in, out] : kMajTruth) {
        auto s = apply_gate(Gate::make(GateKind::MAJ, {0, 1, 2}), BitState::from_string(in));
        EXPECT_EQ(s.str(), out) << in;
    }
}

TEST(Gates, MajMatchesCnotToffoliComposition) {
    for (std::uint64_t v = 0; v < 8; v++) {
        auto in = BitState::from_integer(v, 3);
        EXPECT_EQ(apply_gate(Gate::make(GateKind::MAJ, {0, 1, 2}), in), maj_by_composition(in));
    }
}

TEST(Gates, MajFirstOutputIsMajority) {
    for (const auto &[in, out] : kMajTruth) {
        int ones = (in[0] - '0') + (in[1] - '0') + (in[2] - '0');
        EXPECT_EQ(out[0] == '1', ones >= 2) << in;
    }
}

TEST(Gates, MajInvUndoesMaj) {
    for (std::uint64_t v = 0; v < 8; v++) {
        auto in = BitState::from_integer(v, 3);
        auto s = apply_gate(Gate::make(GateKind::MAJ, {0, 1, 2}), in);
        EXPECT_EQ(apply_gate(Gate::make(GateKind::MAJINV, {0, 1, 2}), s), in);
    }
}

TEST(Gates, MajInvCopiesIntoZeroedAncillas) {
    auto s = apply_gate(Gate::make(GateKind::MAJINV, {0, 1, 2}), BitState::from_string("100"));
    EXPECT_EQ(s.str(), "111");
}

TEST(Gates, Swap3MovesFirstToLastAndInverts) {
    auto s = apply_gate(Gate::make(GateKind::SWAP3, {0, 1, 2}), BitState::from_string("100"));
    EXPECT_EQ(s.str(), "001");
    for (std::uint64_t v = 0; v < 8; v++) {
        auto in = BitState::from_integer(v, 3);
        Circuit c = Circuit::open(3, {Gate::make(GateKind::SWAP3, {0, 1, 2})});
        EXPECT_EQ(run(invert(c), run(c, in)), in);
    }
}

TEST(Gates, Init3ZeroesOperandsOnly) {
    auto s = apply_gate(Gate::make(GateKind::INIT3, {1, 2, 3}), BitState::from_string("11111"));
    EXPECT_EQ(s.str(), "10001");
}

TEST(Gates, MakeRejectsBadOperands) {
    EXPECT_THROW(Gate::make(GateKind::MAJ, {0, 1}), Error);
    EXPECT_THROW(Gate::make(GateKind::CNOT, {2, 2}), Error);
    EXPECT_THROW(Gate::make(GateKind::TOFFOLI, {0, 1, 0}), Error);
}

TEST(GateKinds, NamesRoundTrip) {
    for (auto k : kAllGateKinds) {
        auto parsed = parse_gate_kind(gate_name(k));
        ASSERT_TRUE(parsed.has_value());
        EXPECT_EQ(*parsed, k);
    }
    EXPECT_FALSE(parse_gate_kind("FREDKIN").has_value());
}

TEST(Evaluate, EmptyCircuitIsIdentity) {
    Circuit c = Circuit::open(4);
    EXPECT_EQ(evaluate(c, BitState::from_string("1010")).str(), "1010");
}

TEST(Evaluate, CnotOnTen) {
    Circuit c = Circuit::open(2, {Gate::make(GateKind::CNOT, {0, 1})});
    EXPECT_EQ(evaluate(c, BitState::from_string("10")).str(), "11");
}

TEST(Evaluate, RejectsDirtyAncilla) {
    Circuit c(3, {0}, {0, 1, 2}, {1, 2}, {Gate::make(GateKind::MAJINV, {0, 1, 2})});
    EXPECT_EQ(evaluate(c, BitState::from_string("100")).str(), "111");
    EXPECT_THROW(evaluate(c, BitState::from_string("110")), Error);
}

TEST(Invert, PairsMajWithMajInv) {
    Circuit c = Circuit::open(3, {Gate::make(GateKind::MAJ, {0, 1, 2})});
    auto inv = invert(c);
    ASSERT_EQ(inv.gates().size(), 1u);
    EXPECT_EQ(inv.gates()[0], Gate::make(GateKind::MAJINV, {0, 1, 2}));
}

TEST(Invert, RejectsInit3) {
    Circuit c = Circuit::open(3, {Gate::make(GateKind::INIT3, {0, 1, 2})});
    try {
        invert(c);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Error::Code::NotInvertible);
    }
}

TEST(Invert, RandomCircuitsRoundTrip) {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 50; rep++) {
        std::size_t width = 3 + rng() % 10;
        Circuit c = random_reversible(rng, width, 1 + rng() % 30);
        EXPECT_EQ(invert(invert(c)), c);
        for (int k = 0; k < 16; k++) {
            auto in = BitState::from_integer(rng() & ((1ull << width) - 1), width);
            EXPECT_EQ(run(invert(c), run(c, in)), in);
        }
    }
}

TEST(Permutation, Examples) {
    EXPECT_TRUE(is_permutation(Circuit::open(3, {Gate::make(GateKind::MAJ, {0, 1, 2})})));
    EXPECT_FALSE(is_permutation(Circuit::open(3, {Gate::make(GateKind::INIT3, {0, 1, 2})})));
    EXPECT_THROW(is_permutation(Circuit::open(kMaxExhaustiveWidth + 1)), Error);
}

TEST(Locality, Line1D) {
    EXPECT_TRUE(check_locality(Circuit::open(6, {Gate::make(GateKind::SWAP, {3, 4})}), Line1DTopology{}).empty());
    EXPECT_EQ(check_locality(Circuit::open(6, {Gate::make(GateKind::CNOT, {0, 5})}), Line1DTopology{}).size(), 1u);
    // Three contiguous bits in any operand order are local.
    EXPECT_TRUE(check_locality(Circuit::open(6, {Gate::make(GateKind::MAJ, {4, 2, 3})}), Line1DTopology{}).empty());
    EXPECT_EQ(check_locality(Circuit::open(6, {Gate::make(GateKind::MAJ, {0, 1, 3})}), Line1DTopology{}).size(), 1u);
}

TEST(Locality, Lattice2D) {
    auto lat = Lattice2DTopology::row_major(3, 3);
    // Straight row, straight column and L-shape are connected; a diagonal pair is not.
    EXPECT_TRUE(check_locality(Circuit::open(9, {Gate::make(GateKind::MAJ, {0, 1, 2})}), lat).empty());
    EXPECT_TRUE(check_locality(Circuit::open(9, {Gate::make(GateKind::MAJ, {0, 3, 6})}), lat).empty());
    EXPECT_TRUE(check_locality(Circuit::open(9, {Gate::make(GateKind::INIT3, {1, 2, 5})}), lat).empty());
    EXPECT_EQ(check_locality(Circuit::open(9, {Gate::make(GateKind::CNOT, {0, 4})}), lat).size(), 1u);
    EXPECT_TRUE(check_locality(Circuit::open(9, {Gate::make(GateKind::CNOT, {0, 4})}), NonLocalTopology{}).empty());
}

TEST(Census, CountsAndRelabelInvariance) {
    EXPECT_EQ(gate_census(Circuit::open(3)).total, 0u);
    Circuit c = Circuit::open(9, {Gate::make(GateKind::INIT3, {3, 4, 5}), Gate::make(GateKind::MAJ, {0, 1, 2}),
                                  Gate::make(GateKind::SWAP3, {6, 7, 8}), Gate::make(GateKind::SWAP, {1, 2})});
    auto census = gate_census(c);
    EXPECT_EQ(census.total, 4u);
    EXPECT_EQ(census.total_excluding_init(), 3u);
    EXPECT_EQ(census.elementary_swaps(), 3u);
    Circuit relabeled = Circuit::open(9);
    for (const auto &g : c.gates()) {
        std::vector<BitIndex> ops;
        for (auto q : g.targets()) {
            ops.push_back(8 - q);
        }
        relabeled.append(Gate::make(g.kind, std::span<const BitIndex>(ops)));
    }
    EXPECT_EQ(gate_census(relabeled), census);
}

TEST(BitStates, Conversions) {
    auto s = BitState::from_integer(0b101, 4);
    EXPECT_EQ(s.str(), "1010");
    EXPECT_EQ(s.to_integer(), 0b101u);
    EXPECT_THROW(BitState::from_string("10x"), Error);
}

TEST(Json, CircuitRoundTrip) {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; rep++) {
        Circuit c = random_reversible(rng, 8, 20);
        EXPECT_EQ(circuit_from_json_text(circuit_to_json(c).dump()), c);
    }
    Circuit with_anc(3, {0}, {0, 1, 2}, {1, 2}, {Gate::make(GateKind::MAJINV, {0, 1, 2})});
    EXPECT_EQ(circuit_from_json(circuit_to_json(with_anc)), with_anc);
}

TEST(Json, RejectsMalformedDocuments) {
    auto expect_parse = [](const std::string &text) {
        try {
            circuit_from_json_text(text);
            ADD_FAILURE() << text;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), Error::Code::Parse) << text;
        }
    };
    expect_parse("{not json");
    expect_parse(R"({"width":3,"inputs":[0,1,2],"outputs":[0,1,2],"ancillas":[],
                    "gates":[{"kind":"FREDKIN","operands":[0,1,2]}]})");
    expect_parse(R"({"width":3,"inputs":[0,1,2],"outputs":[0,1,2],"ancillas":[],
                    "gates":[{"kind":"MAJ","operands":[0,1]}]})");
    EXPECT_THROW(circuit_from_json_text(R"({"width":3,"inputs":[0,1,2],"outputs":[0,1,2],"ancillas":[],
                    "gates":[{"kind":"MAJ","operands":[0,1,5]}]})"),
                 Error);
}
