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
#include <string>
#include <vector>

#include "revft/circuit.hpp"

namespace revft {

struct LayoutStrategy {
    enum class Kind { NonLocal, TwoD, OneD, Mixed };
    Kind kind = Kind::NonLocal;
    int k = 0;  // number of 2D levels, Mixed only

    static LayoutStrategy nonlocal() {
        return {Kind::NonLocal, 0};
    }
    static LayoutStrategy two_d() {
        return {Kind::TwoD, 0};
    }
    static LayoutStrategy one_d() {
        return {Kind::OneD, 0};
    }
    static LayoutStrategy mixed(int k);

    /// "nonlocal", "2d", "1d" or "mixed:K".
    static LayoutStrategy parse(const std::string &text);
    std::string str() const;

    /// Number of lowest levels laid out as 2D tiles when compiling to `level`.
    int two_d_levels(int level) const;
    bool is_local() const {
        return kind != Kind::NonLocal;
    }
    bool operator==(const LayoutStrategy &) const = default;
};

/// How a logical INIT3 above level 0 is lowered. Encoded treats it like any
/// other 3-bit gate (G includes initialization); Physical resets the whole
/// block region with physical INIT3 gates (G excludes initialization).
enum class InitLowering { Encoded, Physical };

// ---------------------------------------------------------------------------
// Recovery circuits (one 9-slot block).

Circuit build_recovery_nonlocal();

/// Nearest-neighbour recovery on a 9-bit line. Data lives at slots 0,4,8 on
/// entry and on exit.
Circuit build_recovery_1d();

/// Recovery on a 3x3 tile (slot = 3*row + col) with data on the diagonal
/// slots 0,4,8. Rows encode, columns decode, so the data never rotates.
Circuit build_recovery_2d();

// ---------------------------------------------------------------------------
// Interleaving schedules.

using CodewordTriple = std::array<BitIndex, 3>;

/// Interleaves three codewords held in three adjacent 9-slot blocks of a
/// 27-bit line. codewords[b] must lie inside slots [9b, 9b+9) in increasing
/// order. Outputs list the final positions as b0_0,b1_0,b2_0,b0_1,...
Circuit build_interleave_1d(const std::array<CodewordTriple, 3> &codewords = {{{0, 4, 8}, {9, 13, 17}, {18, 22, 26}}});

enum class InterleaveDirection { Parallel, Perpendicular };

/// Interleaving on a 3-wide, 9-tall lattice of three stacked 3x3 tiles.
/// Parallel: the three logical lines lie end to end along column 0.
/// Perpendicular: the logical lines are rows 0, 3 and 6.
/// Inputs hold the codewords (a0,a1,a2,b0,...); outputs hold the interleaved
/// positions (a0,b0,c0,a1,...).
Circuit build_interleave_2d(InterleaveDirection direction);

/// Lattice the 2D interleave circuits are laid out on.
Lattice2DTopology interleave_2d_lattice();

struct CodewordLoad {
    std::size_t elementary_swaps = 0;  // SWAP=1, SWAP3=2, counted when the gate touches a codeword bit
    std::size_t swap3_moving = 0;      // SWAP3 gates whose first operand carries a codeword bit
    std::size_t swap3_touching = 0;    // SWAP3 gates touching any codeword bit
};

/// Follows every codeword bit through the SWAP/SWAP3 gates of `circuit` and
/// reports the routing load per codeword.
std::vector<CodewordLoad> codeword_load(const Circuit &circuit, const std::vector<std::vector<BitIndex>> &codewords);

// ---------------------------------------------------------------------------
// Encoding.

/// Block extent in cells of a level-`level` block under `layout` compiled to
/// depth `depth` (the depth fixes where Mixed layouts switch to 1D).
struct BlockShape {
    int height = 1;
    int width = 1;
};
BlockShape block_shape(int level, const LayoutStrategy &layout, int depth);

/// Physical positions of the 3^level data bits of one fresh block, in
/// hierarchical order (child 0's data first). Indices are row-major within
/// the block.
std::vector<BitIndex> data_positions(int level, const LayoutStrategy &layout = LayoutStrategy::nonlocal());

BitState encode_value(bool bit, int level, const LayoutStrategy &layout = LayoutStrategy::nonlocal());

/// Recursive 3-way majority over hierarchically ordered data positions.
bool ideal_decode(const BitState &state, const std::vector<BitIndex> &positions);
bool ideal_decode(const BitState &state, int level, const LayoutStrategy &layout = LayoutStrategy::nonlocal());

// ---------------------------------------------------------------------------
// Concatenated cycles.

struct CompiledCycle {
    Circuit circuit;
    int level = 0;
    LayoutStrategy layout;
    InitLowering init_lowering = InitLowering::Encoded;
    GateCensus census;
    /// Per operand, the 3^level data positions in hierarchical order.
    std::vector<std::vector<BitIndex>> logical_inputs;
    std::vector<std::vector<BitIndex>> logical_outputs;
    Topology topology;
};

/// One logical gate at `level`: the level-(level-1) gate applied to
/// corresponding sub-blocks of the operands (interleaved first on local
/// layouts), then a recovery cycle on every operand block.
CompiledCycle compile_cycle(GateKind base_gate, int level, const LayoutStrategy &layout,
                            InitLowering init_lowering = InitLowering::Encoded);

struct PredictedCounts {
    std::uint64_t gates = 0;
    std::uint64_t bits = 0;
};

/// ((3(G-2))^level, 9^level).
PredictedCounts predicted_counts(int level, int G);

}  // namespace revft
