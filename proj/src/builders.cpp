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

#include "revft/builders.hpp"

#include <algorithm>
#include <cstdlib>

#include "layout_internal.hpp"

namespace revft {

using internal::ipow;

LayoutStrategy LayoutStrategy::mixed(int k) {
    if (k < 0) {
        throw Error(Error::Code::InvalidArgument, "mixed layout needs k >= 0");
    }
    return {Kind::Mixed, k};
}

LayoutStrategy LayoutStrategy::parse(const std::string &text) {
    if (text == "nonlocal") {
        return nonlocal();
    }
    if (text == "2d") {
        return two_d();
    }
    if (text == "1d") {
        return one_d();
    }
    if (text.rfind("mixed:", 0) == 0) {
        const std::string rest = text.substr(6);
        char *end = nullptr;
        long k = std::strtol(rest.c_str(), &end, 10);
        if (!rest.empty() && end && *end == '\0' && k >= 0 && k < 64) {
            return mixed(static_cast<int>(k));
        }
    }
    throw Error(Error::Code::InvalidArgument, "unknown layout '" + text + "' (expected nonlocal, 2d, 1d or mixed:K)");
}

std::string LayoutStrategy::str() const {
    switch (kind) {
        case Kind::NonLocal:
            return "nonlocal";
        case Kind::TwoD:
            return "2d";
        case Kind::OneD:
            return "1d";
        case Kind::Mixed:
            return "mixed:" + std::to_string(k);
    }
    return "?";
}

int LayoutStrategy::two_d_levels(int level) const {
    switch (kind) {
        case Kind::TwoD:
            return level;
        case Kind::Mixed:
            return std::min(k, level);
        default:
            return 0;
    }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<BitIndex> iota_except(std::size_t n, const std::vector<BitIndex> &skip) {
    std::vector<BitIndex> out;
    for (BitIndex q = 0; q < n; q++) {
        if (std::find(skip.begin(), skip.end(), q) == skip.end()) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace

Circuit build_recovery_nonlocal() {
    Circuit c(9, {0, 1, 2}, {0, 3, 6}, {3, 4, 5, 6, 7, 8});
    c.append(GateKind::INIT3, {3, 4, 5});
    c.append(GateKind::INIT3, {6, 7, 8});
    c.append(GateKind::MAJINV, {0, 3, 6});
    c.append(GateKind::MAJINV, {1, 4, 7});
    c.append(GateKind::MAJINV, {2, 5, 8});
    c.append(GateKind::MAJ, {0, 1, 2});
    c.append(GateKind::MAJ, {3, 4, 5});
    c.append(GateKind::MAJ, {6, 7, 8});
    return c;
}

Circuit build_recovery_1d() {
    Circuit c(9, {0, 4, 8}, {0, 4, 8}, {1, 2, 3, 5, 6, 7});
    c.append(GateKind::INIT3, {1, 2, 3});
    c.append(GateKind::INIT3, {5, 6, 7});
    // Encode each data bit into the two ancillas beside it: aaabbbccc.
    c.append(GateKind::MAJINV, {0, 1, 2});
    c.append(GateKind::MAJINV, {4, 3, 5});
    c.append(GateKind::MAJINV, {8, 6, 7});
    // aaabbbccc -> abcabcabc with nine neighbour exchanges.
    c.append(GateKind::SWAP3, {3, 2, 1});
    c.append(GateKind::SWAP3, {6, 5, 4});
    c.append(GateKind::SWAP3, {4, 3, 2});
    c.append(GateKind::SWAP, {4, 5});
    c.append(GateKind::SWAP3, {7, 6, 5});
    c.append(GateKind::MAJ, {0, 1, 2});
    c.append(GateKind::MAJ, {4, 3, 5});
    c.append(GateKind::MAJ, {8, 6, 7});
    return c;
}

Circuit build_recovery_2d() {
    Circuit c(9, {0, 4, 8}, {0, 4, 8}, {1, 2, 3, 5, 6, 7});
    c.append(GateKind::INIT3, {1, 2, 5});
    c.append(GateKind::INIT3, {3, 6, 7});
    c.append(GateKind::MAJINV, {0, 1, 2});
    c.append(GateKind::MAJINV, {4, 3, 5});
    c.append(GateKind::MAJINV, {8, 6, 7});
    c.append(GateKind::MAJ, {0, 3, 6});
    c.append(GateKind::MAJ, {4, 1, 7});
    c.append(GateKind::MAJ, {8, 2, 5});
    return c;
}

// ---------------------------------------------------------------------------

namespace internal {

LinePlan plan_line_interleave(const std::vector<std::array<int, 3>> &codewords, int line_length) {
    if (codewords.size() != 2 && codewords.size() != 3) {
        throw Error(Error::Code::InvalidArgument, "line interleave takes two or three codewords");
    }
    // line[p] = codeword * 3 + bit, or -1 for an ancilla slot.
    std::vector<int> line(line_length, -1);
    for (std::size_t b = 0; b < codewords.size(); b++) {
        for (int i = 0; i < 3; i++) {
            int p = codewords[b][i];
            if (p < 0 || p >= line_length || line[p] != -1) {
                throw Error(Error::Code::InvalidArgument, "codeword positions overlap or leave the line");
            }
            line[p] = static_cast<int>(b) * 3 + i;
        }
    }
    auto where = [&](int label) {
        return static_cast<int>(std::find(line.begin(), line.end(), label) - line.begin());
    };

    LinePlan plan;
    auto travel = [&](int label, int target) {
        int p = where(label);
        int dist = std::abs(target - p);
        int step = target > p ? 1 : -1;
        auto hop = [&](int k) {
            LineMove mv;
            if (k == 1) {
                mv.kind = GateKind::SWAP;
                mv.slots = {p, p + step, 0};
                std::swap(line[p], line[p + step]);
            } else {
                mv.kind = GateKind::SWAP3;
                mv.slots = {p, p + step, p + 2 * step};
                std::swap(line[p], line[p + step]);
                std::swap(line[p + step], line[p + 2 * step]);
            }
            plan.moves.push_back(mv);
            p += k * step;
        };
        if (dist % 2 == 1) {
            hop(1);
        }
        for (int h = 0; h < dist / 2; h++) {
            hop(2);
        }
    };

    for (int i = 2; i >= 0; i--) {
        travel(0 * 3 + i, where(1 * 3 + i) - 1);
    }
    if (codewords.size() == 3) {
        for (int i = 0; i < 3; i++) {
            travel(2 * 3 + i, where(1 * 3 + i) + 1);
        }
    }
    for (int i = 0; i < 3; i++) {
        std::array<int, 3> t{};
        for (std::size_t b = 0; b < codewords.size(); b++) {
            t[b] = where(static_cast<int>(b) * 3 + i);
        }
        plan.tuples.push_back(t);
    }
    return plan;
}

}  // namespace internal

Circuit build_interleave_1d(const std::array<CodewordTriple, 3> &codewords) {
    std::vector<std::array<int, 3>> cw;
    std::vector<BitIndex> inputs;
    for (int b = 0; b < 3; b++) {
        std::array<int, 3> t{};
        for (int i = 0; i < 3; i++) {
            BitIndex q = codewords[b][i];
            bool inside = q >= static_cast<BitIndex>(9 * b) && q < static_cast<BitIndex>(9 * b + 9);
            bool ordered = i == 0 || q > codewords[b][i - 1];
            if (!inside || !ordered) {
                throw Error(Error::Code::InvalidArgument,
                            "codeword " + std::to_string(b) +
                                " must occupy increasing slots inside its own 9-slot block");
            }
            t[i] = static_cast<int>(q);
            inputs.push_back(q);
        }
        cw.push_back(t);
    }
    auto plan = internal::plan_line_interleave(cw, 27);
    std::vector<BitIndex> outputs;
    for (const auto &t : plan.tuples) {
        for (int b = 0; b < 3; b++) {
            outputs.push_back(static_cast<BitIndex>(t[b]));
        }
    }
    Circuit c(27, inputs, outputs, iota_except(27, inputs));
    for (const auto &mv : plan.moves) {
        if (mv.kind == GateKind::SWAP) {
            c.append(GateKind::SWAP, {static_cast<BitIndex>(mv.slots[0]), static_cast<BitIndex>(mv.slots[1])});
        } else {
            c.append(GateKind::SWAP3, {static_cast<BitIndex>(mv.slots[0]), static_cast<BitIndex>(mv.slots[1]),
                                       static_cast<BitIndex>(mv.slots[2])});
        }
    }
    return c;
}

Lattice2DTopology interleave_2d_lattice() {
    return Lattice2DTopology::row_major(3, 9);
}

Circuit build_interleave_2d(InterleaveDirection direction) {
    auto at = [](int row, int col) { return static_cast<BitIndex>(row * 3 + col); };
    std::vector<BitIndex> inputs;
    std::vector<BitIndex> outputs;
    std::vector<Gate> gates;
    if (direction == InterleaveDirection::Parallel) {
        // Column 0 holds aaabbbccc end to end; same exchange pattern as the 1D
        // recovery.
        for (int j = 0; j < 9; j++) {
            inputs.push_back(at(j, 0));
        }
        auto s3 = [&](int a, int b, int c) { gates.push_back(Gate::make(GateKind::SWAP3, {at(a, 0), at(b, 0), at(c, 0)})); };
        s3(3, 2, 1);
        s3(6, 5, 4);
        s3(4, 3, 2);
        gates.push_back(Gate::make(GateKind::SWAP, {at(4, 0), at(5, 0)}));
        s3(7, 6, 5);
        for (int j = 0; j < 9; j++) {
            outputs.push_back(at(j, 0));
        }
    } else {
        for (int r : {0, 3, 6}) {
            for (int c = 0; c < 3; c++) {
                inputs.push_back(at(r, c));
            }
        }
        for (int c = 0; c < 3; c++) {
            gates.push_back(Gate::make(GateKind::SWAP3, {at(0, c), at(1, c), at(2, c)}));
        }
        for (int c = 0; c < 3; c++) {
            gates.push_back(Gate::make(GateKind::SWAP3, {at(6, c), at(5, c), at(4, c)}));
        }
        for (int c = 0; c < 3; c++) {
            for (int r : {2, 3, 4}) {
                outputs.push_back(at(r, c));
            }
        }
    }
    return Circuit(27, inputs, outputs, iota_except(27, inputs), std::move(gates));
}

std::vector<CodewordLoad> codeword_load(const Circuit &circuit, const std::vector<std::vector<BitIndex>> &codewords) {
    std::vector<int> owner(circuit.width(), -1);
    for (std::size_t w = 0; w < codewords.size(); w++) {
        for (auto q : codewords[w]) {
            if (q >= circuit.width()) {
                throw Error(Error::Code::OutOfRange, "codeword bit " + std::to_string(q) + " out of range");
            }
            owner[q] = static_cast<int>(w);
        }
    }
    std::vector<CodewordLoad> load(codewords.size());
    auto elementary = [&](BitIndex a, BitIndex b) {
        int x = owner[a];
        int y = owner[b];
        if (x >= 0) {
            load[x].elementary_swaps++;
        }
        if (y >= 0 && y != x) {
            load[y].elementary_swaps++;
        }
        std::swap(owner[a], owner[b]);
    };
    for (const auto &g : circuit.gates()) {
        const auto &q = g.operands;
        if (g.kind == GateKind::SWAP) {
            elementary(q[0], q[1]);
        } else if (g.kind == GateKind::SWAP3) {
            if (owner[q[0]] >= 0) {
                load[owner[q[0]]].swap3_moving++;
            }
            std::vector<int> seen;
            for (int k = 0; k < 3; k++) {
                int w = owner[q[k]];
                if (w >= 0 && std::find(seen.begin(), seen.end(), w) == seen.end()) {
                    seen.push_back(w);
                    load[w].swap3_touching++;
                }
            }
            elementary(q[0], q[1]);
            elementary(q[1], q[2]);
        } else {
            throw Error(Error::Code::InvalidArgument, "codeword_load expects a SWAP/SWAP3 schedule");
        }
    }
    return load;
}

// ---------------------------------------------------------------------------

BlockShape block_shape(int level, const LayoutStrategy &layout, int depth) {
    if (level < 0 || depth < level) {
        throw Error(Error::Code::InvalidArgument, "block level must lie in [0, depth]");
    }
    return internal::make_geometry(layout, depth).shape(level);
}

namespace {

void collect_fresh(const internal::Geometry &geo, int level, Cell origin, int row_width, std::vector<BitIndex> &out) {
    if (level == 0) {
        out.push_back(static_cast<BitIndex>(origin.row * row_width + origin.col));
        return;
    }
    for (int slot : geo.fresh_data()) {
        Cell d = geo.child_offset(level, slot);
        collect_fresh(geo, level - 1, {origin.row + d.row, origin.col + d.col}, row_width, out);
    }
}

}  // namespace

std::vector<BitIndex> data_positions(int level, const LayoutStrategy &layout) {
    if (level < 0) {
        throw Error(Error::Code::InvalidArgument, "level must be non-negative");
    }
    auto geo = internal::make_geometry(layout, level);
    std::vector<BitIndex> out;
    collect_fresh(geo, level, {0, 0}, geo.shape(level).width, out);
    return out;
}

BitState encode_value(bool bit, int level, const LayoutStrategy &layout) {
    auto geo = internal::make_geometry(layout, level);
    auto shape = geo.shape(level);
    BitState s(static_cast<std::size_t>(shape.width) * shape.height);
    for (auto q : data_positions(level, layout)) {
        s.set(q, bit);
    }
    return s;
}

namespace {

bool decode_range(const BitState &state, const std::vector<BitIndex> &pos, std::size_t lo, std::size_t n) {
    if (n == 1) {
        return state.get(pos[lo]);
    }
    std::size_t third = n / 3;
    int votes = decode_range(state, pos, lo, third) + decode_range(state, pos, lo + third, third) +
                decode_range(state, pos, lo + 2 * third, third);
    return votes >= 2;
}

}  // namespace

bool ideal_decode(const BitState &state, const std::vector<BitIndex> &positions) {
    std::size_t n = positions.size();
    while (n > 1 && n % 3 == 0) {
        n /= 3;
    }
    if (positions.empty() || n != 1) {
        throw Error(Error::Code::InvalidArgument, "decode needs a power-of-three number of data positions");
    }
    return decode_range(state, positions, 0, positions.size());
}

bool ideal_decode(const BitState &state, int level, const LayoutStrategy &layout) {
    return ideal_decode(state, data_positions(level, layout));
}

PredictedCounts predicted_counts(int level, int G) {
    if (G < 3) {
        throw Error(Error::Code::InvalidArgument, "predicted_counts needs G >= 3");
    }
    if (level < 0) {
        throw Error(Error::Code::InvalidArgument, "level must be non-negative");
    }
    PredictedCounts p;
    p.gates = static_cast<std::uint64_t>(ipow(3LL * (G - 2), level));
    p.bits = static_cast<std::uint64_t>(ipow(9, level));
    return p;
}

}  // namespace revft
