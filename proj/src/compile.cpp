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

#include <algorithm>
#include <cstdlib>

#include "layout_internal.hpp"
#include "revft/builders.hpp"

namespace revft {

namespace {

using internal::Geometry;
using internal::ipow;

struct Block {
    int level = 0;
    int row = 0;
    int col = 0;
};

using Slots = std::array<std::uint8_t, 3>;

struct TemplateGate {
    GateKind kind;
    std::array<int, 3> slots;
};

std::vector<TemplateGate> template_of(const Circuit &c) {
    std::vector<TemplateGate> out;
    for (const auto &g : c.gates()) {
        TemplateGate t{g.kind, {0, 0, 0}};
        for (std::size_t k = 0; k < arity(g.kind); k++) {
            t.slots[k] = static_cast<int>(g.operands[k]);
        }
        out.push_back(t);
    }
    return out;
}

class CycleCompiler {
   public:
    CycleCompiler(const LayoutStrategy &layout, int depth, InitLowering init, int operands)
        : geo_(internal::make_geometry(layout, depth)), init_(init), depth_(depth) {
        auto top = geo_.shape(depth);
        width_ = top.width * operands;
        height_ = top.height;
        if (geo_.nonlocal) {
            state_.resize(depth + 1);
            for (int j = 0; j <= depth; j++) {
                std::size_t n = static_cast<std::size_t>(operands) * ipow(9, depth - j);
                state_[j].assign(n, Slots{0, 1, 2});
            }
        }
        nonlocal_ = template_of(build_recovery_nonlocal());
        line_ = template_of(build_recovery_1d());
        tile_ = template_of(build_recovery_2d());
    }

    int width() const {
        return width_;
    }
    int height() const {
        return height_;
    }
    Block top(int operand) const {
        return {depth_, 0, operand * geo_.shape(depth_).width};
    }
    std::vector<Gate> take() {
        return std::move(gates_);
    }

    void collect_data(const Block &b, std::vector<BitIndex> &out) const {
        if (b.level == 0) {
            out.push_back(bit(b));
            return;
        }
        for (auto s : data_of(b)) {
            collect_data(child(b, s), out);
        }
    }

    void gate(GateKind kind, const std::vector<Block> &ops) {
        const int m = ops[0].level;
        if (m == 0) {
            std::array<BitIndex, 3> q{};
            for (std::size_t k = 0; k < ops.size(); k++) {
                q[k] = bit(ops[k]);
            }
            gates_.push_back(Gate::make(kind, std::span<const BitIndex>(q.data(), ops.size())));
            return;
        }
        if (kind == GateKind::INIT3 && init_ == InitLowering::Physical) {
            for (const auto &b : ops) {
                reset_region(b);
            }
            return;
        }
        if (kind == GateKind::INIT3 && !geo_.nonlocal) {
            // Output is independent of input, so each block is cleared row by
            // row of children instead of being interleaved with its partners.
            for (const auto &b : ops) {
                for (int t = 0; t < 3; t++) {
                    gate(GateKind::INIT3, {child(b, 3 * t), child(b, 3 * t + 1), child(b, 3 * t + 2)});
                }
            }
        } else if (geo_.nonlocal) {
            for (int i = 0; i < 3; i++) {
                std::vector<Block> sub;
                for (const auto &b : ops) {
                    sub.push_back(child(b, data_of(b)[i]));
                }
                gate(kind, sub);
            }
        } else {
            interleaved(kind, ops);
        }
        for (const auto &b : ops) {
            recover(b);
        }
    }

   private:
    BitIndex bit(const Block &b) const {
        return static_cast<BitIndex>(b.row * width_ + b.col);
    }

    Block child(const Block &b, int slot) const {
        Cell d = geo_.child_offset(b.level, slot);
        return {b.level - 1, b.row + d.row, b.col + d.col};
    }

    Slots &nl_state(const Block &b) {
        return state_[b.level][b.col / ipow(9, b.level)];
    }

    Slots data_of(const Block &b) const {
        if (geo_.nonlocal) {
            return state_[b.level][b.col / ipow(9, b.level)];
        }
        return {0, 4, 8};
    }

    void canonicalize(const Block &b) {
        if (!geo_.nonlocal || b.level == 0) {
            return;
        }
        nl_state(b) = {0, 1, 2};
        for (int s = 0; s < 9; s++) {
            canonicalize(child(b, s));
        }
    }

    void reset_region(const Block &b) {
        auto shape = geo_.shape(b.level);
        for (int r = 0; r < shape.height; r++) {
            for (int c = 0; c < shape.width; c += 3) {
                BitIndex q = bit({0, b.row + r, b.col + c});
                gates_.push_back(Gate::make(GateKind::INIT3, {q, q + 1, q + 2}));
            }
        }
        canonicalize(b);
    }

    void recover(const Block &b) {
        const int m = b.level;
        if (geo_.tiled(m)) {
            for (const auto &t : tile_) {
                emit_template(b, t, {0, 1, 2, 3, 4, 5, 6, 7, 8});
            }
        } else if (!geo_.nonlocal) {
            for (const auto &t : line_) {
                emit_template(b, t, {0, 1, 2, 3, 4, 5, 6, 7, 8});
            }
        } else {
            // The nonlocal recovery moves data from slots 0,1,2 to 0,3,6; when
            // data already sits at 0,3,6 the template runs transposed.
            bool transposed = data_of(b) == Slots{0, 3, 6};
            std::array<int, 9> role = {0, 1, 2, 3, 4, 5, 6, 7, 8};
            if (transposed) {
                role = {0, 3, 6, 1, 4, 7, 2, 5, 8};
            }
            for (const auto &t : nonlocal_) {
                emit_template(b, t, role);
            }
            nl_state(b) = transposed ? Slots{0, 1, 2} : Slots{0, 3, 6};
        }
    }

    void emit_template(const Block &b, const TemplateGate &t, const std::array<int, 9> &role) {
        std::vector<Block> ops;
        for (std::size_t k = 0; k < arity(t.kind); k++) {
            ops.push_back(child(b, role[t.slots[k]]));
        }
        gate(t.kind, ops);
    }

    struct Move {
        GateKind kind;
        std::vector<Block> ops;
    };

    /// Brings corresponding data children of the operand blocks next to each
    /// other, applies the gate one level down on each group, and undoes the
    /// moves.
    void interleaved(GateKind kind, const std::vector<Block> &ops) {
        std::vector<Move> moves;
        std::vector<std::vector<Block>> groups(3);
        if (geo_.tiled(ops[0].level)) {
            plan_tiles(ops, moves, groups);
        } else {
            plan_strip(ops, moves, groups);
        }
        for (const auto &mv : moves) {
            gate(mv.kind, mv.ops);
        }
        for (const auto &g : groups) {
            gate(kind, g);
        }
        for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
            auto back = it->ops;
            std::reverse(back.begin(), back.end());
            gate(it->kind, back);
        }
    }

    /// Operand tiles must form a straight run of neighbours. The middle tile
    /// (the second for a pair) stays put; each other tile sends each data
    /// child two cells towards it with one SWAP3.
    void plan_tiles(const std::vector<Block> &ops, std::vector<Move> &moves, std::vector<std::vector<Block>> &groups) {
        const int m = ops[0].level;
        const int side = geo_.shape(m).width;
        const int step = static_cast<int>(ipow(3, m - 1));
        bool horizontal = std::all_of(ops.begin(), ops.end(), [&](const Block &b) { return b.row == ops[0].row; });
        bool vertical = std::all_of(ops.begin(), ops.end(), [&](const Block &b) { return b.col == ops[0].col; });
        auto axis = [&](const Block &b) { return horizontal ? b.col : b.row; };
        std::vector<std::size_t> order(ops.size());
        for (std::size_t k = 0; k < ops.size(); k++) {
            order[k] = k;
        }
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return axis(ops[a]) < axis(ops[b]); });
        bool adjacent = horizontal != vertical;
        for (std::size_t k = 1; k < order.size(); k++) {
            adjacent = adjacent && axis(ops[order[k]]) - axis(ops[order[k - 1]]) == side;
        }
        if (!adjacent) {
            throw Error(Error::Code::InvalidArgument, "2D gate operands must be neighbouring tiles in a straight line");
        }
        const std::size_t middle = order[1];
        for (std::size_t j = 0; j < ops.size(); j++) {
            for (int i = 0; i < 3; i++) {
                Block d = child(ops[j], 4 * i);
                if (j != middle) {
                    int dir = axis(ops[middle]) > axis(ops[j]) ? step : -step;
                    int dr = horizontal ? 0 : dir;
                    int dc = horizontal ? dir : 0;
                    Move mv{GateKind::SWAP3, {d}};
                    for (int h = 1; h <= 2; h++) {
                        mv.ops.push_back({d.level, d.row + h * dr, d.col + h * dc});
                    }
                    d = mv.ops.back();
                    moves.push_back(std::move(mv));
                }
                groups[i].push_back(d);
            }
        }
    }

    void plan_strip(const std::vector<Block> &ops, std::vector<Move> &moves, std::vector<std::vector<Block>> &groups) {
        const int m = ops[0].level;
        const int w = geo_.shape(m).width;
        std::vector<std::size_t> order(ops.size());
        for (std::size_t k = 0; k < ops.size(); k++) {
            order[k] = k;
        }
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ops[a].col < ops[b].col; });
        const Block &first = ops[order[0]];
        for (std::size_t k = 0; k < order.size(); k++) {
            const Block &b = ops[order[k]];
            if (b.row != first.row || b.col != first.col + static_cast<int>(k) * w) {
                throw Error(Error::Code::InvalidArgument, "1D gate operands must be neighbouring blocks");
            }
        }
        std::vector<std::array<int, 3>> codewords;
        for (std::size_t k = 0; k < order.size(); k++) {
            int base = static_cast<int>(9 * k);
            codewords.push_back({base, base + 4, base + 8});
        }
        auto plan = internal::plan_line_interleave(codewords, static_cast<int>(9 * order.size()));
        const int cw = geo_.shape(m - 1).width;
        auto at = [&](int slot) { return Block{m - 1, first.row, first.col + slot * cw}; };
        for (const auto &mv : plan.moves) {
            Move out{mv.kind, {}};
            for (std::size_t k = 0; k < arity(mv.kind); k++) {
                out.ops.push_back(at(mv.slots[k]));
            }
            moves.push_back(std::move(out));
        }
        for (int i = 0; i < 3; i++) {
            groups[i].resize(ops.size());
            for (std::size_t k = 0; k < order.size(); k++) {
                groups[i][order[k]] = at(plan.tuples[i][k]);
            }
        }
    }

    Geometry geo_;
    InitLowering init_;
    int depth_;
    int width_ = 0;
    int height_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::vector<Slots>> state_;
    std::vector<TemplateGate> nonlocal_;
    std::vector<TemplateGate> line_;
    std::vector<TemplateGate> tile_;
};

}  // namespace

CompiledCycle compile_cycle(GateKind base_gate, int level, const LayoutStrategy &layout, InitLowering init_lowering) {
    if (arity(base_gate) != 3) {
        throw Error(Error::Code::InvalidArgument,
                    "compile_cycle needs a 3-bit base gate, got " + std::string(gate_name(base_gate)));
    }
    if (level < 0) {
        throw Error(Error::Code::InvalidArgument, "level must be non-negative");
    }
    if (level > 6) {
        throw Error(Error::Code::OutOfRange, "level " + std::to_string(level) + " is too large to compile");
    }
    CycleCompiler cc(layout, level, init_lowering, 3);
    CompiledCycle out;
    out.level = level;
    out.layout = layout;
    out.init_lowering = init_lowering;
    std::vector<Block> ops = {cc.top(0), cc.top(1), cc.top(2)};
    std::vector<BitIndex> inputs;
    for (const auto &b : ops) {
        std::vector<BitIndex> pos;
        cc.collect_data(b, pos);
        inputs.insert(inputs.end(), pos.begin(), pos.end());
        out.logical_inputs.push_back(std::move(pos));
    }
    cc.gate(base_gate, ops);
    std::vector<BitIndex> outputs;
    for (const auto &b : ops) {
        std::vector<BitIndex> pos;
        cc.collect_data(b, pos);
        outputs.insert(outputs.end(), pos.begin(), pos.end());
        out.logical_outputs.push_back(std::move(pos));
    }
    const std::size_t width = static_cast<std::size_t>(cc.width()) * cc.height();
    std::vector<bool> is_input(width, false);
    for (auto q : inputs) {
        is_input[q] = true;
    }
    std::vector<BitIndex> ancillas;
    for (std::size_t q = 0; q < width; q++) {
        if (!is_input[q]) {
            ancillas.push_back(static_cast<BitIndex>(q));
        }
    }
    out.circuit = Circuit(width, std::move(inputs), std::move(outputs), std::move(ancillas), cc.take());
    out.census = gate_census(out.circuit);
    if (layout.kind == LayoutStrategy::Kind::NonLocal) {
        out.topology = NonLocalTopology{};
    } else if (cc.height() == 1) {
        out.topology = Line1DTopology{};
    } else {
        out.topology = Lattice2DTopology::row_major(cc.width(), cc.height());
    }
    return out;
}

}  // namespace revft
