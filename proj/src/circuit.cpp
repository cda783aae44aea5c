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

#include "revft/circuit.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace revft {

namespace {

constexpr std::array<std::string_view, kAllGateKinds.size()> kGateNames = {
    "CNOT", "TOFFOLI", "MAJ", "MAJINV", "SWAP", "SWAP3", "INIT3",
};

[[noreturn]] void fail(Error::Code code, const std::string &msg) {
    throw Error(code, msg);
}

}  // namespace

std::string_view gate_name(GateKind kind) noexcept {
    return kGateNames[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
    for (std::size_t k = 0; k < kGateNames.size(); k++) {
        if (kGateNames[k] == name) {
            return static_cast<GateKind>(k);
        }
    }
    return std::nullopt;
}

Gate Gate::make(GateKind kind, std::initializer_list<BitIndex> ops) {
    return make(kind, std::span<const BitIndex>(ops.begin(), ops.size()));
}

Gate Gate::make(GateKind kind, std::span<const BitIndex> ops) {
    if (ops.size() != arity(kind)) {
        std::ostringstream ss;
        ss << gate_name(kind) << " takes " << arity(kind) << " operands, got " << ops.size();
        fail(Error::Code::InvalidArgument, ss.str());
    }
    Gate g;
    g.kind = kind;
    for (std::size_t k = 0; k < ops.size(); k++) {
        for (std::size_t j = 0; j < k; j++) {
            if (ops[j] == ops[k]) {
                std::ostringstream ss;
                ss << gate_name(kind) << " has repeated operand " << ops[k];
                fail(Error::Code::InvalidArgument, ss.str());
            }
        }
        g.operands[k] = ops[k];
    }
    return g;
}

bool Gate::operator==(const Gate &other) const noexcept {
    if (kind != other.kind) {
        return false;
    }
    auto a = targets();
    auto b = other.targets();
    return std::equal(a.begin(), a.end(), b.begin());
}

std::ostream &operator<<(std::ostream &out, const BitState &state) {
    return out << state.str();
}

std::ostream &operator<<(std::ostream &out, const Gate &gate) {
    out << gate_name(gate.kind) << "(";
    bool first = true;
    for (auto q : gate.targets()) {
        if (!first) {
            out << ",";
        }
        first = false;
        out << q;
    }
    return out << ")";
}

BitState BitState::from_string(std::string_view text) {
    BitState s(text.size());
    for (std::size_t k = 0; k < text.size(); k++) {
        if (text[k] != '0' && text[k] != '1') {
            fail(Error::Code::Parse, "bit string may only contain '0' and '1'");
        }
        s.bits_[k] = text[k] == '1';
    }
    return s;
}

BitState BitState::from_integer(std::uint64_t value, std::size_t width) {
    BitState s(width);
    for (std::size_t k = 0; k < width && k < 64; k++) {
        s.bits_[k] = (value >> k) & 1;
    }
    return s;
}

bool BitState::get(std::size_t i) const {
    if (i >= bits_.size()) {
        fail(Error::Code::OutOfRange, "bit index " + std::to_string(i) + " out of range");
    }
    return bits_[i] != 0;
}

void BitState::set(std::size_t i, bool v) {
    if (i >= bits_.size()) {
        fail(Error::Code::OutOfRange, "bit index " + std::to_string(i) + " out of range");
    }
    bits_[i] = v;
}

std::uint64_t BitState::to_integer() const {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < bits_.size() && k < 64; k++) {
        v |= std::uint64_t{bits_[k]} << k;
    }
    return v;
}

std::string BitState::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

Circuit::Circuit(std::size_t width, std::vector<BitIndex> inputs, std::vector<BitIndex> outputs,
                 std::vector<BitIndex> ancillas, std::vector<Gate> gates)
    : width_(width),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      ancillas_(std::move(ancillas)),
      gates_(std::move(gates)) {
}

Circuit Circuit::open(std::size_t width, std::vector<Gate> gates) {
    std::vector<BitIndex> all(width);
    for (std::size_t k = 0; k < width; k++) {
        all[k] = static_cast<BitIndex>(k);
    }
    return Circuit(width, all, all, {}, std::move(gates));
}

void Circuit::append(const Gate &gate) {
    gates_.push_back(gate);
}

void Circuit::set_outputs(std::vector<BitIndex> outputs) {
    outputs_ = std::move(outputs);
}

void Circuit::validate() const {
    for (std::size_t k = 0; k < gates_.size(); k++) {
        for (auto q : gates_[k].targets()) {
            if (q >= width_) {
                std::ostringstream ss;
                ss << "gate " << k << " " << gates_[k] << " touches bit " << q << " of a width-" << width_
                   << " circuit";
                fail(Error::Code::OutOfRange, ss.str());
            }
        }
    }
    std::vector<int> role(width_, 0);
    for (auto q : inputs_) {
        if (q >= width_) {
            fail(Error::Code::OutOfRange, "input index " + std::to_string(q) + " out of range");
        }
        role[q]++;
    }
    for (auto q : ancillas_) {
        if (q >= width_) {
            fail(Error::Code::OutOfRange, "ancilla index " + std::to_string(q) + " out of range");
        }
        role[q]++;
    }
    for (std::size_t q = 0; q < width_; q++) {
        if (role[q] != 1) {
            fail(Error::Code::InvalidArgument,
                 "inputs and ancillas must partition the bits; bit " + std::to_string(q) + " appears " +
                     std::to_string(role[q]) + " times");
        }
    }
    for (auto q : outputs_) {
        if (q >= width_) {
            fail(Error::Code::OutOfRange, "output index " + std::to_string(q) + " out of range");
        }
    }
}

Lattice2DTopology Lattice2DTopology::row_major(int width, int height) {
    Lattice2DTopology t;
    t.width = width;
    t.height = height;
    t.cell_of_bit.reserve(static_cast<std::size_t>(width) * height);
    for (int r = 0; r < height; r++) {
        for (int c = 0; c < width; c++) {
            t.cell_of_bit.push_back({r, c});
        }
    }
    return t;
}

void apply_gate_inplace(const Gate &gate, std::span<std::uint8_t> bits) noexcept {
    const auto &q = gate.operands;
    switch (gate.kind) {
        case GateKind::CNOT:
            bits[q[1]] ^= bits[q[0]];
            break;
        case GateKind::TOFFOLI:
            bits[q[2]] ^= bits[q[0]] & bits[q[1]];
            break;
        case GateKind::MAJ:
            bits[q[1]] ^= bits[q[0]];
            bits[q[2]] ^= bits[q[0]];
            bits[q[0]] ^= bits[q[1]] & bits[q[2]];
            break;
        case GateKind::MAJINV:
            bits[q[0]] ^= bits[q[1]] & bits[q[2]];
            bits[q[2]] ^= bits[q[0]];
            bits[q[1]] ^= bits[q[0]];
            break;
        case GateKind::SWAP:
            std::swap(bits[q[0]], bits[q[1]]);
            break;
        case GateKind::SWAP3:
            // SWAP(a,b) then SWAP(b,c): the value at a ends at c.
            std::swap(bits[q[0]], bits[q[1]]);
            std::swap(bits[q[1]], bits[q[2]]);
            break;
        case GateKind::INIT3:
            bits[q[0]] = 0;
            bits[q[1]] = 0;
            bits[q[2]] = 0;
            break;
    }
}

BitState apply_gate(const Gate &gate, BitState state) {
    for (auto q : gate.targets()) {
        if (q >= state.size()) {
            fail(Error::Code::OutOfRange,
                 "operand " + std::to_string(q) + " out of range for width " + std::to_string(state.size()));
        }
    }
    apply_gate_inplace(gate, state.raw());
    return state;
}

BitState run(const Circuit &circuit, BitState state) {
    if (state.size() != circuit.width()) {
        fail(Error::Code::InvalidArgument, "state width " + std::to_string(state.size()) +
                                               " does not match circuit width " +
                                               std::to_string(circuit.width()));
    }
    for (const auto &g : circuit.gates()) {
        apply_gate_inplace(g, state.raw());
    }
    return state;
}

BitState evaluate(const Circuit &circuit, const BitState &input) {
    if (input.size() != circuit.width()) {
        fail(Error::Code::InvalidArgument, "state width " + std::to_string(input.size()) +
                                               " does not match circuit width " +
                                               std::to_string(circuit.width()));
    }
    for (auto q : circuit.ancillas()) {
        if (input[q]) {
            fail(Error::Code::InvalidArgument, "ancilla bit " + std::to_string(q) + " is not zero");
        }
    }
    return run(circuit, input);
}

Circuit invert(const Circuit &circuit) {
    std::vector<Gate> gates;
    gates.reserve(circuit.gates().size());
    for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::INIT3:
                fail(Error::Code::NotInvertible, "circuit contains INIT3 and is not invertible");
            case GateKind::MAJ:
                g.kind = GateKind::MAJINV;
                break;
            case GateKind::MAJINV:
                g.kind = GateKind::MAJ;
                break;
            case GateKind::SWAP3:
                std::swap(g.operands[0], g.operands[2]);
                break;
            default:
                break;
        }
        gates.push_back(g);
    }
    std::vector<BitIndex> inputs = circuit.outputs();
    std::vector<int> is_input(circuit.width(), 0);
    for (auto q : inputs) {
        if (q < circuit.width()) {
            is_input[q] = 1;
        }
    }
    std::vector<BitIndex> ancillas;
    for (std::size_t q = 0; q < circuit.width(); q++) {
        if (!is_input[q]) {
            ancillas.push_back(static_cast<BitIndex>(q));
        }
    }
    return Circuit(circuit.width(), std::move(inputs), circuit.inputs(), std::move(ancillas), std::move(gates));
}

bool is_permutation(const Circuit &circuit) {
    const std::size_t w = circuit.width();
    if (w > kMaxExhaustiveWidth) {
        fail(Error::Code::InvalidArgument, "width " + std::to_string(w) + " exceeds the exhaustive limit of " +
                                               std::to_string(kMaxExhaustiveWidth));
    }
    for (const auto &g : circuit.gates()) {
        if (g.kind == GateKind::INIT3) {
            return false;
        }
        for (auto q : g.targets()) {
            if (q >= w) {
                fail(Error::Code::OutOfRange, "operand " + std::to_string(q) + " out of range");
            }
        }
    }
    const std::uint64_t n = std::uint64_t{1} << w;
    std::vector<bool> seen(n, false);
    BitState s(w);
    for (std::uint64_t x = 0; x < n; x++) {
        for (std::size_t k = 0; k < w; k++) {
            s.raw()[k] = (x >> k) & 1;
        }
        for (const auto &g : circuit.gates()) {
            apply_gate_inplace(g, s.raw());
        }
        auto y = s.to_integer();
        if (seen[y]) {
            return false;
        }
        seen[y] = true;
    }
    return true;
}

namespace {

bool cells_connected(std::span<const Cell> cells) {
    // Flood fill over at most three cells under 4-neighbour adjacency.
    std::vector<bool> reached(cells.size(), false);
    reached[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t a = 0; a < cells.size(); a++) {
            if (!reached[a]) {
                continue;
            }
            for (std::size_t b = 0; b < cells.size(); b++) {
                if (reached[b]) {
                    continue;
                }
                int d = std::abs(cells[a].row - cells[b].row) + std::abs(cells[a].col - cells[b].col);
                if (d == 1) {
                    reached[b] = true;
                    grew = true;
                }
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

}  // namespace

std::vector<LocalityViolation> check_locality(const Circuit &circuit, const Topology &topology) {
    std::vector<LocalityViolation> out;
    if (std::holds_alternative<NonLocalTopology>(topology)) {
        return out;
    }
    if (std::holds_alternative<Line1DTopology>(topology)) {
        for (std::size_t k = 0; k < circuit.gates().size(); k++) {
            const auto &g = circuit.gates()[k];
            auto ops = g.targets();
            auto [lo, hi] = std::minmax_element(ops.begin(), ops.end());
            if (*hi - *lo != ops.size() - 1) {
                std::ostringstream ss;
                ss << g << " operands are not a contiguous run";
                out.push_back({k, ss.str()});
            }
        }
        return out;
    }
    const auto &lattice = std::get<Lattice2DTopology>(topology);
    if (lattice.cell_of_bit.size() < circuit.width()) {
        fail(Error::Code::InvalidArgument, "lattice maps " + std::to_string(lattice.cell_of_bit.size()) +
                                               " bits but the circuit has " + std::to_string(circuit.width()));
    }
    {
        std::vector<std::uint8_t> used(static_cast<std::size_t>(lattice.width) * lattice.height, 0);
        for (std::size_t q = 0; q < circuit.width(); q++) {
            auto c = lattice.cell_of_bit[q];
            if (c.row < 0 || c.col < 0 || c.row >= lattice.height || c.col >= lattice.width) {
                fail(Error::Code::InvalidArgument, "bit " + std::to_string(q) + " is mapped outside the lattice");
            }
            auto &u = used[static_cast<std::size_t>(c.row) * lattice.width + c.col];
            if (u) {
                fail(Error::Code::InvalidArgument, "lattice map is not injective at bit " + std::to_string(q));
            }
            u = 1;
        }
    }
    for (std::size_t k = 0; k < circuit.gates().size(); k++) {
        const auto &g = circuit.gates()[k];
        std::array<Cell, 3> cells{};
        std::size_t n = 0;
        for (auto q : g.targets()) {
            cells[n++] = lattice.cell_of_bit[q];
        }
        if (!cells_connected({cells.data(), n})) {
            std::ostringstream ss;
            ss << g << " operands are not a connected set of neighbouring cells";
            out.push_back({k, ss.str()});
        }
    }
    return out;
}

GateCensus gate_census(std::span<const Gate> gates) {
    GateCensus c;
    for (const auto &g : gates) {
        c.per_kind[static_cast<std::size_t>(g.kind)]++;
    }
    c.total = gates.size();
    return c;
}

GateCensus gate_census(const Circuit &circuit) {
    return gate_census(std::span<const Gate>(circuit.gates()));
}

}  // namespace revft
