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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace revft {

using BitIndex = std::uint32_t;

/// Library-level failure that carries a stable category, mapped 1:1 onto the
/// C API status codes.
class Error : public std::runtime_error {
   public:
    enum class Code { InvalidArgument, OutOfRange, Parse, Io, NotInvertible, NoFiniteLevel };

    Error(Code code, const std::string &what) : std::runtime_error(what), code_(code) {
    }
    Code code() const noexcept {
        return code_;
    }

   private:
    Code code_;
};

enum class GateKind : std::uint8_t { CNOT, TOFFOLI, MAJ, MAJINV, SWAP, SWAP3, INIT3 };

inline constexpr std::array<GateKind, 7> kAllGateKinds = {
    GateKind::CNOT, GateKind::TOFFOLI, GateKind::MAJ,  GateKind::MAJINV,
    GateKind::SWAP, GateKind::SWAP3,   GateKind::INIT3,
};

constexpr std::size_t arity(GateKind kind) noexcept {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::SWAP:
            return 2;
        default:
            return 3;
    }
}

std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;

/// A gate applied to an ordered operand list. Operand order is semantic: MAJ
/// writes the majority into its first operand, CNOT/TOFFOLI target the last.
struct Gate {
    GateKind kind = GateKind::CNOT;
    std::array<BitIndex, 3> operands{};

    static Gate make(GateKind kind, std::initializer_list<BitIndex> ops);
    static Gate make(GateKind kind, std::span<const BitIndex> ops);

    std::span<const BitIndex> targets() const noexcept {
        return {operands.data(), arity(kind)};
    }
    bool operator==(const Gate &other) const noexcept;
};

std::ostream &operator<<(std::ostream &out, const Gate &gate);

class BitState {
   public:
    BitState() = default;
    explicit BitState(std::size_t width) : bits_(width, 0) {
    }
    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitState from_string(std::string_view text);
    static BitState from_integer(std::uint64_t value, std::size_t width);

    std::size_t size() const noexcept {
        return bits_.size();
    }
    bool operator[](std::size_t i) const {
        return bits_[i] != 0;
    }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);

    std::span<std::uint8_t> raw() noexcept {
        return bits_;
    }
    std::span<const std::uint8_t> raw() const noexcept {
        return bits_;
    }
    std::uint64_t to_integer() const;
    std::string str() const;

    bool operator==(const BitState &other) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

std::ostream &operator<<(std::ostream &out, const BitState &state);

struct GateCensus {
    std::array<std::size_t, kAllGateKinds.size()> per_kind{};
    std::size_t total = 0;

    std::size_t count(GateKind kind) const noexcept {
        return per_kind[static_cast<std::size_t>(kind)];
    }
    std::size_t total_excluding_init() const noexcept {
        return total - count(GateKind::INIT3);
    }
    /// Elementary-swap content: SWAP contributes 1, SWAP3 contributes 2.
    std::size_t elementary_swaps() const noexcept {
        return count(GateKind::SWAP) + 2 * count(GateKind::SWAP3);
    }
    bool operator==(const GateCensus &other) const = default;
};

class Circuit {
   public:
    Circuit() = default;
    Circuit(std::size_t width, std::vector<BitIndex> inputs, std::vector<BitIndex> outputs,
            std::vector<BitIndex> ancillas, std::vector<Gate> gates = {});

    /// Circuit with every bit an input and an output (no ancillas).
    static Circuit open(std::size_t width, std::vector<Gate> gates = {});

    std::size_t width() const noexcept {
        return width_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    const std::vector<BitIndex> &inputs() const noexcept {
        return inputs_;
    }
    const std::vector<BitIndex> &outputs() const noexcept {
        return outputs_;
    }
    const std::vector<BitIndex> &ancillas() const noexcept {
        return ancillas_;
    }

    void append(const Gate &gate);
    void append(GateKind kind, std::initializer_list<BitIndex> ops) {
        append(Gate::make(kind, ops));
    }
    void set_outputs(std::vector<BitIndex> outputs);

    /// Throws revft::Error if an invariant is broken: operands out of range or
    /// repeated, inputs and ancillas not partitioning the bits, outputs out of
    /// range.
    void validate() const;

    bool operator==(const Circuit &other) const = default;

   private:
    std::size_t width_ = 0;
    std::vector<BitIndex> inputs_;
    std::vector<BitIndex> outputs_;
    std::vector<BitIndex> ancillas_;
    std::vector<Gate> gates_;
};

// ---------------------------------------------------------------------------
// Topologies and locality.

struct Cell {
    int row = 0;
    int col = 0;
    bool operator==(const Cell &) const = default;
};

struct NonLocalTopology {};
struct Line1DTopology {};
struct Lattice2DTopology {
    int width = 0;
    int height = 0;
    std::vector<Cell> cell_of_bit;

    /// Row-major lattice: bit i sits at (i / width, i % width).
    static Lattice2DTopology row_major(int width, int height);
};
using Topology = std::variant<NonLocalTopology, Line1DTopology, Lattice2DTopology>;

struct LocalityViolation {
    std::size_t gate_index = 0;
    std::string reason;
};

// ---------------------------------------------------------------------------
// Semantics.

/// In-place gate application on a raw 0/1 byte buffer. Hot path; the caller
/// guarantees operands are in range.
void apply_gate_inplace(const Gate &gate, std::span<std::uint8_t> bits) noexcept;

BitState apply_gate(const Gate &gate, BitState state);

/// Folds the gate list over `state` without checking ancillas.
BitState run(const Circuit &circuit, BitState state);

/// Checked evaluation: width must match and every ancilla must start at zero.
BitState evaluate(const Circuit &circuit, const BitState &input);

/// Reverses the gate list, swapping MAJ<->MAJINV and reversing SWAP3 operand
/// order. Inputs and outputs trade places. Throws NotInvertible on INIT3.
Circuit invert(const Circuit &circuit);

inline constexpr std::size_t kMaxExhaustiveWidth = 20;

/// True iff the circuit maps the 2^width states injectively.
bool is_permutation(const Circuit &circuit);

std::vector<LocalityViolation> check_locality(const Circuit &circuit, const Topology &topology);

GateCensus gate_census(const Circuit &circuit);
GateCensus gate_census(std::span<const Gate> gates);

}  // namespace revft
