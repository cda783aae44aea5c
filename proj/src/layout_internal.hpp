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
#include <vector>

#include "revft/builders.hpp"

namespace revft::internal {

inline long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

/// Block geometry for one compilation. Levels 1..two_d are 3x3 arrangements
/// of child tiles; higher levels place nine children side by side.
struct Geometry {
    bool nonlocal = true;
    int two_d = 0;

    bool tiled(int level) const {
        return !nonlocal && level <= two_d;
    }
    BlockShape shape(int level) const {
        int t = level < two_d ? level : two_d;
        BlockShape s;
        s.height = static_cast<int>(ipow(3, t));
        s.width = static_cast<int>(ipow(3, t) * ipow(9, level - t));
        return s;
    }
    /// Offset of child `slot` inside a level-`level` block.
    Cell child_offset(int level, int slot) const {
        if (tiled(level)) {
            int s = static_cast<int>(ipow(3, level - 1));
            return {(slot / 3) * s, (slot % 3) * s};
        }
        return {0, slot * shape(level - 1).width};
    }
    std::array<int, 3> fresh_data() const {
        if (nonlocal) {
            return {0, 1, 2};
        }
        return {0, 4, 8};
    }
};

inline Geometry make_geometry(const LayoutStrategy &layout, int depth) {
    Geometry g;
    g.nonlocal = layout.kind == LayoutStrategy::Kind::NonLocal;
    g.two_d = layout.two_d_levels(depth);
    return g;
}

struct LineMove {
    GateKind kind = GateKind::SWAP3;
    std::array<int, 3> slots{};  // SWAP uses the first two
};

struct LinePlan {
    std::vector<LineMove> moves;
    /// tuples[i][b] = final line slot of bit i of codeword b.
    std::vector<std::array<int, 3>> tuples;
};

/// Interleaves two or three codewords on a line of `line_length` slots. The
/// first codeword's bits travel (last bit first) to sit just before the
/// matching bit of the second; a third codeword's bits travel (first bit
/// first) to sit just after it. Each trip is packed into SWAP3 hops of two
/// with a single SWAP first when the distance is odd; the moving bit is always
/// the first operand.
LinePlan plan_line_interleave(const std::vector<std::array<int, 3>> &codewords, int line_length);

}  // namespace revft::internal
