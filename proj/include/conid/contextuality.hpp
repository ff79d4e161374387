// Copyright 2026 The conid Authors
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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conid/graph.hpp"
#include "conid/quantum.hpp"

namespace conid {

/// Vector system whose contexts are orthonormal bases (up to scaling) of the
/// ambient space.
class KSSystem {
   public:
    /// Throws invalid_parameter when a context has the wrong size, repeats an
    /// index, or holds a non-orthogonal pair.
    explicit KSSystem(VectorSystem system);

    const VectorSystem &system() const noexcept {
        return system_;
    }
    const std::vector<std::vector<std::size_t>> &contexts() const noexcept {
        return system_.contexts;
    }

   private:
    VectorSystem system_;
};

struct KSColoring {
    bool colorable = false;
    std::vector<std::uint8_t> assignment;  ///< witness, one entry per vector
    std::uint64_t nodes = 0;               ///< search nodes visited
};

/// Exactly-one-per-context {0,1} assignment by deterministic DFS with unit
/// propagation. When none exists the whole tree was closed after `nodes`
/// visits.
KSColoring ks_colorable(const KSSystem &sys);

/// Odd context count with every vector in an even number of contexts.
bool parity_obstruction(const KSSystem &sys);

Graph orthogonality_graph(const KSSystem &sys);

/// Union of the cliques on each context.
Graph context_clique_graph(const KSSystem &sys);

}  // namespace conid
