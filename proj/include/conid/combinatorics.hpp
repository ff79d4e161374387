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
#include "conid/rational.hpp"

namespace conid {

/// Vertex -> color index in [0, color_count).
struct Coloring {
    std::vector<std::size_t> color;
    std::size_t color_count = 0;

    friend bool operator==(const Coloring &, const Coloring &) = default;
};

/// Proper on the loop-deleted graph, every color index < color_count.
bool is_proper_coloring(const Graph &g, const Coloring &coloring);
bool is_independent_set(const Graph &g, const std::vector<Vertex> &vertices);
bool is_clique(const Graph &g, const std::vector<Vertex> &vertices);

/// Budget for the exact searches. max_nodes == 0 means unlimited; an
/// exhausted budget raises Error(too_large).
struct SearchLimits {
    std::uint64_t max_nodes = 0;
};

struct CliqueResult {
    std::vector<Vertex> vertices;  ///< sorted witness
    std::uint64_t nodes = 0;

    std::size_t size() const noexcept {
        return vertices.size();
    }
};

/// Maximum clique by bitset branch-and-bound with a greedy-coloring bound.
/// Vertices are ordered by descending degree, ties by index, which makes the
/// returned witness reproducible.
CliqueResult clique_number(const Graph &g, SearchLimits limits = {});

/// Maximum independent set of the loop-deleted graph.
CliqueResult independence_number(const Graph &g, SearchLimits limits = {});

/// DSATUR greedy coloring.
Coloring greedy_coloring(const Graph &g);

struct ChromaticResult {
    std::size_t chromatic = 0;
    Coloring witness;
    std::size_t clique_lower_bound = 0;
    std::size_t greedy_upper_bound = 0;
    std::uint64_t nodes = 0;
};

/// Exact chromatic number. The clique bound and DSATUR bound bracket the
/// answer; each k in between is decided by DSATUR backtracking with the
/// maximum clique precolored.
ChromaticResult chromatic_number(const Graph &g, SearchLimits limits = {});

/// Vertex-count guard for maximal independent set enumeration and the
/// fractional chromatic LP.
inline constexpr std::size_t kEnumerationVertexGuard = 32;
/// Cap on how many maximal independent sets may be enumerated.
inline constexpr std::size_t kEnumerationSetGuard = 20000;

/// Every maximal independent set, each sorted, listed lexicographically.
/// Throws too_large above the guards.
std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph &g,
                                                         std::size_t vertex_guard = kEnumerationVertexGuard);

struct FractionalChromatic {
    Rational value;
    std::vector<std::vector<Vertex>> sets;  ///< all maximal independent sets
    std::vector<Rational> set_weights;      ///< optimal covering weights, one per set
    std::vector<Rational> vertex_prices;    ///< optimal packing solution, one per vertex
};

/// chi_f(g) as the exact optimum of the independent-set covering LP.
/// Both the covering weights and the dual packing prices are returned and
/// checked to be feasible with equal objective before returning.
FractionalChromatic fractional_chromatic(const Graph &g, std::size_t vertex_guard = kEnumerationVertexGuard);

}  // namespace conid
