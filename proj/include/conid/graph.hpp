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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conid/vertex_set.hpp"

namespace conid {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected graph on vertices 0..n-1 with a graph-level self-loop flag.
///
/// Self-loops are never stored as edges. When the flag is set every vertex
/// carries a loop (the support-graph convention); adjacency queries, colorings
/// and independent sets always act on the loop-deleted simple graph.
/// Values are immutable once built.
class Graph {
   public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n, bool self_loops = false);

    /// Validating constructor: rejects out-of-range endpoints, pairs {v,v},
    /// and pairs listed twice in either orientation.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, bool self_loops = false);

    /// Builds the graph whose distinct pairs u < v are adjacent iff pred(u, v).
    static Graph from_predicate(std::size_t n, bool self_loops,
                                const std::function<bool(Vertex, Vertex)> &pred);

    std::size_t vertex_count() const noexcept {
        return adjacency_.size();
    }
    std::size_t edge_count() const noexcept {
        return edge_count_;
    }
    bool has_self_loops() const noexcept {
        return self_loops_;
    }

    /// Adjacency of distinct vertices; adjacent(v, v) is always false.
    bool adjacent(Vertex u, Vertex v) const noexcept {
        return adjacency_[u].test(v);
    }
    const VertexSet &neighbors(Vertex v) const noexcept {
        return adjacency_[v];
    }
    std::size_t degree(Vertex v) const noexcept {
        return adjacency_[v].count();
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    Graph with_self_loops(bool flag) const;
    /// Complement of the loop-deleted graph; keeps the self-loop flag.
    Graph complement() const;
    /// Induced subgraph; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    /// Label-sensitive equality (same n, same edges, same flag).
    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    void add_edge(Vertex u, Vertex v);

    std::vector<VertexSet> adjacency_;
    std::size_t edge_count_ = 0;
    bool self_loops_ = false;
};

/// Shortest-path distance between every pair, BFS over the loop-deleted
/// graph. Returns nullopt when some pair is unreachable. K_1 has diameter 0.
std::optional<std::size_t> diameter(const Graph &g);

bool is_connected(const Graph &g);

/// Strong product; vertex (a, b) has index a * |H| + b. The self-loop flag
/// of the result is the conjunction of the factors' flags.
Graph strong_product(const Graph &g, const Graph &h);

/// Co-normal (disjunctive) product; same indexing and flag rule as
/// strong_product.
Graph conormal_product(const Graph &g, const Graph &h);

/// m-fold co-normal power, m >= 1.
Graph conormal_power(const Graph &g, unsigned m);

enum class FamilyKind { cycle, wheel, friendship, star, turan, complete, edgeless, path, pentagon_variant };

std::string_view family_name(FamilyKind kind) noexcept;
FamilyKind parse_family_kind(std::string_view name);

/// Named families. Vertex conventions:
///   cycle(n)        0..n-1 around the cycle, n >= 3
///   wheel(n)        hub 0, rim 1..n in cyclic order, n >= 3
///   friendship(n)   hub 0, triangles {0, 2i-1, 2i} for i = 1..n, n >= 1
///   star(n)         hub 0, leaves 1..n, n >= 1
///   turan(n, r)     r contiguous parts of sizes differing by at most one, 1 <= r <= n
///   complete(n), edgeless(n), path(n)   n >= 1
///   pentagon_variant(i)   the 5-vertex support graphs S_1..S_6 of the
///                         superactivation examples, self-loop flag set
/// All other families are returned as simple graphs (flag clear).
/// Throws Error(invalid_parameter) on bad kinds or bounds.
Graph family(FamilyKind kind, std::span<const std::size_t> params);

/// Parses "wheel:7", "turan:6,2", "pentagon_variant:5" (alias "pentagon").
Graph family_from_spec(std::string_view spec);

Graph cycle_graph(std::size_t n);
Graph wheel_graph(std::size_t n);
Graph friendship_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph turan_graph(std::size_t n, std::size_t r);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph pentagon_variant(std::size_t index);

}  // namespace conid
