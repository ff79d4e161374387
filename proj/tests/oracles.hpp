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

// Brute-force reference implementations shared by the unit tests. These are
// deliberately naive and independent of the library's search code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "conid/graph.hpp"

namespace oracle {

using conid::Edge;
using conid::Graph;
using conid::Vertex;

inline std::vector<Edge> all_pairs(std::size_t n) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

// Calls f on every labelled graph with n vertices.
inline void for_each_graph(std::size_t n, bool loops, const std::function<void(const Graph &)> &f) {
    const auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1) {
                edges.push_back(pairs[i]);
            }
        }
        f(Graph::from_edges(n, edges, loops));
    }
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng, bool loops = false) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (const auto &e : all_pairs(n)) {
        if (coin(rng)) {
            edges.push_back(e);
        }
    }
    return Graph::from_edges(n, edges, loops);
}

inline bool independent(const Graph &g, std::uint64_t mask) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) {
                return false;
            }
        }
    }
    return true;
}

inline bool clique(const Graph &g, std::uint64_t mask) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) {
                return false;
            }
        }
    }
    return true;
}

inline std::size_t alpha(const Graph &g) {
    std::size_t best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.vertex_count()); ++m) {
        if (independent(g, m)) {
            best = std::max<std::size_t>(best, __builtin_popcountll(m));
        }
    }
    return best;
}

inline std::size_t omega(const Graph &g) {
    std::size_t best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.vertex_count()); ++m) {
        if (clique(g, m)) {
            best = std::max<std::size_t>(best, __builtin_popcountll(m));
        }
    }
    return best;
}

// Smallest k admitting a proper k-coloring, by plain backtracking in index order.
inline std::size_t chi(const Graph &g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        return 0;
    }
    std::vector<std::size_t> color(n);
    std::function<bool(Vertex, std::size_t)> place = [&](Vertex v, std::size_t k) {
        if (v == n) {
            return true;
        }
        for (std::size_t c = 0; c < k; ++c) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) {
                ok = !(g.adjacent(u, v) && color[u] == c);
            }
            if (ok) {
                color[v] = c;
                if (place(v + 1, k)) {
                    return true;
                }
            }
        }
        return false;
    };
    for (std::size_t k = 1;; ++k) {
        if (place(0, k)) {
            return k;
        }
    }
}

// All-pairs shortest paths by Floyd-Warshall; returns -1 when disconnected.
inline long diameter(const Graph &g) {
    const std::size_t n = g.vertex_count();
    const long inf = 1 << 20;
    std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (u != v && g.adjacent(u, v)) {
                d[u][v] = 1;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    long best = 0;
    for (const auto &row : d) {
        for (long x : row) {
            if (x >= inf) {
                return -1;
            }
            best = std::max(best, x);
        }
    }
    return best;
}

// Graph from rows of '0'/'1' characters; the diagonal is ignored.
inline Graph from_matrix(const std::vector<std::string> &rows, bool loops) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < rows.size(); ++u) {
        for (Vertex v = u + 1; v < rows.size(); ++v) {
            if (rows[u][v] == '1') {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(rows.size(), edges, loops);
}

}  // namespace oracle
