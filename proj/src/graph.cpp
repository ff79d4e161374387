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

#include "conid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <string>

#include "conid/error.hpp"

namespace conid {

namespace {

// Adjacency matrices S_1..S_6 of the five-input examples, rows as bitmasks
// over columns 1..5 (bit 0 = vertex 1).
constexpr unsigned char kPentagonRows[6][5] = {
    {0b10011, 0b00111, 0b01110, 0b11100, 0b11001},
    {0b10111, 0b00111, 0b01111, 0b11100, 0b11001},
    {0b11111, 0b00111, 0b01111, 0b11101, 0b11001},
    {0b11111, 0b10111, 0b01111, 0b11101, 0b11011},
    {0b11111, 0b01111, 0b01111, 0b11111, 0b11001},
    {0b11111, 0b11111, 0b01111, 0b11111, 0b11011},
};

void require(bool cond, const std::string &message) {
    if (!cond) {
        throw Error(ErrorCode::invalid_parameter, message);
    }
}

}  // namespace

Graph::Graph(std::size_t n, bool self_loops) : adjacency_(n, VertexSet(n)), self_loops_(self_loops) {
}

void Graph::add_edge(Vertex u, Vertex v) {
    adjacency_[u].set(v);
    adjacency_[v].set(u);
    ++edge_count_;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, bool self_loops) {
    Graph g(n, self_loops);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorCode::invalid_graph, "edge [" + std::to_string(u) + "," + std::to_string(v) +
                                                      "] references a vertex >= " + std::to_string(n));
        }
        if (u == v) {
            throw Error(ErrorCode::invalid_graph,
                        "edge [" + std::to_string(u) + "," + std::to_string(v) +
                            "] is a self-loop; loops are carried by the self_loops flag");
        }
        if (g.adjacent(u, v)) {
            throw Error(ErrorCode::invalid_graph,
                        "edge [" + std::to_string(u) + "," + std::to_string(v) + "] appears twice");
        }
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::from_predicate(std::size_t n, bool self_loops, const std::function<bool(Vertex, Vertex)> &pred) {
    Graph g(n, self_loops);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (pred(u, v)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v = adjacency_[u].next(u + 1); v < vertex_count(); v = adjacency_[u].next(v + 1)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::with_self_loops(bool flag) const {
    Graph g = *this;
    g.self_loops_ = flag;
    return g;
}

Graph Graph::complement() const {
    return from_predicate(vertex_count(), self_loops_, [this](Vertex u, Vertex v) { return !adjacent(u, v); });
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    for (Vertex v : vertices) {
        require(v < vertex_count(), "induced: vertex out of range");
    }
    return from_predicate(vertices.size(), self_loops_,
                          [&](Vertex a, Vertex b) { return adjacent(vertices[a], vertices[b]); });
}

std::optional<std::size_t> diameter(const Graph &g) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    std::vector<std::size_t> dist(n);
    std::deque<Vertex> queue;
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[s] = 0;
        queue.assign(1, s);
        std::size_t reached = 1;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            const auto &nb = g.neighbors(u);
            for (Vertex v = nb.first(); v < n; v = nb.next(v + 1)) {
                if (dist[v] == unseen) {
                    dist[v] = dist[u] + 1;
                    best = std::max(best, dist[v]);
                    ++reached;
                    queue.push_back(v);
                }
            }
        }
        if (reached != n) {
            return std::nullopt;
        }
    }
    return best;
}

bool is_connected(const Graph &g) {
    return g.vertex_count() == 0 || diameter(g).has_value();
}

Graph strong_product(const Graph &g, const Graph &h) {
    const std::size_t m = h.vertex_count();
    return Graph::from_predicate(g.vertex_count() * m, g.has_self_loops() && h.has_self_loops(),
                                 [&](Vertex p, Vertex q) {
                                     Vertex a = p / m, b = p % m, a2 = q / m, b2 = q % m;
                                     return (a == a2 || g.adjacent(a, a2)) && (b == b2 || h.adjacent(b, b2));
                                 });
}

Graph conormal_product(const Graph &g, const Graph &h) {
    const std::size_t m = h.vertex_count();
    return Graph::from_predicate(g.vertex_count() * m, g.has_self_loops() && h.has_self_loops(),
                                 [&](Vertex p, Vertex q) {
                                     return g.adjacent(p / m, q / m) || h.adjacent(p % m, q % m);
                                 });
}

Graph conormal_power(const Graph &g, unsigned m) {
    require(m >= 1, "conormal_power: exponent must be >= 1");
    Graph out = g;
    for (unsigned i = 1; i < m; ++i) {
        out = conormal_product(out, g);
    }
    return out;
}

std::string_view family_name(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::cycle:
            return "cycle";
        case FamilyKind::wheel:
            return "wheel";
        case FamilyKind::friendship:
            return "friendship";
        case FamilyKind::star:
            return "star";
        case FamilyKind::turan:
            return "turan";
        case FamilyKind::complete:
            return "complete";
        case FamilyKind::edgeless:
            return "edgeless";
        case FamilyKind::path:
            return "path";
        case FamilyKind::pentagon_variant:
            return "pentagon_variant";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
    for (auto k : {FamilyKind::cycle, FamilyKind::wheel, FamilyKind::friendship, FamilyKind::star,
                   FamilyKind::turan, FamilyKind::complete, FamilyKind::edgeless, FamilyKind::path,
                   FamilyKind::pentagon_variant}) {
        if (family_name(k) == name) {
            return k;
        }
    }
    if (name == "pentagon") {
        return FamilyKind::pentagon_variant;
    }
    throw Error(ErrorCode::invalid_parameter, "unknown graph family '" + std::string(name) + "'");
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle requires n >= 3");
    return Graph::from_predicate(n, false, [n](Vertex u, Vertex v) { return v == u + 1 || (u == 0 && v == n - 1); });
}

Graph wheel_graph(std::size_t n) {
    require(n >= 3, "wheel requires n >= 3");
    return Graph::from_predicate(n + 1, false, [n](Vertex u, Vertex v) {
        return u == 0 || v == u + 1 || (u == 1 && v == n);
    });
}

Graph friendship_graph(std::size_t n) {
    require(n >= 1, "friendship requires n >= 1");
    return Graph::from_predicate(2 * n + 1, false,
                                 [](Vertex u, Vertex v) { return u == 0 || (u % 2 == 1 && v == u + 1); });
}

Graph star_graph(std::size_t n) {
    require(n >= 1, "star requires n >= 1");
    return Graph::from_predicate(n + 1, false, [](Vertex u, Vertex) { return u == 0; });
}

Graph turan_graph(std::size_t n, std::size_t r) {
    require(n >= 1 && r >= 1 && r <= n, "turan requires 1 <= r <= n");
    std::vector<std::size_t> part(n);
    std::size_t v = 0;
    for (std::size_t p = 0; p < r; ++p) {
        std::size_t size = n / r + (p < n % r ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i) {
            part[v++] = p;
        }
    }
    return Graph::from_predicate(n, false, [&](Vertex a, Vertex b) { return part[a] != part[b]; });
}

Graph complete_graph(std::size_t n) {
    require(n >= 1, "complete requires n >= 1");
    return Graph::from_predicate(n, false, [](Vertex, Vertex) { return true; });
}

Graph path_graph(std::size_t n) {
    require(n >= 1, "path requires n >= 1");
    return Graph::from_predicate(n, false, [](Vertex u, Vertex v) { return v == u + 1; });
}

Graph pentagon_variant(std::size_t index) {
    require(index >= 1 && index <= 6, "pentagon_variant index must be in 1..6");
    const auto &rows = kPentagonRows[index - 1];
    return Graph::from_predicate(5, true, [&](Vertex u, Vertex v) { return ((rows[u] >> v) & 1u) != 0; });
}

Graph family(FamilyKind kind, std::span<const std::size_t> params) {
    auto need = [&](std::size_t count) {
        require(params.size() == count, std::string(family_name(kind)) + " takes " + std::to_string(count) +
                                            " parameter(s), got " + std::to_string(params.size()));
    };
    switch (kind) {
        case FamilyKind::cycle:
            need(1);
            return cycle_graph(params[0]);
        case FamilyKind::wheel:
            need(1);
            return wheel_graph(params[0]);
        case FamilyKind::friendship:
            need(1);
            return friendship_graph(params[0]);
        case FamilyKind::star:
            need(1);
            return star_graph(params[0]);
        case FamilyKind::turan:
            need(2);
            return turan_graph(params[0], params[1]);
        case FamilyKind::complete:
            need(1);
            return complete_graph(params[0]);
        case FamilyKind::edgeless:
            need(1);
            require(params[0] >= 1, "edgeless requires n >= 1");
            return Graph(params[0]);
        case FamilyKind::path:
            need(1);
            return path_graph(params[0]);
        case FamilyKind::pentagon_variant:
            need(1);
            return pentagon_variant(params[0]);
    }
    throw Error(ErrorCode::invalid_parameter, "unknown family");
}

Graph family_from_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorCode::invalid_parameter, "family spec must look like NAME:P[,P...], got '" +
                                                      std::string(spec) + "'");
    }
    FamilyKind kind = parse_family_kind(spec.substr(0, colon));
    std::vector<std::size_t> params;
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
        auto comma = rest.find(',');
        auto piece = rest.substr(0, comma);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
            throw Error(ErrorCode::invalid_parameter, "bad family parameter '" + std::string(piece) + "'");
        }
        params.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    return family(kind, params);
}

}  // namespace conid
