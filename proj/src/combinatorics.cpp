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

#include "conid/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "conid/error.hpp"
#include "conid/lp.hpp"

namespace conid {

namespace {

[[noreturn]] void budget_exhausted(const char *what, std::uint64_t limit) {
    throw Error(ErrorCode::too_large,
                std::string(what) + " exceeded its search budget of " + std::to_string(limit) + " nodes");
}

// Descending degree, ties by index.
std::vector<Vertex> degree_order(const Graph &g) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

class CliqueSearch {
   public:
    CliqueSearch(const Graph &g, SearchLimits limits) : limit_(limits.max_nodes), order_(degree_order(g)) {
        const std::size_t n = g.vertex_count();
        std::vector<Vertex> position(n);
        for (std::size_t i = 0; i < n; ++i) {
            position[order_[i]] = i;
        }
        adj_.assign(n, VertexSet(n));
        for (std::size_t i = 0; i < n; ++i) {
            const auto &nb = g.neighbors(order_[i]);
            for (Vertex v = nb.first(); v < n; v = nb.next(v + 1)) {
                adj_[i].set(position[v]);
            }
        }
    }

    CliqueResult run() {
        const std::size_t n = order_.size();
        if (n > 0) {
            VertexSet all(n);
            all.set_all();
            expand(all);
        }
        CliqueResult out;
        for (auto v : best_) {
            out.vertices.push_back(order_[v]);
        }
        std::sort(out.vertices.begin(), out.vertices.end());
        out.nodes = nodes_;
        return out;
    }

   private:
    void expand(VertexSet candidates) {
        if (++nodes_ > limit_ && limit_ != 0) {
            budget_exhausted("maximum clique search", limit_);
        }
        // Greedy color classes over the candidates give the bound |clique| + color.
        std::vector<Vertex> verts;
        std::vector<std::size_t> bound;
        VertexSet uncolored = candidates;
        std::size_t color = 0;
        while (!uncolored.empty()) {
            ++color;
            VertexSet q = uncolored;
            while (!q.empty()) {
                Vertex v = q.first();
                q.reset(v);
                q.subtract(adj_[v]);
                uncolored.reset(v);
                verts.push_back(v);
                bound.push_back(color);
            }
        }
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + bound[i] <= best_.size()) {
                return;
            }
            Vertex v = verts[i];
            current_.push_back(v);
            VertexSet next = candidates & adj_[v];
            if (next.empty()) {
                if (current_.size() > best_.size()) {
                    best_ = current_;
                }
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
        }
    }

    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::vector<VertexSet> adj_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

// DSATUR state shared by the greedy heuristic and the exact k-coloring search.
class Dsatur {
   public:
    Dsatur(const Graph &g, std::size_t k, SearchLimits limits)
        : g_(g), n_(g.vertex_count()), k_(k), limit_(limits.max_nodes), color_(n_, kUncolored),
          counts_(n_ * k, 0), saturation_(n_, 0) {
    }

    void precolor(const std::vector<Vertex> &vertices) {
        for (Vertex v : vertices) {
            assign(v, used_);
        }
    }

    Coloring greedy() {
        for (std::size_t step = colored_; step < n_; ++step) {
            Vertex v = select();
            std::size_t c = 0;
            while (counts_[v * k_ + c] != 0) {
                ++c;
            }
            assign(v, c);
        }
        return result();
    }

    bool search() {
        if (colored_ == n_) {
            return true;
        }
        if (++nodes_ > limit_ && limit_ != 0) {
            budget_exhausted("chromatic number search", limit_);
        }
        Vertex v = select();
        const std::size_t top = std::min(k_, used_ + 1);
        for (std::size_t c = 0; c < top; ++c) {
            if (counts_[v * k_ + c] != 0) {
                continue;
            }
            bool ok = assign(v, c);
            if (ok && search()) {
                return true;
            }
            unassign(v);
        }
        return false;
    }

    Coloring result() const {
        Coloring out;
        out.color = color_;
        out.color_count = used_;
        return out;
    }

    std::uint64_t nodes() const noexcept {
        return nodes_;
    }

   private:
    Vertex select() const {
        Vertex best = n_;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] != kUncolored) {
                continue;
            }
            if (best == n_ || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
                best = v;
            }
        }
        return best;
    }

    // Returns false when some uncolored neighbour is left with no color.
    bool assign(Vertex v, std::size_t c) {
        color_[v] = c;
        ++colored_;
        if (c == used_) {
            ++used_;
        }
        bool ok = true;
        const auto &nb = g_.neighbors(v);
        for (Vertex u = nb.first(); u < n_; u = nb.next(u + 1)) {
            if (counts_[u * k_ + c]++ == 0) {
                if (++saturation_[u] == k_ && color_[u] == kUncolored) {
                    ok = false;
                }
            }
        }
        return ok;
    }

    void unassign(Vertex v) {
        std::size_t c = color_[v];
        const auto &nb = g_.neighbors(v);
        for (Vertex u = nb.first(); u < n_; u = nb.next(u + 1)) {
            if (--counts_[u * k_ + c] == 0) {
                --saturation_[u];
            }
        }
        color_[v] = kUncolored;
        --colored_;
        if (c + 1 == used_) {
            bool still_used = false;
            for (Vertex u = 0; u < n_ && !still_used; ++u) {
                still_used = color_[u] == c;
            }
            if (!still_used) {
                --used_;
            }
        }
    }

    const Graph &g_;
    std::size_t n_;
    std::size_t k_;
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> color_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> saturation_;
    std::size_t colored_ = 0;
    std::size_t used_ = 0;
};

class MaximalSetEnumerator {
   public:
    explicit MaximalSetEnumerator(const Graph &complement) : g_(complement), n_(complement.vertex_count()) {
    }

    std::vector<std::vector<Vertex>> run() {
        VertexSet r(n_), p(n_), x(n_);
        p.set_all();
        recurse(r, p, x);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

   private:
    void recurse(VertexSet &r, VertexSet p, VertexSet x) {
        if (p.empty()) {
            if (x.empty()) {
                if (out_.size() == kEnumerationSetGuard) {
                    throw Error(ErrorCode::too_large, "more than " + std::to_string(kEnumerationSetGuard) +
                                                          " maximal independent sets");
                }
                out_.push_back(r.members());
            }
            return;
        }
        VertexSet px = p | x;
        Vertex pivot = px.first();
        std::size_t pivot_score = 0;
        for (Vertex u = px.first(); u < n_; u = px.next(u + 1)) {
            std::size_t score = (p & g_.neighbors(u)).count();
            if (score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        }
        VertexSet branch = p;
        branch.subtract(g_.neighbors(pivot));
        for (Vertex v = branch.first(); v < n_; v = branch.next(v + 1)) {
            r.set(v);
            recurse(r, p & g_.neighbors(v), x & g_.neighbors(v));
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }

    const Graph &g_;
    std::size_t n_;
    std::vector<std::vector<Vertex>> out_;
};

}  // namespace

bool is_proper_coloring(const Graph &g, const Coloring &coloring) {
    if (coloring.color.size() != g.vertex_count()) {
        return false;
    }
    for (auto c : coloring.color) {
        if (c >= coloring.color_count) {
            return false;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (coloring.color[u] == coloring.color[v]) {
            return false;
        }
    }
    return true;
}

bool is_independent_set(const Graph &g, const std::vector<Vertex> &vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_clique(const Graph &g, const std::vector<Vertex> &vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

CliqueResult clique_number(const Graph &g, SearchLimits limits) {
    return CliqueSearch(g, limits).run();
}

CliqueResult independence_number(const Graph &g, SearchLimits limits) {
    return clique_number(g.complement(), limits);
}

Coloring greedy_coloring(const Graph &g) {
    Dsatur state(g, std::max<std::size_t>(g.vertex_count(), 1), {});
    return state.greedy();
}

ChromaticResult chromatic_number(const Graph &g, SearchLimits limits) {
    ChromaticResult out;
    if (g.vertex_count() == 0) {
        return out;
    }
    auto clique = clique_number(g, limits);
    out.clique_lower_bound = clique.size();
    out.nodes = clique.nodes;
    out.witness = greedy_coloring(g);
    out.greedy_upper_bound = out.witness.color_count;
    out.chromatic = out.greedy_upper_bound;
    for (std::size_t k = out.clique_lower_bound; k < out.greedy_upper_bound; ++k) {
        Dsatur state(g, k, limits);
        state.precolor(clique.vertices);
        bool found = state.search();
        out.nodes += state.nodes();
        if (found) {
            out.chromatic = k;
            out.witness = state.result();
            break;
        }
    }
    if (!is_proper_coloring(g, out.witness) || out.witness.color_count != out.chromatic) {
        throw Error(ErrorCode::precondition_violated, "internal: chromatic witness failed verification");
    }
    return out;
}

std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph &g, std::size_t vertex_guard) {
    if (g.vertex_count() > vertex_guard) {
        throw Error(ErrorCode::too_large, "maximal independent set enumeration is limited to " +
                                              std::to_string(vertex_guard) + " vertices, graph has " +
                                              std::to_string(g.vertex_count()));
    }
    if (g.vertex_count() == 0) {
        return {};
    }
    Graph comp = g.complement();
    return MaximalSetEnumerator(comp).run();
}

FractionalChromatic fractional_chromatic(const Graph &g, std::size_t vertex_guard) {
    FractionalChromatic out;
    out.sets = maximal_independent_sets(g, vertex_guard);
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        out.value = 0;
        return out;
    }
    // Packing dual: max sum_v y_v  s.t.  sum_{v in S} y_v <= 1 for every maximal S.
    PackingLp lp;
    lp.c.assign(n, Rational(1));
    lp.b.assign(out.sets.size(), Rational(1));
    for (const auto &set : out.sets) {
        std::vector<Rational> row(n, Rational(0));
        for (auto v : set) {
            row[v] = 1;
        }
        lp.a.push_back(std::move(row));
    }
    auto sol = solve_packing_lp(lp);
    out.value = sol.objective;
    out.vertex_prices = sol.primal;
    out.set_weights = sol.dual;

    // Certificate: covering feasibility, packing feasibility, equal objectives.
    Rational cover_total = 0, pack_total = 0;
    std::vector<Rational> coverage(n, Rational(0));
    for (std::size_t s = 0; s < out.sets.size(); ++s) {
        Rational load = 0;
        for (auto v : out.sets[s]) {
            coverage[v] += out.set_weights[s];
            load += out.vertex_prices[v];
        }
        if (sgn(out.set_weights[s]) < 0 || load > 1) {
            throw Error(ErrorCode::precondition_violated, "internal: fractional chromatic certificate failed");
        }
        cover_total += out.set_weights[s];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (coverage[v] < 1 || sgn(out.vertex_prices[v]) < 0) {
            throw Error(ErrorCode::precondition_violated, "internal: fractional chromatic certificate failed");
        }
        pack_total += out.vertex_prices[v];
    }
    if (cover_total != out.value || pack_total != out.value) {
        throw Error(ErrorCode::precondition_violated, "internal: fractional chromatic duality gap");
    }
    return out;
}

}  // namespace conid
