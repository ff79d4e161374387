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

#include <doctest.h>

#include <set>

#include "conid/combinatorics.hpp"
#include "conid/error.hpp"
#include "oracles.hpp"

using namespace conid;

namespace {

// Maximal independent sets by subset enumeration.
std::set<std::vector<Vertex>> maximal_sets_reference(const Graph &g) {
    const std::size_t n = g.vertex_count();
    std::set<std::vector<Vertex>> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (!oracle::independent(g, m)) {
            continue;
        }
        bool maximal = true;
        for (Vertex v = 0; v < n && maximal; ++v) {
            maximal = (m >> v & 1) || !oracle::independent(g, m | (std::uint64_t{1} << v));
        }
        if (maximal) {
            std::vector<Vertex> set;
            for (Vertex v = 0; v < n; ++v) {
                if (m >> v & 1) {
                    set.push_back(v);
                }
            }
            out.insert(set);
        }
    }
    return out;
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    for (auto &e : edges) {
        if (e.first > e.second) {
            std::swap(e.first, e.second);
        }
    }
    return Graph::from_edges(10, edges);
}

}  // namespace

TEST_CASE("alpha, omega and chi agree with brute force on random graphs") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 10, 0.2 + 0.1 * (trial % 6), rng);
        const auto a = independence_number(g);
        const auto w = clique_number(g);
        const auto c = chromatic_number(g);
        CHECK(a.size() == oracle::alpha(g));
        CHECK(is_independent_set(g, a.vertices));
        CHECK(w.size() == oracle::omega(g));
        CHECK(is_clique(g, w.vertices));
        CHECK(c.chromatic == oracle::chi(g));
        CHECK(is_proper_coloring(g, c.witness));
        CHECK(c.witness.color_count == c.chromatic);
        CHECK(c.clique_lower_bound <= c.chromatic);
        CHECK(c.chromatic <= c.greedy_upper_bound);
    }
}

TEST_CASE("alpha is omega of the complement on every graph up to six vertices") {
    for (std::size_t n = 1; n <= 6; ++n) {
        oracle::for_each_graph(n, false, [](const Graph &g) {
            CHECK(independence_number(g).size() == clique_number(g.complement()).size());
        });
    }
}

TEST_CASE("self-loop flag does not affect coloring or independence") {
    const Graph g = pentagon_variant(5);
    const Graph simple = g.with_self_loops(false);
    CHECK(chromatic_number(g).chromatic == chromatic_number(simple).chromatic);
    CHECK(independence_number(g).size() == independence_number(simple).size());
}

TEST_CASE("pentagon landmarks") {
    const Graph c5 = cycle_graph(5);
    CHECK(independence_number(c5).size() == 2);
    CHECK(independence_number(strong_product(c5, c5)).size() == 5);
    CHECK(chromatic_number(c5).chromatic == 3);
}

TEST_CASE("named chromatic numbers") {
    CHECK(chromatic_number(petersen()).chromatic == 3);
    CHECK(chromatic_number(complete_graph(7)).chromatic == 7);
    CHECK(chromatic_number(Graph(4)).chromatic == 1);
    CHECK(chromatic_number(wheel_graph(6)).chromatic == 3);
    CHECK(chromatic_number(wheel_graph(7)).chromatic == 4);
    CHECK(chromatic_number(Graph(0)).chromatic == 0);
}

TEST_CASE("greedy coloring is proper") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 20, 0.3, rng);
        CHECK(is_proper_coloring(g, greedy_coloring(g)));
    }
}

TEST_CASE("search budget raises too_large") {
    try {
        chromatic_number(petersen().complement(), SearchLimits{1});
        FAIL("expected too_large");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::too_large);
    }
}

TEST_CASE("maximal independent sets match subset enumeration") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = oracle::random_graph(1 + trial % 11, 0.35, rng);
        const auto sets = maximal_independent_sets(g);
        const auto reference = maximal_sets_reference(g);
        CHECK(std::set<std::vector<Vertex>>(sets.begin(), sets.end()) == reference);
        CHECK(sets.size() == reference.size());
        CHECK(std::is_sorted(sets.begin(), sets.end()));
    }
    CHECK_THROWS_AS(maximal_independent_sets(Graph(40)), Error);
}

TEST_CASE("fractional chromatic numbers") {
    // Vertex-transitive graphs: chi_f = n / alpha.
    for (std::size_t n = 4; n <= 11; ++n) {
        CAPTURE(n);
        CHECK(fractional_chromatic(cycle_graph(n)).value == ratio(n, n / 2));
    }
    CHECK(fractional_chromatic(petersen()).value == ratio(5, 2));
    CHECK(fractional_chromatic(complete_graph(6)).value == 6);
    CHECK(fractional_chromatic(Graph(3)).value == 1);
    CHECK(fractional_chromatic(wheel_graph(5)).value == ratio(7, 2));
}

TEST_CASE("fractional chromatic certificates are consistent") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 9, 0.4, rng);
        const auto f = fractional_chromatic(g);
        Rational cover = 0, pack = 0;
        for (const auto &w : f.set_weights) {
            cover += w;
        }
        for (const auto &p : f.vertex_prices) {
            pack += p;
        }
        CHECK(cover == f.value);
        CHECK(pack == f.value);
        CHECK(f.value >= static_cast<unsigned long>(clique_number(g).size()));
        CHECK(f.value <= static_cast<unsigned long>(chromatic_number(g).chromatic));
        CHECK(f.value * static_cast<unsigned long>(independence_number(g).size()) >=
              static_cast<unsigned long>(g.vertex_count()));
    }
}
