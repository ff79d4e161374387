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

#include "conid/error.hpp"
#include "conid/identification.hpp"
#include "oracles.hpp"

using namespace conid;

namespace {

std::vector<Graph> named_family_graphs() {
    std::vector<Graph> out;
    for (std::size_t i = 1; i <= 6; ++i) {
        out.push_back(pentagon_variant(i));
    }
    for (std::size_t n = 3; n <= 9; ++n) {
        out.push_back(cycle_graph(n).with_self_loops(true));
    }
    for (std::size_t n = 3; n <= 8; ++n) {
        out.push_back(wheel_graph(n).with_self_loops(true));
    }
    for (std::size_t n = 2; n <= 4; ++n) {
        out.push_back(friendship_graph(n).with_self_loops(true));
    }
    for (std::size_t n = 2; n <= 6; ++n) {
        out.push_back(star_graph(n).with_self_loops(true));
    }
    for (std::size_t n = 4; n <= 8; ++n) {
        out.push_back(turan_graph(n, 2).with_self_loops(true));
    }
    return out;
}

// Identifiable inputs under a partition, from explicit output sets.
std::size_t identifiable_reference(const Channel &c, const std::vector<std::size_t> &partition) {
    std::size_t count = 0;
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        std::set<std::size_t> others;
        for (std::size_t z = 0; z < c.input_count(); ++z) {
            if (z != x && partition[z] == partition[x]) {
                for (auto y : output_range(c, z)) {
                    others.insert(y);
                }
            }
        }
        for (auto y : output_range(c, x)) {
            if (!others.count(y)) {
                ++count;
                break;
            }
        }
    }
    return count;
}

// Largest identifiable count over all maps inputs -> [0, k), by direct enumeration.
std::size_t assisted_reference(const Channel &c, std::size_t k) {
    const std::size_t n = c.input_count();
    std::vector<std::size_t> partition(n, 0);
    std::size_t best = 0;
    while (true) {
        best = std::max(best, identifiable_reference(c, partition));
        std::size_t i = 0;
        while (i < n && ++partition[i] == k) {
            partition[i++] = 0;
        }
        if (i == n) {
            return best;
        }
    }
}

Coloring coloring(std::vector<std::size_t> color) {
    Coloring c;
    c.color = std::move(color);
    c.color_count = *std::max_element(c.color.begin(), c.color.end()) + 1;
    return c;
}

}  // namespace

TEST_CASE("unassisted identification") {
    CHECK(ci_unassisted(identity_channel(4)).count == 4);
    const Channel pent = canonical_channel(pentagon_variant(1));
    CHECK(ci_unassisted(pent).count == 0);
    const Channel eq = Channel({"1", "2", "3"}, {"1", "2", "3"},
                               {{0, Rational(1, 3), 0}, {Rational(1, 4), Rational(1, 3), 0},
                                {Rational(3, 4), Rational(1, 3), 1}});
    const auto r = ci_unassisted(eq);
    CHECK(r.count == 1);
    CHECK(r.inputs == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(ci_unassisted(Channel({"a"}, {"b"}, {{1}})), Error);
}

TEST_CASE("no input is identifiable when every output has two sources") {
    for (const Graph &g : named_family_graphs()) {
        const Channel c = canonical_channel(g);
        bool shared = true;
        for (std::size_t y = 0; y < c.output_count(); ++y) {
            shared = shared && input_domain(c, y).size() > 1;
        }
        if (shared) {
            CHECK(ci_unassisted(c).count == 0);
        }
    }
}

TEST_CASE("coloring schemes never false-accept") {
    for (const Graph &g : named_family_graphs()) {
        const Channel c = canonical_channel(g);
        const auto chi = chromatic_number(g);
        const auto s = scheme_from_coloring(c, chi.witness);
        const auto r = verify_scheme(c, s);
        CHECK(r.false_accepts.empty());
        CHECK(r.identified_count == c.input_count());
    }
}

TEST_CASE("scheme builder rejects improper colorings and non-snfc channels") {
    const Channel c = canonical_channel(pentagon_variant(1));
    CHECK_THROWS_AS(scheme_from_coloring(c, coloring({0, 0, 1, 2, 1})), Error);
    CHECK_THROWS_AS(scheme_from_coloring(Channel({"a"}, {"b"}, {{1}}), coloring({0})), Error);
}

TEST_CASE("verify_scheme reports false accepts of a bad table") {
    const Channel c = canonical_channel(pentagon_variant(1));
    auto s = inconclusive_scheme(c, {0, 0, 0, 0, 0}, 1);
    CHECK(verify_scheme(c, s).identified_count == 0);
    s.decision[0][0] = 0;  // output 1 is also reachable from inputs 2 and 5
    const auto r = verify_scheme(c, s);
    CHECK(r.identified_count == 1);
    CHECK(r.false_accepts.size() == 2);
    CHECK(r.false_accepts[0] == FalseAccept{1, 0, 0});
}

TEST_CASE("partition search matches direct enumeration") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 6, 0.45, rng, true);
        const Channel c = canonical_channel(g);
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto r = assisted_ci(c, k);
            CHECK(r.identified == assisted_reference(c, k));
            CHECK(identifiable_within_partition(c, r.partition).count == r.identified);
            CHECK(identifiable_reference(c, r.partition) == r.identified);
        }
    }
}

TEST_CASE("assisted identification is monotone in k and complete at |X|") {
    for (const Graph &g : named_family_graphs()) {
        const Channel c = canonical_channel(g);
        std::size_t previous = 0;
        for (std::size_t k = 1; k <= c.input_count(); ++k) {
            const std::size_t now = assisted_ci(c, k).identified;
            CHECK(now >= previous);
            previous = now;
        }
        CHECK(previous == c.input_count());
    }
}

TEST_CASE("minimal assistance equals chi on the named families") {
    for (const Graph &g : named_family_graphs()) {
        const auto r = min_classical_assistance(canonical_channel(g));
        REQUIRE(r.oracle.has_value());
        CHECK(r.agrees());
        CHECK(r.chromatic == chromatic_number(g).chromatic);
    }
}

TEST_CASE("minimal assistance can be below chi for general channels") {
    // Triangle 0-1-2 forces chi = 3, but 0 and 1 keep private outputs 4 and 3
    // when they share a class.
    const std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}};
    const auto r = min_classical_assistance(canonical_channel(Graph::from_edges(5, edges, true)));
    CHECK(r.chromatic == 3);
    REQUIRE(r.oracle.has_value());
    CHECK(*r.oracle == 2);
    CHECK_FALSE(r.agrees());
}

TEST_CASE("partition search guard") {
    const Channel big = canonical_channel(cycle_graph(13).with_self_loops(true));
    CHECK_THROWS_AS(assisted_ci(big, 3), Error);
    CHECK_FALSE(min_classical_assistance(big).oracle.has_value());
    CHECK_THROWS_AS(assisted_ci(canonical_channel(pentagon_variant(1)), 0), Error);
}

TEST_CASE("zero-error index of cycle channels") {
    for (std::size_t n = 3; n <= 15; ++n) {
        CAPTURE(n);
        const auto z = zero_error_index(canonical_channel(cycle_graph(n).with_self_loops(true)));
        CHECK(z.alpha == (n <= 5 ? 1 : n / 3));
        CHECK(z.code.size() == z.alpha);
    }
    CHECK(zero_error_index(identity_channel(8)).bits() == doctest::Approx(3.0));
}

TEST_CASE("superactivation gap") {
    CHECK(superactivation_gap(canonical_channel(pentagon_variant(1))) == 2);
    CHECK(superactivation_gap(canonical_channel(wheel_graph(7).with_self_loops(true))) == 4);
    CHECK_THROWS_AS(superactivation_gap(identity_channel(3)), Error);
}

TEST_CASE("splitmix64 reference values") {
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64(0x9E3779B97F4A7C15ULL) == 0x6E789E6AA1B965F4ULL);
}

TEST_CASE("simulation is reproducible and worker independent") {
    const Channel c = canonical_channel(pentagon_variant(1));
    const auto s = scheme_from_coloring(c, coloring({0, 2, 1, 2, 1}));
    const auto a = simulate_protocol(c, s, {50000, 99, 1});
    const auto b = simulate_protocol(c, s, {50000, 99, 4});
    const auto other = simulate_protocol(c, s, {50000, 100, 1});
    CHECK(a.to_csv(c) == b.to_csv(c));
    CHECK(a.to_csv(c) != other.to_csv(c));
    CHECK(a.total_false_accepts() == 0);
    std::uint64_t total = 0;
    for (const auto &st : a.inputs) {
        total += st.trials;
        CHECK(st.conclusive + st.inconclusive + st.false_accepts == st.trials);
    }
    CHECK(total == 50000);
    CHECK(a.inputs[1].expected_conclusive_rate == Rational(2, 3));
    CHECK(a.inputs[0].expected_conclusive_rate == 1);
}

TEST_CASE("identity channel is always conclusive") {
    const Channel c = identity_channel(3);
    const auto s = scheme_from_coloring(c, coloring({0, 0, 0}));
    const auto r = simulate_protocol(c, s, {3000, 1, 1});
    for (const auto &st : r.inputs) {
        CHECK(st.conclusive == st.trials);
        CHECK(st.expected_conclusive_rate == 1);
    }
}

TEST_CASE("simulation refuses schemes with false accepts") {
    const Channel c = canonical_channel(pentagon_variant(1));
    auto s = inconclusive_scheme(c, {0, 0, 0, 0, 0}, 1);
    s.decision[0][0] = 0;
    CHECK_THROWS_AS(simulate_protocol(c, s, {10, 0, 1}), Error);
}

TEST_CASE("sampler follows exact probabilities on a skewed channel") {
    // Input 1 reaches its own output with probability 999/1000 and otherwise
    // lands on output 3, which its classmate 2 also reaches.
    const Rational third(1, 3);
    const Channel c({"1", "2", "3"}, {"1", "2", "3"},
                    {{Rational(999, 1000), 0, third}, {0, Rational(1, 2), third}, {Rational(1, 1000), Rational(1, 2), third}});
    const auto s = scheme_from_coloring(c, coloring({0, 0, 1}));
    const auto r = simulate_protocol(c, s, {200000, 5, 2});
    const double n = static_cast<double>(r.inputs[0].trials);
    const double p = 0.999;
    const double observed = static_cast<double>(r.inputs[0].conclusive) / n;
    CHECK(std::abs(observed - p) <= 4 * std::sqrt(p * (1 - p) / n));
}

TEST_CASE("csv quoting") {
    const Channel c({"a,b", "q\"x"}, {"a,b", "q\"x"}, {{1, 0}, {0, 1}});
    const auto s = scheme_from_coloring(c, coloring({0, 0}));
    const auto csv = simulate_protocol(c, s, {4, 0, 1}).to_csv(c);
    CHECK(csv.find("\"a,b\",") != std::string::npos);
    CHECK(csv.find("\"q\"\"x\",") != std::string::npos);
}
