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

#include <string>

#include "conid/error.hpp"
#include "conid/io.hpp"
#include "oracles.hpp"

using namespace conid;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::parse_error;
}

std::string message_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("graph JSON round trip") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const Graph g = oracle::random_graph(1 + t % 9, 0.4, rng, t % 2 == 0);
        CHECK(graph_from_json(parse_json(graph_to_json(g).dump())) == g);
    }
    const Json j = parse_json(R"({"n": 3, "edges": [[0, 2]]})");
    const Graph g = graph_from_json(j);
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.has_self_loops());
}

TEST_CASE("graph JSON errors") {
    CHECK(code_of([] { graph_from_json(parse_json(R"({"n": 3, "edges": [[2, 1]]})")); }) == ErrorCode::invalid_graph);
    CHECK(code_of([] { graph_from_json(parse_json(R"({"n": 3, "edges": [[0, 1, 2]]})")); }) == ErrorCode::parse_error);
    CHECK(code_of([] { graph_from_json(parse_json(R"({"edges": []})")); }) == ErrorCode::parse_error);
    CHECK(message_of([] { graph_from_json(parse_json(R"({"n": 3, "edges": [[0, "x"]]})")); }).find("edges[0][1]") !=
          std::string::npos);
}

TEST_CASE("channel JSON round trip") {
    const Channel c = canonical_channel(pentagon_variant(4));
    const Channel back = channel_from_json(parse_json(channel_to_json(c).dump()));
    CHECK(back == c);
    const Json j = parse_json(R"({"inputs": ["a", "b"], "outputs": ["a", "b"],
                                  "matrix": [[1, "1/2"], [0, "2/4"]]})");
    const Channel d = channel_from_json(j);
    CHECK(d.probability(1, 1) == Rational(1, 2));
    CHECK(to_string(d.probability(1, 1)) == "1/2");
}

TEST_CASE("channel JSON errors name the field") {
    const auto msg = message_of([] {
        channel_from_json(parse_json(R"({"inputs": ["a"], "outputs": ["a"], "matrix": [["one"]]})"));
    });
    CHECK(msg.find("matrix[0][0]") != std::string::npos);
    CHECK(code_of([] {
              channel_from_json(parse_json(R"({"inputs": ["a"], "outputs": ["a"], "matrix": [["1/2"]]})"));
          }) != ErrorCode::parse_error);
}

TEST_CASE("syntax errors carry line and column") {
    const std::string text = "{\n  \"n\": 3,\n  \"edges\": [[0, 1],]\n}";
    const auto msg = message_of([&] { parse_json(text, "g.json"); });
    CHECK(msg.find("g.json:3:20:") != std::string::npos);
    CHECK(code_of([&] { parse_json(text); }) == ErrorCode::parse_error);
    CHECK(code_of([] { load_json_file("/nonexistent/conid.json"); }) == ErrorCode::parse_error);
}

TEST_CASE("vector system JSON") {
    const auto ks = builtin_system("ks18").system;
    const VectorSystem back = vector_system_from_json(parse_json(vector_system_to_json(ks).dump()));
    CHECK(back.vectors == ks.vectors);
    CHECK(back.contexts == ks.contexts);
    const Json j = parse_json(R"({"dim": 2, "vectors": [[1, [0, 1]], [[1, 0], 0]], "labels": ["p", "q"]})");
    const VectorSystem vs = vector_system_from_json(j);
    CHECK(vs.vectors[0][1] == GaussianInt{0, 1});
    CHECK(vs.label(1) == "q");
    CHECK(code_of([&] { vector_system_from_json(j, true); }) == ErrorCode::parse_error);
}

TEST_CASE("coloring and scheme JSON") {
    const Channel c = canonical_channel(pentagon_variant(1));
    const Coloring letters = coloring_from_json(parse_json(R"({"1":"R","2":"B","3":"G","4":"B","5":"G"})"), c);
    CHECK(letters.color == std::vector<std::size_t>{0, 2, 1, 2, 1});
    const Coloring numbers = coloring_from_json(parse_json(R"({"partition": {"1":0,"2":2,"3":1,"4":2,"5":1}})"), c);
    CHECK(numbers.color == letters.color);
    CHECK(code_of([&] { coloring_from_json(parse_json(R"({"1":"R"})"), c); }) == ErrorCode::parse_error);

    const IdentificationScheme s = scheme_from_coloring(c, letters);
    const IdentificationScheme back = scheme_from_json(parse_json(scheme_to_json(s, c).dump()), c);
    CHECK(back.partition == s.partition);
    CHECK(back.decision == s.decision);
    CHECK(color_name(3) == "M");
    CHECK(color_name(7) == "7");
}
