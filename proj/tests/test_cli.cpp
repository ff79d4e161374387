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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "conid/cli.hpp"

#ifndef CONID_TEST_DATA_DIR
#define CONID_TEST_DATA_DIR "tests/data"
#endif
#ifndef CONID_GOLDEN_DIR
#define CONID_GOLDEN_DIR "tests/golden"
#endif

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

std::string data(const std::string &name) {
    return std::string(CONID_TEST_DATA_DIR) + "/" + name;
}

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = conid::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Compares against tests/golden/<name>; CONID_UPDATE_GOLDEN=1 rewrites the file.
void golden(const std::string &name, const std::vector<std::string> &args) {
    CAPTURE(name);
    const Result r = run(args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const fs::path path = fs::path(CONID_GOLDEN_DIR) / name;
    if (const char *u = std::getenv("CONID_UPDATE_GOLDEN"); u && std::string(u) == "1") {
        std::ofstream(path, std::ios::binary) << r.out;
        return;
    }
    REQUIRE(fs::exists(path));
    CHECK(r.out == slurp(path));
}

}  // namespace

TEST_CASE("golden reports") {
    golden("s1_scheme.md", {"--no-banner", "ci", "scheme", "--family", "pentagon:1", "--coloring", data("s1_partition.json")});
    golden("s4_scheme.md", {"--no-banner", "ci", "scheme", "--family", "pentagon:4", "--coloring", data("s1_partition.json")});
    golden("s6_scheme.md", {"--no-banner", "ci", "scheme", "--family", "pentagon:6", "--coloring", data("s6_partition.json")});
    golden("s1_auto.md", {"--no-banner", "ci", "scheme", "--family", "pentagon:1"});
    golden("wheel7_channel.md", {"--no-banner", "channel", "analyze", "--family", "wheel:7"});
    golden("eq_channel.md", {"--no-banner", "channel", "analyze", "--channel", data("s1_channel.json")});
    golden("edgeless3_graph.md", {"--no-banner", "graph", "analyze", "--family", "edgeless:3"});
    golden("c5_graph.md", {"--no-banner", "graph", "analyze", "--family", "cycle:5"});
    golden("cycle5.json", {"graph", "family", "--family", "cycle:5"});
    golden("c5_conormal.json", {"graph", "product", "--family", "cycle:5", "--kind", "conormal"});
    golden("s5_assisted.md", {"--no-banner", "ci", "assisted", "--family", "pentagon:5", "--k", "3"});
    golden("ks18_quantum.md", {"--no-banner", "quantum", "verify", "--vectors", "ks18"});
    golden("pentagon_scaling.md", {"--no-banner", "quantum", "scaling", "--vectors", "pentagon", "--power", "2"});
    golden("ks18_check.md", {"--no-banner", "ks", "check", "--system", "ks18"});
    golden("yo13_check.md", {"--no-banner", "ks", "check", "--system", "yo13"});
    golden("newman8.md", {"--no-banner", "newman", "--d", "8", "--no-graph"});
    golden("simulate_s1.md", {"--no-banner", "simulate", "--family", "pentagon:1", "--coloring",
                              data("s1_partition.json"), "--trials", "20000", "--seed", "11"});
}

TEST_CASE("banner can be suppressed") {
    const auto with = run({"graph", "analyze", "--family", "cycle:4"});
    const auto without = run({"--no-banner", "graph", "analyze", "--family", "cycle:4"});
    REQUIRE(with.code == 0);
    CHECK(with.out.rfind("conid " + std::string(conid::cli::kVersion) + "\n", 0) == 0);
    CHECK(with.out.substr(with.out.size() - without.out.size()) == without.out);
}

TEST_CASE("repeated runs are byte identical") {
    const std::vector<std::string> args = {"simulate", "--family", "wheel:6", "--trials", "50000", "--seed", "3"};
    auto w = args;
    w.insert(w.end(), {"--workers", "4"});
    const auto a = run(args), b = run(args), c = run(w);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(run({"simulate", "--family", "wheel:6", "--trials", "50000", "--seed", "4"}).out != a.out);
}

TEST_CASE("usage errors exit with 2") {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"ci", "assisted", "--family", "pentagon:1"},
             {"graph", "product", "--family", "cycle:5", "--kind", "tensor"},
             {"graph", "analyze"},
             {"graph", "analyze", "--family", "cycle:5", "--builtin", "ks18"},
         }) {
        CAPTURE(args.size());
        const auto r = run(args);
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
    }
    const auto r = run({"ci", "assisted", "--family", "pentagon:1", "--k", "zero"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--k") != std::string::npos);
}

TEST_CASE("domain errors exit with 1") {
    const auto bad = run({"channel", "analyze", "--channel", data("malformed.json")});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("malformed.json:4:") != std::string::npos);
    const auto family = run({"graph", "analyze", "--family", "hexagon:3"});
    CHECK(family.code == 1);
    const auto newman = run({"newman", "--d", "6"});
    CHECK(newman.code == 1);
    CHECK(newman.err.find("invalid-parameter") != std::string::npos);
    const auto asym = run({"ci", "scheme", "--channel", data("asymmetric_channel.json")});
    CHECK(asym.code == 1);
    CHECK(asym.err.find("not-snfc") != std::string::npos);
    const auto missing = run({"channel", "analyze", "--channel", data("does_not_exist.json")});
    CHECK(missing.code == 1);
}

TEST_CASE("scheme export round trips through the CLI") {
    const fs::path out = fs::temp_directory_path() / "conid_scheme_test.json";
    const auto r = run({"ci", "scheme", "--family", "pentagon:1", "--coloring", data("s1_partition.json"), "--scheme-out",
                        out.string()});
    REQUIRE(r.code == 0);
    const std::string text = slurp(out);
    CHECK(text.find("\"partition\"") != std::string::npos);
    CHECK(text.find("\"inconclusive\"") != std::string::npos);
    fs::remove(out);
}
