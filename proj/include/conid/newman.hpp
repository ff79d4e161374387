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
#include <optional>
#include <vector>

#include "conid/channel.hpp"
#include "conid/combinatorics.hpp"
#include "conid/graph.hpp"
#include "conid/quantum.hpp"
#include "conid/rational.hpp"

namespace conid {

inline constexpr std::size_t kNewmanMaxDimension = 12;

/// One +-1 representative per antipodal class of even-weight vectors of
/// length d, the one starting with +1, ordered by the bitmask of its -1
/// positions. Throws invalid_parameter unless 4 | d and d >= 4, too_large
/// above kNewmanMaxDimension.
VectorSystem newman_states(std::size_t d);

/// Orthogonality graph of newman_states(d): Hamming distance d/2.
Graph newman_graph(std::size_t d);

struct QAReport {
    std::size_t exponent = 1;
    std::size_t vertex_count = 0;
    std::size_t chi = 0;             ///< exact, or a lower bound when !chi_exact
    bool chi_exact = false;
    std::optional<Rational> chi_fractional;
    bool chi_fractional_direct = false;  ///< solved by LP rather than by exponentiation
    RankCertificate xi;
    Rational qa_ratio;                   ///< chi / xi.upper
    std::optional<Rational> qa_lower_bound;
};

struct NewmanReport {
    std::size_t d = 0;
    std::optional<std::size_t> diameter;
    std::size_t alpha = 0;
    std::vector<Vertex> alpha_witness;
    std::uint64_t alpha_nodes = 0;
    std::size_t alpha_cap = 0;  ///< floor(1.99^d / 4)
    QAReport qa;                ///< chi = ceil(|V| / alpha), qa_lower_bound = chi / d
    Rational target;            ///< (1/d) (2/1.99)^d
    bool bound_holds = false;   ///< qa_lower_bound >= target
};

NewmanReport newman_qa_bound(std::size_t d);

inline constexpr std::size_t kConormalInputCap = 4096;

/// Canonical channel on the m-fold co-normal power of the support graph.
/// Inputs are labelled "(a,b,...)" for m >= 2. Throws not_snfc, too_large.
Channel conormal_channel(const Channel &c, unsigned m, std::size_t cap = kConormalInputCap);

struct ScalingOptions {
    std::uint64_t node_budget = 5'000'000;  ///< per exact chi / omega search
    std::size_t vertex_cap = 1024;          ///< stop before larger powers
};

/// Reports for g^{x k} with representation vs^{(x) k}, k = 1..m. Stops early
/// once a power exceeds the vertex cap. Throws not_a_representation.
std::vector<QAReport> qa_scaling_report(const Graph &g, unsigned m, const VectorSystem &vs,
                                        ScalingOptions options = {});

}  // namespace conid
