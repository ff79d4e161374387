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

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "conid/channel.hpp"
#include "conid/combinatorics.hpp"
#include "conid/graph.hpp"
#include "conid/identification.hpp"
#include "conid/quantum.hpp"

namespace conid {

using Json = nlohmann::ordered_json;

/// Parses JSON text. Syntax errors raise Error(parse_error) with
/// "<source>:<line>:<column>" context.
Json parse_json(std::string_view text, std::string_view source = "<input>");
Json load_json_file(const std::filesystem::path &path);

// Loaders raise Error(parse_error) naming the offending field; semantic
// failures keep the domain error of the constructed value.

/// {"n": int, "edges": [[i,j],...], "self_loops": bool}; edges need i < j.
Graph graph_from_json(const Json &j);
Json graph_to_json(const Graph &g);

/// {"inputs": [...], "outputs": [...], "matrix": [["p/q", ...], ...]}, matrix[y][x].
Channel channel_from_json(const Json &j);
Json channel_to_json(const Channel &c);

/// {"dim": d, "vectors": [[[re,im],...],...], "contexts": [[i,...],...]}
/// with optional "labels".
VectorSystem vector_system_from_json(const Json &j, bool require_contexts = false);
Json vector_system_to_json(const VectorSystem &vs);

/// {"partition": {"input": color, ...}, "decision": [{"y", "color", "verdict"}, ...]}.
/// Colors are integers. Decision entries not listed are inconclusive.
IdentificationScheme scheme_from_json(const Json &j, const Channel &c);
Json scheme_to_json(const IdentificationScheme &s, const Channel &c);

/// Either {"partition": {...}} or a bare {"input": color, ...} object.
/// Colors may be integers or palette letters R, G, B, M.
Coloring coloring_from_json(const Json &j, const Channel &c);

/// Color name used in reports: R, G, B, M, then the index from 4 on.
std::string color_name(std::size_t k);

}  // namespace conid
