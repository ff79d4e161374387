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

#include "conid/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "conid/error.hpp"

namespace conid {

namespace {

constexpr const char *kPalette[] = {"R", "G", "B", "M"};

[[noreturn]] void field_error(const std::string &field, const std::string &what) {
    throw Error(ErrorCode::parse_error, field + ": " + what);
}

const Json &member(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object()) {
        field_error(where.empty() ? "document" : where, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        field_error(where.empty() ? key : where + "." + key, "missing");
    }
    return *it;
}

std::size_t as_index(const Json &j, const std::string &field) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        field_error(field, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

std::int64_t as_int(const Json &j, const std::string &field) {
    if (!j.is_number_integer()) {
        field_error(field, "expected an integer");
    }
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
        field_error(field, "integer out of range");
    }
    return j.get<std::int64_t>();
}

const std::string &as_string(const Json &j, const std::string &field) {
    if (!j.is_string()) {
        field_error(field, "expected a string");
    }
    return j.get_ref<const std::string &>();
}

const Json &as_array(const Json &j, const std::string &field) {
    if (!j.is_array()) {
        field_error(field, "expected an array");
    }
    return j;
}

std::string at(const std::string &field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

std::vector<std::string> label_list(const Json &j, const std::string &field) {
    std::vector<std::string> out;
    const auto &arr = as_array(j, field);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(as_string(arr[i], at(field, i)));
    }
    return out;
}

std::size_t color_index(const Json &j, const std::string &field) {
    if (j.is_string()) {
        const auto &s = j.get_ref<const std::string &>();
        for (std::size_t k = 0; k < std::size(kPalette); ++k) {
            if (s == kPalette[k]) {
                return k;
            }
        }
        field_error(field, "unknown color '" + s + "'");
    }
    return as_index(j, field);
}

}  // namespace

std::string color_name(std::size_t k) {
    return k < std::size(kPalette) ? kPalette[k] : std::to_string(k);
}

Json parse_json(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string what = e.what();
        auto pos = what.rfind(": ");
        throw Error(ErrorCode::parse_error, std::string(source) + ":" + std::to_string(line) + ":" +
                                                std::to_string(column) + ": " +
                                                (pos == std::string::npos ? what : what.substr(pos + 2)));
    }
}

Json load_json_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path.string());
}

Graph graph_from_json(const Json &j) {
    const std::size_t n = as_index(member(j, "n", ""), "n");
    bool loops = false;
    if (auto it = j.find("self_loops"); it != j.end()) {
        if (!it->is_boolean()) {
            field_error("self_loops", "expected a boolean");
        }
        loops = it->get<bool>();
    }
    std::vector<Edge> edges;
    const auto &arr = as_array(member(j, "edges", ""), "edges");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string field = at("edges", i);
        if (!arr[i].is_array() || arr[i].size() != 2) {
            field_error(field, "expected a pair [i, j]");
        }
        const std::size_t u = as_index(arr[i][0], field + "[0]");
        const std::size_t v = as_index(arr[i][1], field + "[1]");
        if (u >= v) {
            throw Error(ErrorCode::invalid_graph, field + ": pairs must satisfy i < j");
        }
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges, loops);
}

Json graph_to_json(const Graph &g) {
    Json edges = Json::array();
    for (const auto &[u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}, {"self_loops", g.has_self_loops()}};
}

Channel channel_from_json(const Json &j) {
    auto inputs = label_list(member(j, "inputs", ""), "inputs");
    auto outputs = label_list(member(j, "outputs", ""), "outputs");
    std::vector<std::vector<Rational>> matrix;
    const auto &rows = as_array(member(j, "matrix", ""), "matrix");
    for (std::size_t y = 0; y < rows.size(); ++y) {
        const auto &row = as_array(rows[y], at("matrix", y));
        std::vector<Rational> values;
        for (std::size_t x = 0; x < row.size(); ++x) {
            const std::string field = at(at("matrix", y), x);
            if (row[x].is_number_integer()) {
                values.emplace_back(static_cast<long>(as_int(row[x], field)));
                continue;
            }
            const std::string &text = as_string(row[x], field);
            try {
                values.push_back(parse_rational(text));
            } catch (const Error &) {
                field_error(field, "'" + text + "' is not a rational p/q");
            }
        }
        matrix.push_back(std::move(values));
    }
    return Channel(std::move(inputs), std::move(outputs), std::move(matrix));
}

Json channel_to_json(const Channel &c) {
    Json matrix = Json::array();
    for (const auto &row : c.matrix()) {
        Json r = Json::array();
        for (const auto &p : row) {
            r.push_back(to_string(p));
        }
        matrix.push_back(std::move(r));
    }
    return Json{{"inputs", c.inputs()}, {"outputs", c.outputs()}, {"matrix", std::move(matrix)}};
}

VectorSystem vector_system_from_json(const Json &j, bool require_contexts) {
    VectorSystem vs;
    vs.dim = as_index(member(j, "dim", ""), "dim");
    const auto &vectors = as_array(member(j, "vectors", ""), "vectors");
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const std::string field = at("vectors", i);
        const auto &coords = as_array(vectors[i], field);
        ComplexVector v;
        for (std::size_t k = 0; k < coords.size(); ++k) {
            const std::string cf = at(field, k);
            if (coords[k].is_number_integer()) {
                v.push_back({as_int(coords[k], cf), 0});
                continue;
            }
            if (!coords[k].is_array() || coords[k].size() != 2) {
                field_error(cf, "expected [re, im]");
            }
            v.push_back({as_int(coords[k][0], cf + "[0]"), as_int(coords[k][1], cf + "[1]")});
        }
        vs.vectors.push_back(std::move(v));
    }
    if (auto it = j.find("labels"); it != j.end()) {
        vs.labels = label_list(*it, "labels");
    }
    if (auto it = j.find("contexts"); it != j.end()) {
        const auto &contexts = as_array(*it, "contexts");
        for (std::size_t c = 0; c < contexts.size(); ++c) {
            const auto &ctx = as_array(contexts[c], at("contexts", c));
            std::vector<std::size_t> members;
            for (std::size_t k = 0; k < ctx.size(); ++k) {
                members.push_back(as_index(ctx[k], at(at("contexts", c), k)));
            }
            vs.contexts.push_back(std::move(members));
        }
    } else if (require_contexts) {
        field_error("contexts", "missing");
    }
    vs.validate();
    return vs;
}

Json vector_system_to_json(const VectorSystem &vs) {
    Json vectors = Json::array();
    for (const auto &v : vs.vectors) {
        Json row = Json::array();
        for (const auto &z : v) {
            row.push_back({z.re, z.im});
        }
        vectors.push_back(std::move(row));
    }
    Json out{{"dim", vs.dim}, {"vectors", std::move(vectors)}};
    if (!vs.labels.empty()) {
        out["labels"] = vs.labels;
    }
    out["contexts"] = vs.contexts;
    return out;
}

IdentificationScheme scheme_from_json(const Json &j, const Channel &c) {
    const Coloring coloring = coloring_from_json(j, c);
    IdentificationScheme s = inconclusive_scheme(c, coloring.color, coloring.color_count);
    if (auto it = j.find("decision"); it != j.end()) {
        const auto &entries = as_array(*it, "decision");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::string field = at("decision", i);
            const std::size_t y = c.output_index(as_string(member(entries[i], "y", field), field + ".y"));
            const std::size_t k = color_index(member(entries[i], "color", field), field + ".color");
            const std::string &verdict = as_string(member(entries[i], "verdict", field), field + ".verdict");
            if (k >= s.class_count) {
                field_error(field + ".color", "no input carries color " + std::to_string(k));
            }
            s.decision[y][k] = verdict == "inconclusive" ? std::nullopt
                                                         : std::optional<std::size_t>(c.input_index(verdict));
        }
    }
    return s;
}

Json scheme_to_json(const IdentificationScheme &s, const Channel &c) {
    Json partition = Json::object();
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        partition[c.inputs()[x]] = s.partition[x];
    }
    Json decision = Json::array();
    for (std::size_t y = 0; y < c.output_count(); ++y) {
        for (std::size_t k = 0; k < s.class_count; ++k) {
            const auto &v = s.decision[y][k];
            decision.push_back({{"y", c.outputs()[y]}, {"color", k}, {"verdict", v ? c.inputs()[*v] : "inconclusive"}});
        }
    }
    return Json{{"partition", std::move(partition)}, {"decision", std::move(decision)}};
}

Coloring coloring_from_json(const Json &j, const Channel &c) {
    if (!j.is_object()) {
        field_error("document", "expected an object");
    }
    const bool wrapped = j.contains("partition");
    const Json &map = wrapped ? j.at("partition") : j;
    const std::string prefix = wrapped ? "partition" : "coloring";
    if (!map.is_object()) {
        field_error(prefix, "expected an object");
    }
    Coloring col;
    col.color.assign(c.input_count(), SIZE_MAX);
    for (const auto &[label, value] : map.items()) {
        const std::size_t x = c.input_index(label);
        col.color[x] = color_index(value, prefix + "." + label);
    }
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        if (col.color[x] == SIZE_MAX) {
            field_error(prefix, "input '" + c.inputs()[x] + "' has no color");
        }
        col.color_count = std::max(col.color_count, col.color[x] + 1);
    }
    return col;
}

}  // namespace conid
