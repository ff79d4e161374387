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

#include "conid/channel.hpp"

#include <algorithm>
#include <set>

#include "conid/error.hpp"

namespace conid {

namespace {

void require_unique(const std::vector<std::string> &labels, const char *what) {
    std::set<std::string_view> seen;
    for (const auto &l : labels) {
        if (!seen.insert(l).second) {
            throw Error(ErrorCode::invalid_channel, std::string("duplicate ") + what + " label '" + l + "'");
        }
    }
}

std::size_t find_label(const std::vector<std::string> &labels, std::string_view label, const char *what) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw Error(ErrorCode::unknown_label, std::string("no ") + what + " labelled '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

void require_snfc(const Channel &c) {
    auto report = validate_snfc(c);
    if (!report.passes()) {
        std::string why;
        if (!report.xy_equivalent) {
            why = "input and output alphabets differ";
        } else if (!report.fully_corrupted.empty()) {
            why = "input '" + report.fully_corrupted.front() + "' is fully corrupted";
        } else {
            why = "zero pattern is not symmetric at (" + report.asymmetric_pairs.front().first + ", " +
                  report.asymmetric_pairs.front().second + ")";
        }
        throw Error(ErrorCode::not_snfc, why);
    }
}

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

}  // namespace

Channel::Channel(std::vector<std::string> inputs, std::vector<std::string> outputs,
                 std::vector<std::vector<Rational>> matrix)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)), matrix_(std::move(matrix)) {
    if (inputs_.empty() || outputs_.empty()) {
        throw Error(ErrorCode::invalid_channel, "alphabets must be nonempty");
    }
    require_unique(inputs_, "input");
    require_unique(outputs_, "output");
    if (matrix_.size() != outputs_.size()) {
        throw Error(ErrorCode::invalid_channel, "matrix has " + std::to_string(matrix_.size()) +
                                                    " rows, expected one per output (" +
                                                    std::to_string(outputs_.size()) + ")");
    }
    for (std::size_t y = 0; y < matrix_.size(); ++y) {
        if (matrix_[y].size() != inputs_.size()) {
            throw Error(ErrorCode::invalid_channel, "matrix row " + std::to_string(y) + " has " +
                                                        std::to_string(matrix_[y].size()) + " entries, expected " +
                                                        std::to_string(inputs_.size()));
        }
        for (auto &p : matrix_[y]) {
            p.canonicalize();
            if (sgn(p) < 0) {
                throw Error(ErrorCode::invalid_channel, "negative probability at row " + std::to_string(y));
            }
        }
    }
    for (std::size_t x = 0; x < inputs_.size(); ++x) {
        Rational sum = 0;
        for (std::size_t y = 0; y < outputs_.size(); ++y) {
            sum += matrix_[y][x];
        }
        if (sum != 1) {
            throw Error(ErrorCode::invalid_channel,
                        "column '" + inputs_[x] + "' sums to " + to_string(sum) + ", not 1");
        }
    }
}

std::size_t Channel::input_index(std::string_view label) const {
    return find_label(inputs_, label, "input");
}

std::size_t Channel::output_index(std::string_view label) const {
    return find_label(outputs_, label, "output");
}

bool Channel::xy_equivalent() const {
    if (inputs_.size() != outputs_.size()) {
        return false;
    }
    auto a = inputs_, b = outputs_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::size_t Channel::output_of_input(std::size_t x) const {
    return output_index(inputs_.at(x));
}

std::vector<std::size_t> output_range(const Channel &c, std::size_t x) {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < c.output_count(); ++y) {
        if (c.possible(y, x)) {
            out.push_back(y);
        }
    }
    return out;
}

std::vector<std::string> output_range(const Channel &c, std::string_view input_label) {
    std::vector<std::string> out;
    for (auto y : output_range(c, c.input_index(input_label))) {
        out.push_back(c.outputs()[y]);
    }
    return out;
}

std::vector<std::size_t> input_domain(const Channel &c, std::size_t y) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        if (c.possible(y, x)) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<std::string> input_domain(const Channel &c, std::string_view output_label) {
    std::vector<std::string> out;
    for (auto x : input_domain(c, c.output_index(output_label))) {
        out.push_back(c.inputs()[x]);
    }
    return out;
}

SnfcReport validate_snfc(const Channel &c) {
    SnfcReport report;
    report.xy_equivalent = c.xy_equivalent();
    if (!report.xy_equivalent) {
        return report;
    }
    const std::size_t n = c.input_count();
    for (std::size_t x = 0; x < n; ++x) {
        if (!c.possible(c.output_of_input(x), x)) {
            report.fully_corrupted.push_back(c.inputs()[x]);
        }
        for (std::size_t x2 = 0; x2 < n; ++x2) {
            if (x2 == x) {
                continue;
            }
            bool forward = c.possible(c.output_of_input(x2), x);
            bool backward = c.possible(c.output_of_input(x), x2);
            if (forward && !backward) {
                report.asymmetric_pairs.emplace_back(c.inputs()[x], c.inputs()[x2]);
            }
        }
    }
    return report;
}

Graph support_graph(const Channel &c) {
    require_snfc(c);
    return Graph::from_predicate(c.input_count(), true,
                                 [&](Vertex x, Vertex x2) { return c.possible(c.output_of_input(x2), x); });
}

Graph confusability_graph(const Channel &c) {
    Graph s = support_graph(c);
    return Graph::from_predicate(s.vertex_count(), true, [&](Vertex x, Vertex x2) {
        // (S^2)_{x x2} > 0 with S having a unit diagonal.
        return s.adjacent(x, x2) || s.neighbors(x).intersects(s.neighbors(x2));
    });
}

Channel canonical_channel(const Graph &g, std::vector<std::string> labels) {
    if (!g.has_self_loops()) {
        throw Error(ErrorCode::missing_self_loops, "canonical_channel needs a graph with the self-loop flag set");
    }
    const std::size_t n = g.vertex_count();
    if (labels.empty()) {
        labels = default_labels(n);
    }
    if (labels.size() != n) {
        throw Error(ErrorCode::invalid_parameter, "label count does not match vertex count");
    }
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t x = 0; x < n; ++x) {
        Rational weight(1, static_cast<unsigned long>(g.degree(x) + 1));
        matrix[x][x] = weight;
        const auto &nb = g.neighbors(x);
        for (std::size_t y = nb.first(); y < n; y = nb.next(y + 1)) {
            matrix[y][x] = weight;
        }
    }
    auto outputs = labels;
    return Channel(std::move(labels), std::move(outputs), std::move(matrix));
}

Channel identity_channel(std::size_t n) {
    return canonical_channel(Graph(n, true));
}

}  // namespace conid
