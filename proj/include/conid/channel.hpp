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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conid/graph.hpp"
#include "conid/rational.hpp"

namespace conid {

/// Discrete memoryless channel with exact transition probabilities.
///
/// matrix[y][x] = P(y | x). Every column is a probability vector: entries are
/// nonnegative and sum to exactly one. Labels within an alphabet are unique.
class Channel {
   public:
    Channel(std::vector<std::string> inputs, std::vector<std::string> outputs,
            std::vector<std::vector<Rational>> matrix);

    const std::vector<std::string> &inputs() const noexcept {
        return inputs_;
    }
    const std::vector<std::string> &outputs() const noexcept {
        return outputs_;
    }
    std::size_t input_count() const noexcept {
        return inputs_.size();
    }
    std::size_t output_count() const noexcept {
        return outputs_.size();
    }
    const Rational &probability(std::size_t y, std::size_t x) const noexcept {
        return matrix_[y][x];
    }
    bool possible(std::size_t y, std::size_t x) const noexcept {
        return sgn(matrix_[y][x]) > 0;
    }
    const std::vector<std::vector<Rational>> &matrix() const noexcept {
        return matrix_;
    }

    std::size_t input_index(std::string_view label) const;
    std::size_t output_index(std::string_view label) const;

    /// Input and output alphabets coincide as sets.
    bool xy_equivalent() const;
    /// For an XY-equivalent channel: output index carrying the label of input x.
    std::size_t output_of_input(std::size_t x) const;

    friend bool operator==(const Channel &, const Channel &) = default;

   private:
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<std::vector<Rational>> matrix_;
};

/// Gamma_x: outputs reachable from input x, as output indices in order.
std::vector<std::size_t> output_range(const Channel &c, std::size_t x);
std::vector<std::string> output_range(const Channel &c, std::string_view input_label);

/// Omega_y: inputs that reach output y, as input indices in order.
std::vector<std::size_t> input_domain(const Channel &c, std::size_t y);
std::vector<std::string> input_domain(const Channel &c, std::string_view output_label);

struct SnfcReport {
    bool xy_equivalent = false;
    /// Pairs (x, x') of input labels with P(x'|x) > 0 but P(x|x') = 0.
    std::vector<std::pair<std::string, std::string>> asymmetric_pairs;
    /// Inputs with P(x|x) = 0.
    std::vector<std::string> fully_corrupted;

    bool passes() const noexcept {
        return xy_equivalent && asymmetric_pairs.empty() && fully_corrupted.empty();
    }
};

SnfcReport validate_snfc(const Channel &c);

/// Support graph over input indices, self-loop flag set. Throws not_snfc.
Graph support_graph(const Channel &c);

/// Nonzero pattern of S^2 (with unit diagonal), self-loop flag set.
/// Throws not_snfc.
Graph confusability_graph(const Channel &c);

/// Uniform-weight channel realizing g as its support graph: column x puts
/// 1/(deg(x)+1) on x and each neighbour. Labels default to "1".."n".
/// Throws missing_self_loops when g's flag is clear.
Channel canonical_channel(const Graph &g, std::vector<std::string> labels = {});

/// Noiseless channel on labels "1".."n".
Channel identity_channel(std::size_t n);

}  // namespace conid
