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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conid/channel.hpp"
#include "conid/graph.hpp"
#include "conid/rational.hpp"

namespace conid {

/// Gaussian integer a + bi. Arithmetic is overflow-checked and throws
/// invalid_parameter rather than wrapping.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    GaussianInt conj() const noexcept {
        return {re, -im};
    }
    bool is_zero() const noexcept {
        return re == 0 && im == 0;
    }
    /// |z|^2 as an exact integer.
    mpz_class norm() const;

    friend GaussianInt operator+(GaussianInt a, GaussianInt b);
    friend GaussianInt operator*(GaussianInt a, GaussianInt b);
    friend bool operator==(const GaussianInt &, const GaussianInt &) = default;
};

std::string to_string(const GaussianInt &z);

using ComplexVector = std::vector<GaussianInt>;

/// <u|v> = sum conj(u_i) v_i.
GaussianInt inner_product(const ComplexVector &u, const ComplexVector &v);
mpz_class norm_squared(const ComplexVector &v);

/// Unnormalized vectors with exact coordinates, optional labels, and optional
/// contexts (index sets into `vectors`).
struct VectorSystem {
    std::size_t dim = 0;
    std::vector<ComplexVector> vectors;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> contexts;

    std::size_t size() const noexcept {
        return vectors.size();
    }
    /// Label of vector i, defaulting to "v<i+1>".
    std::string label(std::size_t i) const;
    /// Throws invalid_parameter on a zero vector, wrong length, bad label
    /// count or out-of-range context index.
    void validate() const;
};

/// Builds a system from real integer rows.
VectorSystem real_system(std::size_t dim, const std::vector<std::vector<std::int64_t>> &rows);

bool orthogonal(const VectorSystem &vs, std::size_t i, std::size_t j);

/// Vertices = vectors, edge iff the exact inner product is zero. Simple graph.
Graph orthogonality_graph(const VectorSystem &vs);

struct RepresentationViolation {
    Edge edge;
    GaussianInt inner;
};

struct RepresentationCheck {
    bool ok = true;
    std::vector<RepresentationViolation> violations;
};

/// Checks <v_u|v_v> = 0 on every edge of g. Throws size_mismatch.
RepresentationCheck is_orthogonal_representation(const VectorSystem &vs, const Graph &g);

struct RankCertificate {
    std::size_t lower = 0;  ///< clique number of g
    std::size_t upper = 0;  ///< dimension of the representation
    bool tight = false;

    friend bool operator==(const RankCertificate &, const RankCertificate &) = default;
};

/// Orthogonal-rank sandwich omega(g) <= xi(g) <= dim. Throws not_a_representation.
RankCertificate certify_orthogonal_rank(const Graph &g, const VectorSystem &vs);

/// |<v_y|v_x>|^2 / (|v_x|^2 |v_y|^2): probability of the YES outcome of the
/// projector onto v_y when v_x was prepared.
Rational quantum_protocol_outcome(const VectorSystem &vs, std::size_t x, std::size_t y);

struct QuantumOutcome {
    std::size_t input = 0;
    std::size_t output = 0;
    Rational yes_probability;
};

struct QuantumIdentification {
    std::size_t identified = 0;
    std::vector<QuantumOutcome> table;  ///< every (x, y) with P(y|x) > 0
};

/// Sender encodes x as v_x on a side quantum system of dimension vs.dim; the
/// receiver measures the projector onto v_y after seeing output y.
/// Throws not_snfc, size_mismatch or not_a_representation.
QuantumIdentification quantum_assisted_ci(const Channel &c, const VectorSystem &vs);

/// Componentwise tensor product; vector index a * |b| + b matches the graph
/// product index convention.
VectorSystem tensor_product(const VectorSystem &a, const VectorSystem &b);

/// d mutually orthogonal +-1 vectors, normalized so every row starts with +1
/// and carries an even number of -1 entries. Sylvester order for powers of
/// two, Paley otherwise (d - 1 prime, 3 mod 4). Throws invalid_parameter.
VectorSystem hadamard_clique(std::size_t d);

struct BuiltinSystem {
    std::string name;
    VectorSystem system;
    Graph graph;  ///< companion graph, loop flag clear
};

/// ks18, yo13, yo14, pentagon, hadamard_clique:<d>. Throws unknown_name.
BuiltinSystem builtin_system(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace conid
