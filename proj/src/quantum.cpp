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

#include "conid/quantum.hpp"

#include <algorithm>
#include <charconv>

#include "conid/combinatorics.hpp"
#include "conid/error.hpp"

namespace conid {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorCode::invalid_parameter, "Gaussian integer overflow");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorCode::invalid_parameter, "Gaussian integer overflow");
    }
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(ErrorCode::invalid_parameter, "Gaussian integer overflow");
    }
    return r;
}

mpz_class big(std::int64_t v) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_class(static_cast<long>(v));
}

const std::vector<std::vector<std::int64_t>> kKs18 = {
    {1, 0, 0, 0},  {0, 1, 0, 0},   {0, 0, 1, 1},   {0, 0, 1, -1}, {1, -1, 0, 0},  {1, 1, -1, -1},
    {1, 1, 1, 1},  {1, -1, 1, -1}, {1, 0, -1, 0},  {0, 1, 0, -1}, {1, 0, 1, 0},   {1, 1, -1, 1},
    {-1, 1, 1, 1}, {1, 1, 1, -1},  {1, 0, 0, 1},   {0, 1, -1, 0}, {0, 1, 1, 0},   {0, 0, 0, 1},
};

const std::vector<std::vector<std::size_t>> kKs18Contexts = {
    {0, 1, 2, 3},     {3, 4, 5, 6},    {6, 7, 8, 9},   {9, 10, 11, 12}, {12, 13, 14, 15},
    {15, 16, 17, 0},  {1, 8, 10, 17},  {2, 4, 11, 13}, {5, 7, 14, 16},
};

const std::vector<std::vector<std::int64_t>> kYo13 = {
    {1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {0, 1, 1},   {0, 1, -1}, {1, 0, 1},  {1, 0, -1},
    {1, 1, 0},  {1, -1, 0}, {1, 1, 1},  {-1, 1, 1},  {1, -1, 1}, {1, 1, -1},
};

const std::vector<std::vector<std::size_t>> kYo13Contexts = {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}};

// C5 in C^3: consecutive vectors orthogonal, all other pairs not.
const std::vector<std::vector<std::int64_t>> kPentagon = {
    {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, -1}, {0, 1, 1},
};

bool is_prime(std::size_t p) {
    if (p < 2) {
        return false;
    }
    for (std::size_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::int64_t>> sylvester(std::size_t d) {
    std::vector<std::vector<std::int64_t>> h = {{1}};
    while (h.size() < d) {
        std::size_t n = h.size();
        std::vector<std::vector<std::int64_t>> next(2 * n, std::vector<std::int64_t>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next[i][j] = h[i][j];
                next[i][j + n] = h[i][j];
                next[i + n][j] = h[i][j];
                next[i + n][j + n] = -h[i][j];
            }
        }
        h = std::move(next);
    }
    return h;
}

// Paley construction I for q = d - 1 prime, q = 3 mod 4: H = I + Q' with the
// bordered Jacobsthal matrix.
std::vector<std::vector<std::int64_t>> paley(std::size_t d) {
    const std::size_t q = d - 1;
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (std::size_t x = 1; x < q; ++x) {
        chi[(x * x) % q] = 1;
    }
    std::vector<std::vector<std::int64_t>> s(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t j = 1; j < d; ++j) {
        s[0][j] = 1;
        s[j][0] = -1;
    }
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            s[i + 1][j + 1] = chi[(j + q - i) % q];
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        s[i][i] += 1;
    }
    return s;
}

}  // namespace

mpz_class GaussianInt::norm() const {
    mpz_class a = big(re), b = big(im);
    return a * a + b * b;
}

GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im)),
            checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re))};
}

std::string to_string(const GaussianInt &z) {
    if (z.im == 0) {
        return std::to_string(z.re);
    }
    if (z.re == 0) {
        return std::to_string(z.im) + "i";
    }
    return std::to_string(z.re) + (z.im < 0 ? "-" : "+") + std::to_string(z.im < 0 ? -z.im : z.im) + "i";
}

GaussianInt inner_product(const ComplexVector &u, const ComplexVector &v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::size_mismatch, "vectors have different lengths");
    }
    GaussianInt sum;
    for (std::size_t i = 0; i < u.size(); ++i) {
        sum = sum + u[i].conj() * v[i];
    }
    return sum;
}

mpz_class norm_squared(const ComplexVector &v) {
    mpz_class sum = 0;
    for (const auto &z : v) {
        sum += z.norm();
    }
    return sum;
}

std::string VectorSystem::label(std::size_t i) const {
    return labels.empty() ? "v" + std::to_string(i + 1) : labels.at(i);
}

void VectorSystem::validate() const {
    if (dim == 0) {
        throw Error(ErrorCode::invalid_parameter, "vector system dimension must be positive");
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != dim) {
            throw Error(ErrorCode::invalid_parameter, "vector " + std::to_string(i + 1) + " has " +
                                                          std::to_string(vectors[i].size()) + " coordinates, expected " +
                                                          std::to_string(dim));
        }
        if (std::all_of(vectors[i].begin(), vectors[i].end(), [](const GaussianInt &z) { return z.is_zero(); })) {
            throw Error(ErrorCode::invalid_parameter, "vector " + std::to_string(i + 1) + " is zero");
        }
    }
    if (!labels.empty() && labels.size() != vectors.size()) {
        throw Error(ErrorCode::invalid_parameter, "label count differs from vector count");
    }
    for (const auto &ctx : contexts) {
        for (auto i : ctx) {
            if (i >= vectors.size()) {
                throw Error(ErrorCode::invalid_parameter, "context index " + std::to_string(i) + " out of range");
            }
        }
    }
}

VectorSystem real_system(std::size_t dim, const std::vector<std::vector<std::int64_t>> &rows) {
    VectorSystem vs;
    vs.dim = dim;
    for (const auto &row : rows) {
        ComplexVector v;
        for (auto value : row) {
            v.push_back({value, 0});
        }
        vs.vectors.push_back(std::move(v));
    }
    vs.validate();
    return vs;
}

bool orthogonal(const VectorSystem &vs, std::size_t i, std::size_t j) {
    return inner_product(vs.vectors.at(i), vs.vectors.at(j)).is_zero();
}

Graph orthogonality_graph(const VectorSystem &vs) {
    return Graph::from_predicate(vs.size(), false, [&](Vertex u, Vertex v) { return orthogonal(vs, u, v); });
}

RepresentationCheck is_orthogonal_representation(const VectorSystem &vs, const Graph &g) {
    if (vs.size() != g.vertex_count()) {
        throw Error(ErrorCode::size_mismatch, std::to_string(vs.size()) + " vectors for " +
                                                  std::to_string(g.vertex_count()) + " vertices");
    }
    RepresentationCheck check;
    for (const auto &e : g.edges()) {
        GaussianInt ip = inner_product(vs.vectors[e.first], vs.vectors[e.second]);
        if (!ip.is_zero()) {
            check.violations.push_back({e, ip});
        }
    }
    check.ok = check.violations.empty();
    return check;
}

RankCertificate certify_orthogonal_rank(const Graph &g, const VectorSystem &vs) {
    auto check = is_orthogonal_representation(vs, g);
    if (!check.ok) {
        const auto &e = check.violations.front().edge;
        throw Error(ErrorCode::not_a_representation,
                    "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} is not orthogonal");
    }
    RankCertificate cert;
    cert.lower = clique_number(g).size();
    cert.upper = vs.dim;
    cert.tight = cert.lower == cert.upper;
    return cert;
}

Rational quantum_protocol_outcome(const VectorSystem &vs, std::size_t x, std::size_t y) {
    const auto &vx = vs.vectors.at(x);
    const auto &vy = vs.vectors.at(y);
    Rational p(inner_product(vy, vx).norm(), norm_squared(vx) * norm_squared(vy));
    p.canonicalize();
    return p;
}

QuantumIdentification quantum_assisted_ci(const Channel &c, const VectorSystem &vs) {
    const Graph support = support_graph(c);
    auto check = is_orthogonal_representation(vs, support);
    if (!check.ok) {
        throw Error(ErrorCode::not_a_representation,
                    std::to_string(check.violations.size()) + " support edges are not orthogonal");
    }
    QuantumIdentification out;
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        bool certain = false;
        bool clean = true;
        for (auto y : output_range(c, x)) {
            const std::size_t target = c.input_index(c.outputs()[y]);
            Rational p = quantum_protocol_outcome(vs, x, target);
            if (target == x) {
                certain = p == 1;
            } else if (sgn(p) != 0) {
                clean = false;
            }
            out.table.push_back({x, y, std::move(p)});
        }
        if (certain && clean) {
            ++out.identified;
        }
    }
    return out;
}

VectorSystem tensor_product(const VectorSystem &a, const VectorSystem &b) {
    VectorSystem out;
    out.dim = a.dim * b.dim;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            ComplexVector v;
            v.reserve(out.dim);
            for (const auto &p : a.vectors[i]) {
                for (const auto &q : b.vectors[j]) {
                    v.push_back(p * q);
                }
            }
            out.vectors.push_back(std::move(v));
            if (!a.labels.empty() || !b.labels.empty()) {
                out.labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
            }
        }
    }
    return out;
}

VectorSystem hadamard_clique(std::size_t d) {
    std::vector<std::vector<std::int64_t>> h;
    if (d >= 1 && (d & (d - 1)) == 0) {
        h = sylvester(d);
    } else if (d % 4 == 0 && is_prime(d - 1) && (d - 1) % 4 == 3) {
        h = paley(d);
    } else {
        throw Error(ErrorCode::invalid_parameter, "no Hadamard construction for order " + std::to_string(d));
    }
    // Normalize the first column, then the first row; the remaining rows are
    // balanced so their -1 count d/2 is even when 4 divides d.
    for (auto &row : h) {
        if (row[0] < 0) {
            for (auto &v : row) {
                v = -v;
            }
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        if (h[0][j] < 0) {
            for (auto &row : h) {
                row[j] = -row[j];
            }
        }
    }
    VectorSystem vs = real_system(d, h);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (!orthogonal(vs, i, j)) {
                throw Error(ErrorCode::precondition_violated, "Hadamard rows are not orthogonal");
            }
        }
    }
    return vs;
}

BuiltinSystem builtin_system(std::string_view name) {
    BuiltinSystem out;
    out.name = std::string(name);
    if (name == "ks18") {
        out.system = real_system(4, kKs18);
        out.system.contexts = kKs18Contexts;
    } else if (name == "yo13") {
        out.system = real_system(3, kYo13);
        out.system.contexts = kYo13Contexts;
    } else if (name == "yo14") {
        auto rows = kYo13;
        for (auto &row : rows) {
            row.push_back(0);
        }
        rows.push_back({0, 0, 0, 1});
        out.system = real_system(4, rows);
        // Each three-dimensional basis completed by the new axis.
        for (auto ctx : kYo13Contexts) {
            ctx.push_back(13);
            out.system.contexts.push_back(std::move(ctx));
        }
    } else if (name == "pentagon") {
        out.system = real_system(3, kPentagon);
    } else if (name.starts_with("hadamard_clique:")) {
        auto digits = name.substr(std::string_view("hadamard_clique:").size());
        std::size_t d = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw Error(ErrorCode::unknown_name, "bad order in '" + std::string(name) + "'");
        }
        out.system = hadamard_clique(d);
    } else {
        throw Error(ErrorCode::unknown_name, "no built-in vector system '" + std::string(name) + "'");
    }
    out.graph = orthogonality_graph(out.system);
    return out;
}

std::vector<std::string> builtin_names() {
    return {"ks18", "yo13", "yo14", "pentagon", "hadamard_clique:<d>"};
}

}  // namespace conid
