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

#include "conid/newman.hpp"

#include <bit>

#include "conid/error.hpp"

namespace conid {

namespace {

std::vector<std::uint32_t> newman_masks(std::size_t d) {
    if (d < 4 || d % 4 != 0) {
        throw Error(ErrorCode::invalid_parameter, "d must be a positive multiple of 4, got " + std::to_string(d));
    }
    if (d > kNewmanMaxDimension) {
        throw Error(ErrorCode::too_large, "d is capped at " + std::to_string(kNewmanMaxDimension));
    }
    // Bit i set means coordinate i is -1; bit 0 stays clear for the representative.
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (1u << d); m += 2) {
        if (std::popcount(m) % 2 == 0) {
            masks.push_back(m);
        }
    }
    return masks;
}

std::string tuple_label(const std::vector<std::string> &labels, std::size_t index, unsigned m) {
    std::vector<std::size_t> digits(m);
    for (unsigned k = m; k-- > 0;) {
        digits[k] = index % labels.size();
        index /= labels.size();
    }
    std::string out = "(";
    for (unsigned k = 0; k < m; ++k) {
        out += (k ? "," : "") + labels[digits[k]];
    }
    return out + ")";
}

}  // namespace

VectorSystem newman_states(std::size_t d) {
    VectorSystem vs;
    vs.dim = d;
    for (auto mask : newman_masks(d)) {
        ComplexVector v(d);
        for (std::size_t i = 0; i < d; ++i) {
            v[i] = {(mask >> i) & 1 ? -1 : 1, 0};
        }
        vs.vectors.push_back(std::move(v));
    }
    return vs;
}

Graph newman_graph(std::size_t d) {
    const auto masks = newman_masks(d);
    const std::uint32_t full = (1u << d) - 1;
    return Graph::from_predicate(masks.size(), false, [&](Vertex u, Vertex v) {
        const int h = std::popcount(masks[u] ^ masks[v]);
        const int h_antipode = std::popcount(masks[u] ^ (masks[v] ^ full));
        if (h + h_antipode != static_cast<int>(d)) {
            throw Error(ErrorCode::precondition_violated, "Hamming distance is not antipodally consistent");
        }
        return 2 * h == static_cast<int>(d);
    });
}

NewmanReport newman_qa_bound(std::size_t d) {
    const Graph g = newman_graph(d);
    const VectorSystem states = newman_states(d);

    NewmanReport r;
    r.d = d;
    r.diameter = diameter(g);

    auto best = independence_number(g);
    r.alpha = best.size();
    r.alpha_witness = best.vertices;
    r.alpha_nodes = best.nodes;
    r.alpha_cap = mpz_class(pow(ratio(199, 100), static_cast<unsigned>(d)) / 4).get_ui();

    // The Hadamard rows are states of Y_d and pairwise adjacent, so omega >= d.
    const VectorSystem clique = hadamard_clique(d);
    for (const auto &v : clique.vectors) {
        std::size_t negatives = 0;
        for (const auto &z : v) {
            negatives += z.re < 0;
        }
        if (v.front().re != 1 || negatives % 2 != 0) {
            throw Error(ErrorCode::precondition_violated, "Hadamard row is not a Newman state");
        }
    }
    auto check = is_orthogonal_representation(states, g);
    if (!check.ok) {
        throw Error(ErrorCode::not_a_representation, "Newman states do not represent Y_d");
    }

    r.qa.exponent = 1;
    r.qa.vertex_count = g.vertex_count();
    r.qa.chi = mpz_class(ceil(ratio(static_cast<unsigned long>(g.vertex_count()), static_cast<unsigned long>(r.alpha)))).get_ui();
    r.qa.chi_exact = false;
    r.qa.xi = {clique.size(), states.dim, clique.size() == states.dim};
    r.qa.qa_ratio = ratio(static_cast<unsigned long>(r.qa.chi), static_cast<unsigned long>(r.qa.xi.upper));
    r.qa.qa_lower_bound = r.qa.qa_ratio;
    r.target = pow(ratio(200, 199), static_cast<unsigned>(d)) / static_cast<unsigned long>(d);
    r.bound_holds = *r.qa.qa_lower_bound >= r.target;
    return r;
}

Channel conormal_channel(const Channel &c, unsigned m, std::size_t cap) {
    const Graph support = support_graph(c);
    if (m == 0) {
        throw Error(ErrorCode::invalid_parameter, "exponent must be at least 1");
    }
    mpz_class size = 1;
    for (unsigned k = 0; k < m; ++k) {
        size *= static_cast<unsigned long>(c.input_count());
    }
    if (size > static_cast<unsigned long>(cap)) {
        throw Error(ErrorCode::too_large, size.get_str() + " product inputs exceed the cap of " + std::to_string(cap));
    }
    if (m == 1) {
        return canonical_channel(support, c.inputs());
    }
    const Graph power = conormal_power(support, m);
    std::vector<std::string> labels;
    labels.reserve(power.vertex_count());
    for (std::size_t i = 0; i < power.vertex_count(); ++i) {
        labels.push_back(tuple_label(c.inputs(), i, m));
    }
    return canonical_channel(power, std::move(labels));
}

std::vector<QAReport> qa_scaling_report(const Graph &g, unsigned m, const VectorSystem &vs, ScalingOptions options) {
    std::vector<QAReport> reports;
    const SearchLimits limits{options.node_budget};
    Graph power = g;
    VectorSystem rep = vs;
    std::optional<Rational> base_fractional;
    std::size_t base_clique = 0;

    for (unsigned k = 1; k <= m; ++k) {
        if (k > 1) {
            if (power.vertex_count() * g.vertex_count() > options.vertex_cap) {
                break;
            }
            power = conormal_product(power, g);
            rep = tensor_product(rep, vs);
        }
        QAReport r;
        r.exponent = k;
        r.vertex_count = power.vertex_count();

        auto check = is_orthogonal_representation(rep, power);
        if (!check.ok) {
            throw Error(ErrorCode::not_a_representation,
                        "tensor power " + std::to_string(k) + " misses " + std::to_string(check.violations.size()) +
                            " edges");
        }

        std::size_t omega = 0;
        try {
            omega = clique_number(power, limits).size();
        } catch (const Error &e) {
            if (e.code() != ErrorCode::too_large) {
                throw;
            }
            omega = 1;
            for (unsigned i = 0; i < k; ++i) {
                omega *= base_clique;
            }
        }
        if (k == 1) {
            base_clique = omega;
        }
        r.xi = {omega, rep.dim, omega == rep.dim};

        try {
            r.chi_fractional = fractional_chromatic(power).value;
            r.chi_fractional_direct = true;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::too_large) {
                throw;
            }
            if (base_fractional) {
                r.chi_fractional = pow(*base_fractional, k);
            }
        }
        if (k == 1) {
            base_fractional = r.chi_fractional;
        }

        try {
            r.chi = chromatic_number(power, limits).chromatic;
            r.chi_exact = true;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::too_large) {
                throw;
            }
            r.chi = omega;
            if (r.chi_fractional) {
                r.chi = std::max<std::size_t>(r.chi, mpz_class(ceil(*r.chi_fractional)).get_ui());
            }
        }

        r.qa_ratio = ratio(static_cast<unsigned long>(r.chi), static_cast<unsigned long>(r.xi.upper));
        if (r.chi_fractional) {
            r.qa_lower_bound = *r.chi_fractional / static_cast<unsigned long>(r.xi.upper);
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace conid
