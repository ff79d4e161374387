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

#include "conid/contextuality.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "conid/error.hpp"

namespace conid {

namespace {

constexpr std::uint8_t kUnset = 2;

class ColoringSearch {
   public:
    explicit ColoringSearch(const KSSystem &sys) : contexts_(sys.contexts()), value_(sys.system().size(), kUnset) {
        containing_.resize(value_.size());
        for (std::size_t c = 0; c < contexts_.size(); ++c) {
            for (auto v : contexts_[c]) {
                containing_[v].push_back(c);
            }
        }
    }

    KSColoring run() {
        KSColoring out;
        out.colorable = search();
        out.nodes = nodes_;
        if (out.colorable) {
            out.assignment.resize(value_.size());
            for (std::size_t v = 0; v < value_.size(); ++v) {
                out.assignment[v] = value_[v] == 1 ? 1 : 0;
            }
        }
        return out;
    }

   private:
    // Context with no 1 and the fewest free members; nullopt when all are satisfied.
    std::optional<std::size_t> pick(bool &dead) const {
        std::optional<std::size_t> best;
        std::size_t best_free = SIZE_MAX;
        for (std::size_t c = 0; c < contexts_.size(); ++c) {
            std::size_t free = 0;
            bool satisfied = false;
            for (auto v : contexts_[c]) {
                satisfied |= value_[v] == 1;
                free += value_[v] == kUnset;
            }
            if (satisfied) {
                continue;
            }
            if (free == 0) {
                dead = true;
                return std::nullopt;
            }
            if (free < best_free) {
                best = c;
                best_free = free;
            }
        }
        return best;
    }

    bool search() {
        ++nodes_;
        bool dead = false;
        auto c = pick(dead);
        if (dead) {
            return false;
        }
        if (!c) {
            return true;
        }
        for (auto v : contexts_[*c]) {
            if (value_[v] != kUnset) {
                continue;
            }
            std::vector<std::size_t> trail{v};
            value_[v] = 1;
            for (auto ctx : containing_[v]) {
                for (auto w : contexts_[ctx]) {
                    if (value_[w] == kUnset) {
                        value_[w] = 0;
                        trail.push_back(w);
                    }
                }
            }
            if (search()) {
                return true;
            }
            for (auto w : trail) {
                value_[w] = kUnset;
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>> &contexts_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<std::uint8_t> value_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

KSSystem::KSSystem(VectorSystem system) : system_(std::move(system)) {
    system_.validate();
    for (std::size_t c = 0; c < system_.contexts.size(); ++c) {
        const auto &ctx = system_.contexts[c];
        const std::string where = "context " + std::to_string(c + 1);
        if (ctx.size() != system_.dim) {
            throw Error(ErrorCode::invalid_parameter,
                        where + " has " + std::to_string(ctx.size()) + " members in dimension " + std::to_string(system_.dim));
        }
        if (std::set<std::size_t>(ctx.begin(), ctx.end()).size() != ctx.size()) {
            throw Error(ErrorCode::invalid_parameter, where + " repeats a vector");
        }
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            for (std::size_t j = i + 1; j < ctx.size(); ++j) {
                if (!orthogonal(system_, ctx[i], ctx[j])) {
                    throw Error(ErrorCode::invalid_parameter, where + ": " + system_.label(ctx[i]) + " and " +
                                                                  system_.label(ctx[j]) + " are not orthogonal");
                }
            }
        }
    }
}

KSColoring ks_colorable(const KSSystem &sys) {
    return ColoringSearch(sys).run();
}

bool parity_obstruction(const KSSystem &sys) {
    if (sys.contexts().size() % 2 == 0) {
        return false;
    }
    std::vector<std::size_t> multiplicity(sys.system().size(), 0);
    for (const auto &ctx : sys.contexts()) {
        for (auto v : ctx) {
            ++multiplicity[v];
        }
    }
    return std::all_of(multiplicity.begin(), multiplicity.end(), [](std::size_t m) { return m % 2 == 0; });
}

Graph orthogonality_graph(const KSSystem &sys) {
    return orthogonality_graph(sys.system());
}

Graph context_clique_graph(const KSSystem &sys) {
    std::set<Edge> edges;
    for (const auto &ctx : sys.contexts()) {
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            for (std::size_t j = i + 1; j < ctx.size(); ++j) {
                edges.insert(std::minmax(ctx[i], ctx[j]));
            }
        }
    }
    std::vector<Edge> list(edges.begin(), edges.end());
    return Graph::from_edges(sys.system().size(), list);
}

}  // namespace conid
