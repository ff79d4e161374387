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
#include <string>
#include <vector>

#include "conid/channel.hpp"
#include "conid/combinatorics.hpp"
#include "conid/rational.hpp"

namespace conid {

/// Sender partition plus receiver decision table for a channel assisted by a
/// noiseless classical side channel carrying the partition class.
///
/// decision[y][k] is the input the receiver declares on seeing output y with
/// side symbol k, or nullopt for an inconclusive verdict.
struct IdentificationScheme {
    std::vector<std::size_t> partition;  ///< input index -> class
    std::size_t class_count = 0;
    std::vector<std::vector<std::optional<std::size_t>>> decision;

    friend bool operator==(const IdentificationScheme &, const IdentificationScheme &) = default;
};

struct IdentifiedSet {
    std::size_t count = 0;
    std::vector<std::size_t> inputs;  ///< witness input indices, ascending
};

/// Inputs owning a private output: some y in Gamma_x with Omega_y = {x}.
/// Throws not_xy_equivalent.
IdentifiedSet ci_unassisted(const Channel &c);

/// Decision table built from a proper coloring of the support graph: an
/// output is attributed to the unique class member reaching it, and is
/// inconclusive when two members of the class reach it.
/// Throws not_snfc or improper_coloring.
IdentificationScheme scheme_from_coloring(const Channel &c, const Coloring &coloring);

/// Scheme that always answers inconclusive.
IdentificationScheme inconclusive_scheme(const Channel &c, const std::vector<std::size_t> &partition,
                                         std::size_t class_count);

struct FalseAccept {
    std::size_t input = 0;
    std::size_t output = 0;
    std::size_t declared = 0;

    friend bool operator==(const FalseAccept &, const FalseAccept &) = default;
};

struct SchemeReport {
    std::size_t identified_count = 0;
    std::vector<std::size_t> identified;  ///< inputs identified on at least one reachable output
    std::vector<FalseAccept> false_accepts;
};

/// Exhaustive check over all (x, y) with P(y|x) > 0.
SchemeReport verify_scheme(const Channel &c, const IdentificationScheme &s);

/// Inputs with a private output inside their own partition class.
IdentifiedSet identifiable_within_partition(const Channel &c, const std::vector<std::size_t> &partition);

/// Input-count guard for the partition brute force (Bell(12) ~ 4.2M).
inline constexpr std::size_t kPartitionGuard = 12;

struct AssistedResult {
    std::size_t identified = 0;
    std::vector<std::size_t> partition;  ///< first maximizer in restricted-growth order
    std::uint64_t partitions_examined = 0;
};

/// Brute force over every partition of the inputs into at most k classes.
/// Throws not_snfc or too_large.
AssistedResult assisted_ci(const Channel &c, std::size_t k);

struct AssistanceResult {
    std::size_t chromatic = 0;             ///< chi of the support graph
    Coloring coloring;                     ///< witness
    std::optional<std::size_t> oracle;     ///< smallest k with assisted_ci(c, k) = |X|, when within guard

    bool agrees() const noexcept {
        return !oracle || *oracle == chromatic;
    }
};

/// Minimum side-channel alphabet for full identification: chi(support graph),
/// cross-checked against the partition brute force when |X| is within guard.
AssistanceResult min_classical_assistance(const Channel &c);

struct ZeroErrorIndex {
    std::size_t alpha = 0;                ///< independence number of the confusability graph
    std::vector<std::size_t> code;        ///< witness inputs
    double bits() const;                  ///< log2(alpha)
};

ZeroErrorIndex zero_error_index(const Channel &c);

/// |X| - chi(support graph); requires ci_unassisted(c) == 0.
std::ptrdiff_t superactivation_gap(const Channel &c);

struct InputStatistics {
    std::size_t input = 0;
    std::uint64_t trials = 0;
    std::uint64_t conclusive = 0;
    std::uint64_t inconclusive = 0;
    std::uint64_t false_accepts = 0;
    Rational expected_conclusive_rate;  ///< sum of P(y|x) over outputs decoded to x
};

struct SimulationReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<InputStatistics> inputs;

    std::uint64_t total_false_accepts() const noexcept;
    /// CSV with header input,trials,conclusive,inconclusive,false_accepts.
    std::string to_csv(const Channel &c) const;
};

struct SimulationOptions {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Monte-Carlo run of the assisted protocol.
///
/// Trials are split into fixed shards of 16384. Shard i draws from
/// std::mt19937_64 seeded with splitmix64(seed + i * 0x9E3779B97F4A7C15);
/// inputs are drawn uniformly by rejection sampling, outputs by inverse CDF
/// against exact rational thresholds. Counts are therefore identical for any
/// worker count. Throws precondition_violated when the scheme has false
/// accepts.
SimulationReport simulate_protocol(const Channel &c, const IdentificationScheme &s, SimulationOptions options);

/// splitmix64 finalizer, exposed for stream derivation tests.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace conid
