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

#include "conid/identification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "conid/error.hpp"

namespace conid {

namespace {

__extension__ typedef unsigned __int128 u128;

void require_xy(const Channel &c) {
    if (!c.xy_equivalent()) {
        throw Error(ErrorCode::not_xy_equivalent, "input and output alphabets differ");
    }
}

void require_snfc(const Channel &c) {
    if (!validate_snfc(c).passes()) {
        throw Error(ErrorCode::not_snfc, "channel is not symmetric not-fully-corrupted");
    }
}

// Restricted-growth enumeration of partitions into at most k blocks. Per block
// we keep the outputs reached once or more and twice or more; an input is
// identifiable iff its range leaves the "twice" mask.
class PartitionSearch {
   public:
    PartitionSearch(const Channel &c, std::size_t k) : n_(c.input_count()), k_(std::min(k, n_)) {
        range_.assign(n_, 0);
        for (std::size_t x = 0; x < n_; ++x) {
            for (auto y : output_range(c, x)) {
                range_[x] |= 1u << y;
            }
        }
        assignment_.assign(n_, 0);
        once_.assign(k_ + 1, 0);
        multi_.assign(k_ + 1, 0);
    }

    AssistedResult run() {
        if (n_ > 0 && k_ > 0) {
            place(0, 0);
        }
        result_.partitions_examined = examined_;
        return result_;
    }

   private:
    void place(std::size_t i, std::size_t blocks) {
        if (i == n_) {
            ++examined_;
            std::size_t count = 0;
            for (std::size_t x = 0; x < n_; ++x) {
                if ((range_[x] & ~multi_[assignment_[x]]) != 0) {
                    ++count;
                }
            }
            if (count > result_.identified || result_.partition.empty()) {
                result_.identified = count;
                result_.partition = assignment_;
                done_ = count == n_;
            }
            return;
        }
        const std::size_t top = std::min(blocks + 1, k_);
        for (std::size_t b = 0; b < top && !done_; ++b) {
            const std::uint32_t saved_once = once_[b];
            const std::uint32_t saved_multi = multi_[b];
            multi_[b] |= once_[b] & range_[i];
            once_[b] |= range_[i];
            assignment_[i] = b;
            place(i + 1, std::max(blocks, b + 1));
            once_[b] = saved_once;
            multi_[b] = saved_multi;
        }
    }

    std::size_t n_;
    std::size_t k_;
    std::vector<std::uint32_t> range_;
    std::vector<std::size_t> assignment_;
    std::vector<std::uint32_t> once_;
    std::vector<std::uint32_t> multi_;
    AssistedResult result_;
    std::uint64_t examined_ = 0;
    bool done_ = false;
};

u128 to_u128(const mpz_class &value) {
    std::uint64_t words[2] = {0, 0};
    std::size_t count = 0;
    mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, value.get_mpz_t());
    return (static_cast<u128>(words[1]) << 64) | words[0];
}

// Inverse CDF for one input. thresholds[i] = ceil(F_i * 2^64), so a uniform
// 64-bit draw u lands in bucket i iff u < thresholds[i] and not an earlier one.
struct OutputSampler {
    std::vector<std::size_t> outputs;
    std::vector<u128> thresholds;

    std::size_t draw(std::uint64_t u) const {
        for (std::size_t i = 0; i + 1 < outputs.size(); ++i) {
            if (u < thresholds[i]) {
                return outputs[i];
            }
        }
        return outputs.back();
    }
};

OutputSampler make_sampler(const Channel &c, std::size_t x) {
    OutputSampler s;
    Rational cumulative = 0;
    const mpz_class scale = mpz_class(1) << 64;
    for (auto y : output_range(c, x)) {
        cumulative += c.probability(y, x);
        s.outputs.push_back(y);
        s.thresholds.push_back(to_u128(ceil(Rational(cumulative * scale))));
    }
    return s;
}

struct ShardCounts {
    std::vector<std::uint64_t> trials;
    std::vector<std::uint64_t> conclusive;
    std::vector<std::uint64_t> inconclusive;
    std::vector<std::uint64_t> false_accepts;
};

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char ch : text) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

IdentifiedSet ci_unassisted(const Channel &c) {
    require_xy(c);
    IdentifiedSet out;
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        for (auto y : output_range(c, x)) {
            if (input_domain(c, y).size() == 1) {
                out.inputs.push_back(x);
                break;
            }
        }
    }
    out.count = out.inputs.size();
    return out;
}

IdentifiedSet identifiable_within_partition(const Channel &c, const std::vector<std::size_t> &partition) {
    if (partition.size() != c.input_count()) {
        throw Error(ErrorCode::size_mismatch, "partition length differs from input count");
    }
    IdentifiedSet out;
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        for (auto y : output_range(c, x)) {
            bool private_output = true;
            for (std::size_t other = 0; other < c.input_count() && private_output; ++other) {
                private_output = other == x || partition[other] != partition[x] || !c.possible(y, other);
            }
            if (private_output) {
                out.inputs.push_back(x);
                break;
            }
        }
    }
    out.count = out.inputs.size();
    return out;
}

IdentificationScheme inconclusive_scheme(const Channel &c, const std::vector<std::size_t> &partition,
                                         std::size_t class_count) {
    IdentificationScheme s;
    s.partition = partition;
    s.class_count = class_count;
    s.decision.assign(c.output_count(), std::vector<std::optional<std::size_t>>(class_count));
    return s;
}

IdentificationScheme scheme_from_coloring(const Channel &c, const Coloring &coloring) {
    const Graph support = support_graph(c);
    if (!is_proper_coloring(support, coloring)) {
        throw Error(ErrorCode::improper_coloring, "coloring is not proper on the support graph");
    }
    IdentificationScheme s = inconclusive_scheme(c, coloring.color, coloring.color_count);
    for (std::size_t y = 0; y < c.output_count(); ++y) {
        std::vector<std::size_t> reach(coloring.color_count, 0);
        std::vector<std::size_t> member(coloring.color_count, 0);
        for (auto x : input_domain(c, y)) {
            ++reach[coloring.color[x]];
            member[coloring.color[x]] = x;
        }
        for (std::size_t k = 0; k < coloring.color_count; ++k) {
            if (reach[k] == 1) {
                s.decision[y][k] = member[k];
            }
        }
    }
    // A proper coloring leaves every input alone on its own-label output.
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        if (s.decision[c.output_of_input(x)][coloring.color[x]] != x) {
            throw Error(ErrorCode::improper_coloring, "input '" + c.inputs()[x] + "' shares its own output");
        }
    }
    return s;
}

SchemeReport verify_scheme(const Channel &c, const IdentificationScheme &s) {
    if (s.partition.size() != c.input_count() || s.decision.size() != c.output_count()) {
        throw Error(ErrorCode::size_mismatch, "scheme shape does not match the channel");
    }
    SchemeReport report;
    for (std::size_t x = 0; x < c.input_count(); ++x) {
        const std::size_t k = s.partition[x];
        if (k >= s.class_count) {
            throw Error(ErrorCode::size_mismatch, "partition class out of range");
        }
        bool identified = false;
        for (auto y : output_range(c, x)) {
            const auto &row = s.decision[y];
            if (row.size() != s.class_count) {
                throw Error(ErrorCode::size_mismatch, "decision row width differs from class count");
            }
            if (!row[k]) {
                continue;
            }
            if (*row[k] == x) {
                identified = true;
            } else {
                report.false_accepts.push_back({x, y, *row[k]});
            }
        }
        if (identified) {
            report.identified.push_back(x);
        }
    }
    report.identified_count = report.identified.size();
    return report;
}

AssistedResult assisted_ci(const Channel &c, std::size_t k) {
    require_snfc(c);
    if (c.input_count() > kPartitionGuard) {
        throw Error(ErrorCode::too_large, "partition search is limited to " + std::to_string(kPartitionGuard) +
                                              " inputs, got " + std::to_string(c.input_count()));
    }
    if (k == 0) {
        throw Error(ErrorCode::invalid_parameter, "side channel needs at least one symbol");
    }
    return PartitionSearch(c, k).run();
}

AssistanceResult min_classical_assistance(const Channel &c) {
    const Graph support = support_graph(c);
    AssistanceResult out;
    auto chi = chromatic_number(support);
    out.chromatic = chi.chromatic;
    out.coloring = chi.witness;
    if (c.input_count() <= kPartitionGuard) {
        for (std::size_t k = 1; k <= c.input_count(); ++k) {
            if (assisted_ci(c, k).identified == c.input_count()) {
                out.oracle = k;
                break;
            }
        }
    }
    return out;
}

double ZeroErrorIndex::bits() const {
    return std::log2(static_cast<double>(alpha));
}

ZeroErrorIndex zero_error_index(const Channel &c) {
    auto best = independence_number(confusability_graph(c));
    return {best.size(), best.vertices};
}

std::ptrdiff_t superactivation_gap(const Channel &c) {
    const Graph support = support_graph(c);
    if (ci_unassisted(c).count != 0) {
        throw Error(ErrorCode::precondition_violated, "gap is defined only when no input is identifiable alone");
    }
    return static_cast<std::ptrdiff_t>(c.input_count()) -
           static_cast<std::ptrdiff_t>(chromatic_number(support).chromatic);
}

std::uint64_t SimulationReport::total_false_accepts() const noexcept {
    std::uint64_t total = 0;
    for (const auto &s : inputs) {
        total += s.false_accepts;
    }
    return total;
}

std::string SimulationReport::to_csv(const Channel &c) const {
    std::ostringstream out;
    out << "input,trials,conclusive,inconclusive,false_accepts\n";
    for (const auto &s : inputs) {
        out << csv_field(c.inputs()[s.input]) << ',' << s.trials << ',' << s.conclusive << ',' << s.inconclusive
            << ',' << s.false_accepts << '\n';
    }
    return out.str();
}

SimulationReport simulate_protocol(const Channel &c, const IdentificationScheme &s, SimulationOptions options) {
    if (!verify_scheme(c, s).false_accepts.empty()) {
        throw Error(ErrorCode::precondition_violated, "scheme admits false accepts");
    }
    const std::size_t n = c.input_count();
    std::vector<OutputSampler> samplers;
    samplers.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
        samplers.push_back(make_sampler(c, x));
    }

    constexpr std::uint64_t kShard = 16384;
    const std::uint64_t shard_count = (options.trials + kShard - 1) / kShard;
    const std::uint64_t zone = (UINT64_MAX / n) * n;
    std::vector<ShardCounts> shards(shard_count);

    auto run_shard = [&](std::uint64_t index) {
        ShardCounts counts{std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n),
                           std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n)};
        std::mt19937_64 rng(splitmix64(options.seed + index * 0x9E3779B97F4A7C15ULL));
        const std::uint64_t begin = index * kShard;
        const std::uint64_t end = std::min(options.trials, begin + kShard);
        for (std::uint64_t t = begin; t < end; ++t) {
            std::uint64_t r = rng();
            while (r >= zone) {
                r = rng();
            }
            const std::size_t x = static_cast<std::size_t>(r % n);
            const std::size_t y = samplers[x].draw(rng());
            ++counts.trials[x];
            const auto &verdict = s.decision[y][s.partition[x]];
            if (!verdict) {
                ++counts.inconclusive[x];
            } else if (*verdict == x) {
                ++counts.conclusive[x];
            } else {
                ++counts.false_accepts[x];
            }
        }
        shards[index] = std::move(counts);
    };

    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.workers, shard_count));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < shard_count; ++i) {
            run_shard(i);
        }
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < shard_count; i += workers) {
                    run_shard(i);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    SimulationReport report;
    report.trials = options.trials;
    report.seed = options.seed;
    for (std::size_t x = 0; x < n; ++x) {
        InputStatistics stats;
        stats.input = x;
        for (const auto &shard : shards) {
            stats.trials += shard.trials[x];
            stats.conclusive += shard.conclusive[x];
            stats.inconclusive += shard.inconclusive[x];
            stats.false_accepts += shard.false_accepts[x];
        }
        for (auto y : output_range(c, x)) {
            if (s.decision[y][s.partition[x]] == x) {
                stats.expected_conclusive_rate += c.probability(y, x);
            }
        }
        report.inputs.push_back(std::move(stats));
    }
    return report;
}

}  // namespace conid
