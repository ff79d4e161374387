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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace conid {

/// Fixed-capacity bitset over vertex indices. The capacity is chosen at
/// construction; binary operations require equal capacities.
class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {
    }

    std::size_t capacity() const noexcept {
        return capacity_;
    }

    bool test(std::size_t v) const noexcept {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(std::size_t v) noexcept {
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(std::size_t v) noexcept {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    void set_all() noexcept {
        for (auto &w : words_) {
            w = ~std::uint64_t{0};
        }
        trim();
    }
    void clear() noexcept {
        for (auto &w : words_) {
            w = 0;
        }
    }

    std::size_t count() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }
    bool empty() const noexcept {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    bool intersects(const VertexSet &other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & other.words_[i]) != 0) {
                return true;
            }
        }
        return false;
    }
    /// Index of the lowest member, or capacity() when empty.
    std::size_t first() const noexcept {
        return next(0);
    }
    /// Lowest member >= from, or capacity() when none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= capacity_) {
            return capacity_;
        }
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0) {
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            }
            if (++wi == words_.size()) {
                return capacity_;
            }
            w = words_[wi];
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t v = first(); v < capacity_; v = next(v + 1)) {
            out.push_back(v);
        }
        return out;
    }

    VertexSet &operator&=(const VertexSet &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= o.words_[i];
        }
        return *this;
    }
    VertexSet &operator|=(const VertexSet &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= o.words_[i];
        }
        return *this;
    }
    /// Removes every member of o.
    VertexSet &subtract(const VertexSet &o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= ~o.words_[i];
        }
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) noexcept {
        a &= b;
        return a;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet &b) noexcept {
        a |= b;
        return a;
    }
    friend bool operator==(const VertexSet &, const VertexSet &) = default;

   private:
    void trim() noexcept {
        if (capacity_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
        }
    }

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace conid
