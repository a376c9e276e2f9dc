/*
 * Copyright 2025-2026 The lcspg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LCSPG_STATE_SET_HPP
#define LCSPG_STATE_SET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace lcspg {

/**
 * Dense bit-indexed set over state ids 0..size-1.
 * The word array is exposed so fixpoint kernels can operate word-wise.
 */
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    size_t universe_size() const { return size_; }
    size_t word_count() const { return words_.size(); }
    uint64_t* words() { return words_.data(); }
    const uint64_t* words() const { return words_.data(); }

    bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(uint32_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    size_t count() const;
    bool empty() const;

    StateSet& operator|=(const StateSet& o);
    StateSet& operator&=(const StateSet& o);
    /// set difference
    StateSet& operator-=(const StateSet& o);

    friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
    friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
    friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

    bool operator==(const StateSet& o) const;
    bool operator!=(const StateSet& o) const { return !(*this == o); }
    bool is_subset_of(const StateSet& o) const;
    bool intersects(const StateSet& o) const;

    /// universe & ~this; the complement is always taken relative to a mask
    StateSet complement_within(const StateSet& universe) const;

    std::vector<uint32_t> to_vector() const;

    template <typename F>
    void for_each(F&& f) const {
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t bits = words_[w];
            while (bits) {
                uint32_t b = static_cast<uint32_t>(__builtin_ctzll(bits));
                f(static_cast<uint32_t>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace lcspg

#endif // LCSPG_STATE_SET_HPP
