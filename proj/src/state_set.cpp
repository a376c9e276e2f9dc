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

#include "lcspg/state_set.hpp"

namespace lcspg {

size_t StateSet::count() const {
    size_t n = 0;
    for (uint64_t w : words_) n += static_cast<size_t>(__builtin_popcountll(w));
    return n;
}

bool StateSet::empty() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

StateSet& StateSet::operator|=(const StateSet& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] |= o.words_[i];
    return *this;
}

StateSet& StateSet::operator&=(const StateSet& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= o.words_[i];
    return *this;
}

StateSet& StateSet::operator-=(const StateSet& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= ~o.words_[i];
    return *this;
}

bool StateSet::operator==(const StateSet& o) const {
    return size_ == o.size_ && words_ == o.words_;
}

bool StateSet::is_subset_of(const StateSet& o) const {
    for (size_t i = 0; i < words_.size(); i++)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool StateSet::intersects(const StateSet& o) const {
    for (size_t i = 0; i < words_.size(); i++)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

StateSet StateSet::complement_within(const StateSet& universe) const {
    StateSet r(size_);
    for (size_t i = 0; i < words_.size(); i++) r.words_[i] = universe.words_[i] & ~words_[i];
    return r;
}

std::vector<uint32_t> StateSet::to_vector() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for_each([&](uint32_t s) { out.push_back(s); });
    return out;
}

} // namespace lcspg
