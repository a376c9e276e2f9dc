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

#include "lcspg/explicit_game.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lcspg/errors.hpp"

namespace lcspg {

uint32_t ExplicitGame::max_color() const {
    uint32_t m = 0;
    present_.for_each([&](uint32_t s) { m = std::max(m, color_[s]); });
    return m;
}

StateSet ExplicitGame::owned_by(int player) const {
    StateSet r(size_);
    present_.for_each([&](uint32_t s) {
        if (owner_[s] == player_owner(player)) r.set(s);
    });
    return r;
}

StateSet ExplicitGame::random_states() const {
    StateSet r(size_);
    present_.for_each([&](uint32_t s) {
        if (owner_[s] == Owner::Random) r.set(s);
    });
    return r;
}

StateSet ExplicitGame::states_with_color(uint32_t c) const {
    StateSet r(size_);
    present_.for_each([&](uint32_t s) {
        if (color_[s] == c) r.set(s);
    });
    return r;
}

std::vector<std::string> ExplicitGame::validate() const {
    std::vector<std::string> violations;
    present_.for_each([&](uint32_t s) {
        auto succ = successors(s);
        if (succ.empty()) {
            violations.push_back("state " + std::to_string(s) + ": no successor");
            return;
        }
        for (uint32_t t : succ) {
            if (t >= size_ || !present_.test(t))
                violations.push_back("state " + std::to_string(s) + ": successor " +
                                     std::to_string(t) + " not in game");
        }
        if (owner_[s] == Owner::Random) {
            double sum = 0.0;
            auto probs = probabilities(s);
            for (size_t i = 0; i < succ.size(); i++) {
                if (probs[i] <= 0.0 || probs[i] > 1.0)
                    violations.push_back("state " + std::to_string(s) + ": prob " +
                                         std::to_string(probs[i]) + " out of (0,1]");
                sum += probs[i];
            }
            if (std::abs(sum - 1.0) > 1e-12) {
                std::ostringstream os;
                os << "state " << s << ": prob sum " << sum;
                violations.push_back(os.str());
            }
        }
    });
    return violations;
}

ExplicitGame ExplicitGame::restrict(const StateSet& removed) const {
    StateSet kept = removed.complement_within(present_);
    if (kept.empty()) throw NotClosableError("restrict: kept state set is empty");
    SetFlags flags = classify_set(*this, kept, 0);
    if (!flags.closable) throw NotClosableError("restrict: kept state set is not closable");

    ExplicitGame g;
    g.size_ = size_;
    g.present_ = kept;
    g.owner_ = owner_;
    g.color_ = color_;
    g.succ_off_.assign(size_ + 1, 0);
    g.succ_.reserve(succ_.size());
    g.prob_.reserve(prob_.size());
    for (uint32_t s = 0; s < size_; s++) {
        g.succ_off_[s] = static_cast<uint32_t>(g.succ_.size());
        if (kept.test(s)) {
            auto succ = successors(s);
            auto probs = probabilities(s);
            for (size_t i = 0; i < succ.size(); i++) {
                if (kept.test(succ[i])) {
                    g.succ_.push_back(succ[i]);
                    g.prob_.push_back(probs[i]);
                }
            }
        }
    }
    g.succ_off_[size_] = static_cast<uint32_t>(g.succ_.size());
    return g;
}

bool ExplicitGame::structurally_equal(const ExplicitGame& o) const {
    if (size_ != o.size_ || !(present_ == o.present_)) return false;
    if (owner_ != o.owner_ || color_ != o.color_) return false;
    for (uint32_t s = 0; s < size_; s++) {
        if (!present_.test(s)) continue;
        auto a = successors(s), b = o.successors(s);
        if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
        auto pa = probabilities(s), pb = o.probabilities(s);
        if (!std::equal(pa.begin(), pa.end(), pb.begin(), pb.end())) return false;
    }
    return true;
}

uint32_t ExplicitGameBuilder::add_state(Owner owner, uint32_t color) {
    owner_.push_back(owner);
    color_.push_back(color);
    return static_cast<uint32_t>(owner_.size() - 1);
}

void ExplicitGameBuilder::add_edge(uint32_t from, uint32_t to, double prob) {
    edges_.push_back({from, to, prob});
}

ExplicitGame ExplicitGameBuilder::build() const {
    uint32_t n = static_cast<uint32_t>(owner_.size());
    ExplicitGame g;
    g.size_ = n;
    g.present_ = StateSet(n);
    for (uint32_t s = 0; s < n; s++) g.present_.set(s);
    g.owner_ = owner_;
    g.color_ = color_;
    g.succ_off_.assign(n + 1, 0);
    for (const auto& e : edges_) g.succ_off_[e.from + 1]++;
    for (uint32_t s = 0; s < n; s++) g.succ_off_[s + 1] += g.succ_off_[s];
    g.succ_.resize(edges_.size());
    g.prob_.resize(edges_.size());
    std::vector<uint32_t> fill(g.succ_off_.begin(), g.succ_off_.end() - 1);
    for (const auto& e : edges_) {
        uint32_t pos = fill[e.from]++;
        g.succ_[pos] = e.to;
        g.prob_[pos] = e.prob;
    }
    return g;
}

PreSets pre_sets_serial(const ExplicitGame& game, const StateSet& q) {
    PreSets r{game.empty_set(), game.empty_set()};
    game.present().for_each([&](uint32_t s) {
        bool some = false, all = true;
        for (uint32_t t : game.successors(s)) {
            if (q.test(t)) some = true;
            else all = false;
        }
        if (some) r.pre.set(s);
        if (all) r.dual_pre.set(s);
    });
    return r;
}

PreSets pre_sets(const ExplicitGame& game, const StateSet& q) {
    const size_t n = game.size();
    if (n < 4096) return pre_sets_serial(game, q);

    PreSets r{game.empty_set(), game.empty_set()};
    const uint64_t* pres = game.present().words();
    uint64_t* pw = r.pre.words();
    uint64_t* dw = r.dual_pre.words();
    const int64_t words = static_cast<int64_t>(r.pre.word_count());
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t w = 0; w < words; w++) {
        uint64_t bits = pres[w];
        uint64_t pre_word = 0, dual_word = 0;
        while (bits) {
            uint32_t b = static_cast<uint32_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            uint32_t s = static_cast<uint32_t>(w * 64 + b);
            bool some = false, all = true;
            for (uint32_t t : game.successors(s)) {
                if (q.test(t)) some = true;
                else all = false;
                if (some && !all) break;
            }
            if (some) pre_word |= uint64_t(1) << b;
            if (all) dual_word |= uint64_t(1) << b;
        }
        pw[w] = pre_word;
        dw[w] = dual_word;
    }
    return r;
}

SetFlags classify_set(const ExplicitGame& game, const StateSet& q, int player) {
    SetFlags flags{true, true, true};
    q.for_each([&](uint32_t s) {
        if (!game.has_successor_in(s, q)) flags.sink_free = false;
        if (game.owner(s) == Owner::Random && !game.all_successors_in(s, q))
            flags.closable = false;
        if (game.owner(s) == player_owner(player) && !game.all_successors_in(s, q))
            flags.is_trap_for_player = false;
    });
    flags.closable = flags.closable && flags.sink_free;
    flags.is_trap_for_player = flags.is_trap_for_player && flags.closable;
    return flags;
}

} // namespace lcspg
