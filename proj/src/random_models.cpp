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

#include "lcspg/random_models.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace lcspg {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

uint64_t split_seed(uint64_t master, uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

uint64_t Rng::next() {
    // xorshift* keeps the generator header-light and reproducible
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
}

uint64_t Rng::below(uint64_t bound) { return bound ? next() % bound : 0; }

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

ExplicitGame random_game(const RandomGameParams& params, uint64_t seed) {
    Rng rng(seed);
    ExplicitGameBuilder b;
    const uint32_t n = std::max<uint32_t>(params.states, 1);
    for (uint32_t s = 0; s < n; s++) {
        Owner o;
        if (rng.unit() < params.random_fraction) o = Owner::Random;
        else o = rng.below(2) ? Owner::P1 : Owner::P0;
        b.add_state(o, static_cast<uint32_t>(rng.below(params.max_color + 1)));
    }
    for (uint32_t s = 0; s < n; s++) {
        uint32_t deg = 1 + static_cast<uint32_t>(rng.below(params.max_out_degree));
        std::set<uint32_t> targets;
        while (targets.size() < deg && targets.size() < n)
            targets.insert(static_cast<uint32_t>(rng.below(n)));
        std::vector<uint32_t> succ(targets.begin(), targets.end());
        // owner generated above; probabilities only matter for Random rows
        double remaining = 1.0;
        for (size_t i = 0; i < succ.size(); i++) {
            double p;
            if (i + 1 == succ.size()) {
                p = remaining;
            } else {
                p = remaining * (0.2 + 0.6 * rng.unit()) / static_cast<double>(succ.size() - i);
                remaining -= p;
            }
            b.add_edge(s, succ[i], p);
        }
    }
    return b.build();
}

} // namespace lcspg
