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

#ifndef LCSPG_RANDOM_MODELS_HPP
#define LCSPG_RANDOM_MODELS_HPP

#include <cstdint>

#include "lcspg/explicit_game.hpp"

namespace lcspg {

/// split a master seed into independent per-task seeds
uint64_t split_seed(uint64_t master, uint64_t index);

/**
 * Small deterministic generator used everywhere randomness is needed;
 * hand-rolled (xorshift*) so results do not depend on the standard
 * library's distribution code.
 */
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next();
    /// uniform in [0, bound)
    uint64_t below(uint64_t bound);
    /// uniform in [0, 1)
    double unit();

private:
    uint64_t state_;
};

struct RandomGameParams {
    uint32_t states = 10;
    uint32_t max_out_degree = 3;
    uint32_t max_color = 2;
    /// probability that a state is a Random state (0 for 2-player games)
    double random_fraction = 0.3;
};

/// always yields a validated game (sink-free, normalized distributions)
ExplicitGame random_game(const RandomGameParams& params, uint64_t seed);

} // namespace lcspg

#endif // LCSPG_RANDOM_MODELS_HPP
