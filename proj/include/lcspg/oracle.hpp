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

#ifndef LCSPG_ORACLE_HPP
#define LCSPG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lcspg/explicit_game.hpp"
#include "lcspg/finite_solver.hpp"

namespace lcspg {

/**
 * The finite transition system induced by a pair of memoryless
 * strategies: owned states follow the strategy choice, random states
 * keep the support of their distribution. Partial strategies are
 * completed with the lowest-id successor before the chain is built.
 */
struct InducedChain {
    StateSet nodes; // states reachable from the start
    std::vector<std::vector<uint32_t>> edges;
};

InducedChain build_induced_chain(const ExplicitGame& game, std::vector<uint32_t> strat0,
                                 std::vector<uint32_t> strat1, uint32_t start);

struct McVerdict {
    int as_win_player;  // 0, 1, or -1 when neither wins almost surely
    bool wpp[2];        // player wins with positive probability
};

/**
 * Qualitative classification of the chain induced by two memoryless
 * strategies: a player wins almost surely iff every reachable bottom
 * SCC has their parity as its maximal color, and with positive
 * probability iff some does. No numeric probability is computed.
 */
McVerdict qualitative_mc_check(const ExplicitGame& game, const std::vector<uint32_t>& strat0,
                               const std::vector<uint32_t>& strat1, uint32_t start);

struct ZielonkaResult {
    StateSet winning[2];
    std::vector<uint32_t> strategy[2];
};

/**
 * Classical recursion for 2-player (non-stochastic) parity games;
 * throws HasRandomStatesError when the game has random states.
 * Used purely as a reference implementation.
 */
ZielonkaResult zielonka(const ExplicitGame& game);

struct EnumWitness {
    uint32_t state;
    std::vector<uint32_t> strat_x;                // total strategy of the checked player
    std::optional<std::vector<uint32_t>> strat_y; // refuting opponent, when one exists
};

struct EnumVerdict {
    bool confirmed;
    std::optional<EnumWitness> witness;
};

/**
 * Exhaustive check that `claimed` is exactly the set of states from
 * which some memoryless strategy of `player` wins almost surely
 * against every memoryless opponent. Enumerates all strategy profiles;
 * throws TooLargeError beyond 10^6 profiles.
 */
EnumVerdict enumerate_verify(const ExplicitGame& game, int player, const StateSet& claimed);

/// serial reference for the profile enumeration (same contract)
EnumVerdict enumerate_verify_serial(const ExplicitGame& game, int player,
                                    const StateSet& claimed);

} // namespace lcspg

#endif // LCSPG_ORACLE_HPP
