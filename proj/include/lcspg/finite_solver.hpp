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

#ifndef LCSPG_FINITE_SOLVER_HPP
#define LCSPG_FINITE_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "lcspg/explicit_game.hpp"

namespace lcspg {

/// sentinel for "no strategy choice at this state"
constexpr uint32_t kNoChoice = UINT32_MAX;
/// sentinel layer for states outside the force set
constexpr uint32_t kNoLayer = UINT32_MAX;

/**
 * Result of the positive-probability reachability fixpoint.
 *
 * force_set and avoid_set partition the present states. layer[s] is the
 * first fixpoint stage where s joined the force set (0 on the target);
 * force_strategy maps the forcing player's states to a successor one
 * layer down, avoid_strategy maps the opponent's states inside the
 * avoid set (a trap for the forcing player) to a successor that stays.
 */
struct ForceResult {
    StateSet force_set;
    StateSet avoid_set;
    std::vector<uint32_t> layer;
    std::vector<uint32_t> force_strategy;
    std::vector<uint32_t> avoid_strategy;
};

ForceResult force(const ExplicitGame& game, int player, const StateSet& target);

struct ParityResult;

struct ParityStage {
    StateSet x_set, z_set, y_set;
    ForceResult x_force, z_force;
    std::unique_ptr<ParityResult> sub; // solved sub-game below the Z slice
};

/**
 * Winning set of the rank-parity player, with memoryless strategies.
 *
 * player = rank mod 2. c_set is where that player wins almost surely;
 * strategy_x covers their states inside c_set, strategy_y covers the
 * opponent's states outside it (winning with positive probability).
 * stages records the per-iteration X/Z/Y slices for inspection.
 */
struct ParityResult {
    int rank = 0;
    int player = 0;
    StateSet c_set;
    std::vector<uint32_t> strategy_x;
    std::vector<uint32_t> strategy_y;
    std::vector<ParityStage> stages;
};

ParityResult parity_as(const ExplicitGame& game, uint32_t rank);

/**
 * The four qualitative winning regions. as_region[p] is where player p
 * wins almost surely, wpp_region[p] where p wins with positive
 * probability; as_region[p] and wpp_region[1-p] partition the states.
 */
struct WinningReport {
    StateSet as_region[2];
    StateSet wpp_region[2];
    ParityResult run_low;  // recursion at the maximal occurring color
    ParityResult run_high; // recursion one rank above
};

WinningReport winning_report(const ExplicitGame& game);

} // namespace lcspg

#endif // LCSPG_FINITE_SOLVER_HPP
