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

#ifndef LCSPG_STRATEGY_HPP
#define LCSPG_STRATEGY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcspg/config_language.hpp"
#include "lcspg/symbolic_solver.hpp"

namespace lcspg {

/**
 * One guarded rule: play lcs.rules()[rule_index] whenever the channel
 * contents (in the separator encoding) match the guard. For a receive
 * rule the guard only admits contents with the message at the head.
 */
struct GuardedRule {
    uint32_t rule_index;
    Dfa guard;
};

/**
 * A finite list of guarded rules with pairwise disjoint guards per
 * control; the finite description of a memoryless strategy on the
 * infinite configuration space.
 */
struct RegularStrategy {
    int owner = 0;
    std::vector<GuardedRule> rules;
};

struct NoSelectionError : std::runtime_error {
    Configuration witness;
    NoSelectionError(const std::string& what, Configuration w)
        : std::runtime_error(what), witness(std::move(w)) {}
};

/// contents at `control` whose channel `chan` starts with `msg`
Dfa receive_head_contents(const Sglcs& lcs, uint32_t chan, uint8_t msg);

/// empty iff the strategy is well-formed for this system
std::vector<std::string> validate_strategy(const Sglcs& lcs, const RegularStrategy& strat);

/**
 * A regular strategy whose induced map sends every player-owned
 * member of `from` (bit 1) to a successor in `into`. Configurations
 * with no enabled rule are excluded: their single completion move is
 * forced and needs no guard. Throws NoSelectionError with a witness
 * when some config has no rule into `into`.
 */
RegularStrategy selection_strategy(const SglcsPtr& lcs, int player, const ConfigLanguage& from,
                                   const ConfigLanguage& into);

/// per-layer selections of the force fixpoint, one layer down each step
RegularStrategy force_strategy_syn(const SglcsPtr& lcs, int player, const SymForceResult& force);

/// keeps every induced step inside the trap; NotATrapError when the set
/// is not a trap for the opponent
RegularStrategy avoid_strategy_syn(const SglcsPtr& lcs, int player, const ConfigLanguage& trap);

/**
 * Strategies extracted from a solved parity recursion: first the
 * winning player's almost-sure strategy on c_set, then the opponent's
 * positive-probability strategy on the complement.
 */
std::pair<RegularStrategy, RegularStrategy> parity_strategy_syn(const SglcsPtr& lcs,
                                                                const SymParityResult& result);

/// applies the unique matching guarded rule; empty when none matches
std::optional<Configuration> induced_step(const Sglcs& lcs, const RegularStrategy& strat,
                                          const Configuration& config);

/// one line per rule: control, guard size, operation, target
std::string strategy_summary(const Sglcs& lcs, const RegularStrategy& strat);

/// random total-on-enabled strategy; used as a stress opponent
RegularStrategy random_regular_strategy(const SglcsPtr& lcs, int player, uint64_t seed);

} // namespace lcspg

#endif // LCSPG_STRATEGY_HPP
