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

#ifndef LCSPG_SYMBOLIC_SOLVER_HPP
#define LCSPG_SYMBOLIC_SOLVER_HPP

#include <memory>
#include <string>
#include <vector>

#include "lcspg/config_language.hpp"

namespace lcspg {

struct SolverOptions {
    /// max stages per fixpoint loop; 0 selects 10 * controls * 2.
    /// Exceeding the ceiling throws CeilingExceededError, never truncates.
    uint32_t ceiling = 0;
    /// when set, one line per fixpoint stage is appended (sizes of the
    /// canonical automata) for regression diffing
    std::vector<std::string>* trace = nullptr;
};

/**
 * Stabilized reachability fixpoint over configuration languages.
 * layers holds the strictly growing chain R_0 = target up to the
 * fixpoint R_j; avoid_set complements the force set inside the
 * restriction.
 */
struct SymForceResult {
    int player = 0;
    std::vector<ConfigLanguage> layers;
    ConfigLanguage force_set;
    ConfigLanguage avoid_set;
};

/**
 * target must lie inside restrict_to, and restrict_to must be a
 * closable sub-game universe (checked symbolically; NotClosableError
 * otherwise).
 */
SymForceResult sym_force(const SglcsPtr& lcs, int player, const ConfigLanguage& target,
                         const ConfigLanguage& restrict_to, const SolverOptions& opts = {});

struct SymParityResult;

struct SymParityStage {
    ConfigLanguage x_set, z_set, y_set;
    SymForceResult x_force, z_force;
    std::unique_ptr<SymParityResult> sub;
};

struct SymParityResult {
    int rank = 0;
    int player = 0; // rank mod 2
    ConfigLanguage universe;
    ConfigLanguage c_set;
    std::vector<SymParityStage> stages;
};

SymParityResult sym_parity(const SglcsPtr& lcs, uint32_t rank, const SolverOptions& opts = {});

/// the four regions; as_region[p] and wpp_region[1-p] partition the universe
struct SymReport {
    ConfigLanguage as_region[2];
    ConfigLanguage wpp_region[2];
    SymParityResult run_low;
    SymParityResult run_high;
};

SymReport sym_report(const SglcsPtr& lcs, const SolverOptions& opts = {});

/// bit-1 slots of the controls owned by `player`
ConfigLanguage owned_configs(const SglcsPtr& lcs, int player);
/// both bits of the controls with the given color
ConfigLanguage color_configs(const SglcsPtr& lcs, uint32_t color);

} // namespace lcspg

#endif // LCSPG_SYMBOLIC_SOLVER_HPP
