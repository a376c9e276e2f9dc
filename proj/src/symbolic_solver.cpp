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

#include "lcspg/symbolic_solver.hpp"

#include <cassert>
#include <stdexcept>

#include "lcspg/errors.hpp"

namespace lcspg {

namespace {

uint32_t effective_ceiling(const Sglcs& lcs, const SolverOptions& opts) {
    return opts.ceiling ? opts.ceiling : 10 * lcs.control_count() * 2;
}

void trace_line(const SolverOptions& opts, std::string line) {
    if (opts.trace) opts.trace->push_back(std::move(line));
}

ConfigLanguage loss_phase_configs(const SglcsPtr& lcs) {
    std::vector<std::pair<uint32_t, int>> slots;
    for (uint32_t c = 0; c < lcs->control_count(); c++) slots.emplace_back(c, 0);
    return ConfigLanguage::from_slots(lcs, slots);
}

/// restrict_to must keep a successor for every member and must not let
/// loss steps escape; this is the sub-game well-formedness condition
void check_closable(const SglcsPtr& lcs, const ConfigLanguage& restrict_to) {
    ConfigLanguage universe = ConfigLanguage::universe(lcs);
    if (restrict_to == universe) return; // total game, always closable
    ConfigLanguage pre = pre_full(restrict_to, PreMode::Pre);
    if (!difference(restrict_to, pre).is_empty())
        throw NotClosableError("sym_force: restriction is not sink-free");
    ConfigLanguage dual = pre_full(restrict_to, PreMode::DualPre);
    ConfigLanguage random_part = intersect(restrict_to, loss_phase_configs(lcs));
    if (!difference(random_part, dual).is_empty())
        throw NotClosableError("sym_force: loss steps can leave the restriction");
}

} // namespace

ConfigLanguage owned_configs(const SglcsPtr& lcs, int player) {
    std::vector<std::pair<uint32_t, int>> slots;
    for (uint32_t c = 0; c < lcs->control_count(); c++)
        if (lcs->control(c).owner == player) slots.emplace_back(c, 1);
    return ConfigLanguage::from_slots(lcs, slots);
}

ConfigLanguage color_configs(const SglcsPtr& lcs, uint32_t color) {
    std::vector<std::pair<uint32_t, int>> slots;
    for (uint32_t c = 0; c < lcs->control_count(); c++)
        if (lcs->control(c).color == color) {
            slots.emplace_back(c, 0);
            slots.emplace_back(c, 1);
        }
    return ConfigLanguage::from_slots(lcs, slots);
}

SymForceResult sym_force(const SglcsPtr& lcs, int player, const ConfigLanguage& target,
                         const ConfigLanguage& restrict_to, const SolverOptions& opts) {
    if (!difference(target, restrict_to).is_empty())
        throw std::invalid_argument("sym_force: target must lie inside the restriction");
    check_closable(lcs, restrict_to);

    const uint32_t ceiling = effective_ceiling(*lcs, opts);
    ConfigLanguage random_mask = loss_phase_configs(lcs);
    ConfigLanguage mine = owned_configs(lcs, player);
    ConfigLanguage theirs = owned_configs(lcs, 1 - player);

    SymForceResult res;
    res.player = player;
    res.layers.push_back(target);

    ConfigLanguage reach = target;
    for (;;) {
        ConfigLanguage pre = pre_full(reach, PreMode::Pre, &restrict_to);
        ConfigLanguage dual = pre_full(reach, PreMode::DualPre, &restrict_to);
        ConfigLanguage next = unite(reach, intersect(pre, random_mask));
        next = unite(next, intersect(pre, mine));
        next = unite(next, intersect(dual, theirs));
        if (next == reach) break;
        reach = std::move(next);
        res.layers.push_back(reach);
        trace_line(opts, "force p" + std::to_string(player) + " stage " +
                             std::to_string(res.layers.size() - 1) +
                             ": states=" + std::to_string(reach.total_states()));
        if (res.layers.size() > ceiling)
            throw CeilingExceededError("sym_force: iteration ceiling of " +
                                       std::to_string(ceiling) + " stages exceeded");
    }
    res.force_set = reach;
    res.avoid_set = difference(restrict_to, reach);
    return res;
}

namespace {

SymParityResult parity_in(const SglcsPtr& lcs, uint32_t rank, const ConfigLanguage& universe,
                          const SolverOptions& opts) {
    SymParityResult res;
    res.rank = static_cast<int>(rank);
    res.player = static_cast<int>(rank % 2);
    res.universe = universe;
    if (rank == 0 || universe.is_empty()) {
        res.c_set = universe;
        return res;
    }

    const int x = res.player;
    const uint32_t ceiling = effective_ceiling(*lcs, opts);
    ConfigLanguage color_top = color_configs(lcs, rank);

    ConfigLanguage y_union = ConfigLanguage::empty(lcs);
    ConfigLanguage prev_x;
    bool have_prev = false;

    for (;;) {
        SymForceResult xf = sym_force(lcs, 1 - x, y_union, universe, opts);
        if (have_prev && xf.force_set == prev_x) break;
        prev_x = xf.force_set;
        have_prev = true;

        SymParityStage stage;
        stage.x_set = xf.force_set;
        stage.x_force = std::move(xf);

        ConfigLanguage below_x = difference(universe, stage.x_set);
        SymForceResult zf =
            sym_force(lcs, x, intersect(below_x, color_top), below_x, opts);
        stage.z_set = zf.force_set;
        stage.z_force = std::move(zf);

        ConfigLanguage below_z = difference(below_x, stage.z_set);
        if (below_z.is_empty()) {
            stage.sub = nullptr;
            stage.y_set = stage.x_set;
        } else {
            stage.sub = std::make_unique<SymParityResult>(
                parity_in(lcs, rank - 1, below_z, opts));
            stage.y_set = unite(stage.x_set, stage.sub->c_set);
        }
        y_union = stage.y_set;
        res.stages.push_back(std::move(stage));
        trace_line(opts, "parity r" + std::to_string(rank) + " stage " +
                             std::to_string(res.stages.size() - 1) + ": X=" +
                             std::to_string(res.stages.back().x_set.total_states()) + " Z=" +
                             std::to_string(res.stages.back().z_set.total_states()) + " Y=" +
                             std::to_string(res.stages.back().y_set.total_states()));
        if (res.stages.size() > ceiling)
            throw CeilingExceededError("sym_parity: iteration ceiling of " +
                                       std::to_string(ceiling) + " stages exceeded");
    }
    res.c_set = difference(universe, prev_x);
    return res;
}

} // namespace

SymParityResult sym_parity(const SglcsPtr& lcs, uint32_t rank, const SolverOptions& opts) {
    return parity_in(lcs, rank, ConfigLanguage::universe(lcs), opts);
}

SymReport sym_report(const SglcsPtr& lcs, const SolverOptions& opts) {
    const uint32_t nmax = lcs->max_color();
    SymReport rep;
    rep.run_low = sym_parity(lcs, nmax, opts);
    rep.run_high = sym_parity(lcs, nmax + 1, opts);
    const int x = static_cast<int>(nmax % 2);
    ConfigLanguage universe = ConfigLanguage::universe(lcs);
    rep.as_region[x] = rep.run_low.c_set;
    rep.as_region[1 - x] = rep.run_high.c_set;
    rep.wpp_region[x] = difference(universe, rep.run_high.c_set);
    rep.wpp_region[1 - x] = difference(universe, rep.run_low.c_set);
    return rep;
}

} // namespace lcspg
