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

#include "lcspg/finite_solver.hpp"

#include <cassert>

namespace lcspg {

namespace {

/// lowest-id successor of s inside q; the fixed tie-break for all selections
uint32_t select_successor(const ExplicitGame& game, uint32_t s, const StateSet& q) {
    uint32_t best = kNoChoice;
    for (uint32_t t : game.successors(s))
        if (q.test(t) && t < best) best = t;
    assert(best != kNoChoice);
    return best;
}

} // namespace

ForceResult force(const ExplicitGame& game, int player, const StateSet& target) {
    const uint32_t n = game.size();
    ForceResult r;
    r.layer.assign(n, kNoLayer);
    r.force_strategy.assign(n, kNoChoice);
    r.avoid_strategy.assign(n, kNoChoice);

    StateSet reach = target;
    reach &= game.present();
    reach.for_each([&](uint32_t s) { r.layer[s] = 0; });

    const Owner mine = player_owner(player);
    const Owner theirs = player_owner(1 - player);

    uint32_t stage = 0;
    for (;;) {
        stage++;
        PreSets p = pre_sets(game, reach);
        StateSet next = reach;
        game.present().for_each([&](uint32_t s) {
            if (next.test(s)) return;
            Owner o = game.owner(s);
            bool add = (o == Owner::Random || o == mine) ? p.pre.test(s) : p.dual_pre.test(s);
            if (add) {
                next.set(s);
                r.layer[s] = stage;
            }
        });
        if (next == reach) break;
        reach = next;
    }

    r.force_set = reach;
    r.avoid_set = reach.complement_within(game.present());

    // force strategy: one layer down, lowest id among eligible successors
    std::vector<StateSet> cumulative; // R_0 .. R_max rebuilt from layers
    r.force_set.for_each([&](uint32_t s) {
        if (game.owner(s) != mine) return;
        uint32_t l = r.layer[s];
        if (l == 0) return;
        StateSet lower(n);
        for (uint32_t t : game.successors(s))
            if (r.layer[t] != kNoLayer && r.layer[t] <= l - 1) lower.set(t);
        r.force_strategy[s] = select_successor(game, s, lower);
    });

    // avoid strategy: the opponent stays inside the trap
    r.avoid_set.for_each([&](uint32_t s) {
        if (game.owner(s) != theirs) return;
        r.avoid_strategy[s] = select_successor(game, s, r.avoid_set);
    });
    return r;
}

namespace {

/// copies choices from src into dst without overwriting earlier ones
void merge_strategy(std::vector<uint32_t>& dst, const std::vector<uint32_t>& src) {
    for (size_t s = 0; s < src.size(); s++)
        if (src[s] != kNoChoice && dst[s] == kNoChoice) dst[s] = src[s];
}

ParityResult parity_rec(const ExplicitGame& game, uint32_t rank) {
    const uint32_t n = game.size();
    ParityResult res;
    res.rank = static_cast<int>(rank);
    res.player = static_cast<int>(rank % 2);
    res.strategy_x.assign(n, kNoChoice);
    res.strategy_y.assign(n, kNoChoice);

    if (rank == 0 || game.present().empty()) {
        res.c_set = game.present();
        // the base-case winner still has to stay inside this sub-game;
        // any in-game selection does (only color 0 occurs here)
        res.c_set.for_each([&](uint32_t s) {
            if (game.owner(s) == Owner::P0) res.strategy_x[s] = select_successor(game, s, res.c_set);
        });
        return res;
    }

    const int x = res.player;
    StateSet y_union = game.empty_set();
    StateSet prev_x(0);
    bool have_prev = false;

    for (;;) {
        ForceResult xf = force(game, 1 - x, y_union);
        if (have_prev && xf.force_set == prev_x) break;
        prev_x = xf.force_set;
        have_prev = true;

        ParityStage stage;
        stage.x_set = xf.force_set;
        stage.x_force = std::move(xf);

        if (stage.x_set == game.present()) {
            // degenerate: nothing is left below X
            stage.z_set = game.empty_set();
            stage.z_force.force_set = game.empty_set();
            stage.z_force.avoid_set = game.empty_set();
            stage.z_force.layer.assign(n, kNoLayer);
            stage.z_force.force_strategy.assign(n, kNoChoice);
            stage.z_force.avoid_strategy.assign(n, kNoChoice);
            stage.y_set = stage.x_set;
            y_union = stage.y_set;
            res.stages.push_back(std::move(stage));
            continue;
        }

        ExplicitGame sub1 =
            stage.x_set.empty() ? game : game.restrict(stage.x_set);
        StateSet color_target = sub1.states_with_color(rank);
        ForceResult zf = force(sub1, x, color_target);
        stage.z_set = zf.force_set;
        stage.z_force = std::move(zf);

        StateSet kept2 = stage.z_set.complement_within(sub1.present());
        if (kept2.empty()) {
            stage.sub = nullptr;
            stage.y_set = stage.x_set;
        } else {
            ExplicitGame sub2 = stage.z_set.empty() ? sub1 : sub1.restrict(stage.z_set);
            stage.sub =
                std::make_unique<ParityResult>(parity_rec(sub2, rank - 1));
            stage.y_set = stage.x_set | stage.sub->c_set;
        }
        y_union = stage.y_set;
        res.stages.push_back(std::move(stage));
    }

    const StateSet& x_final = prev_x;
    res.c_set = x_final.complement_within(game.present());

    // winner strategy, assembled on the final stage:
    // inside the rank-color slice force toward rank colors, on rank-color
    // states stay inside c_set, elsewhere play the sub-game strategy.
    const ParityStage& last = res.stages.back();
    if (last.sub) merge_strategy(res.strategy_x, last.sub->strategy_y);
    merge_strategy(res.strategy_x, last.z_force.force_strategy);
    res.c_set.for_each([&](uint32_t s) {
        if (game.owner(s) != player_owner(x)) return;
        if (!last.z_set.test(s)) return;
        if (last.z_force.layer[s] != 0) return; // only the color-rank targets
        res.strategy_x[s] = select_successor(game, s, res.c_set);
    });

    // opponent strategy: per stage, force toward the previous Y plus the
    // sub-game winner strategy of that stage
    for (const ParityStage& st : res.stages) {
        merge_strategy(res.strategy_y, st.x_force.force_strategy);
        if (st.sub) merge_strategy(res.strategy_y, st.sub->strategy_x);
    }
    return res;
}

} // namespace

ParityResult parity_as(const ExplicitGame& game, uint32_t rank) {
    return parity_rec(game, rank);
}

WinningReport winning_report(const ExplicitGame& game) {
    const uint32_t nmax = game.max_color();
    WinningReport rep{{game.empty_set(), game.empty_set()},
                      {game.empty_set(), game.empty_set()},
                      {},
                      {}};
    rep.run_low = parity_as(game, nmax);
    rep.run_high = parity_as(game, nmax + 1);
    const int x = static_cast<int>(nmax % 2);
    rep.as_region[x] = rep.run_low.c_set;
    rep.as_region[1 - x] = rep.run_high.c_set;
    rep.wpp_region[x] = rep.run_high.c_set.complement_within(game.present());
    rep.wpp_region[1 - x] = rep.run_low.c_set.complement_within(game.present());
    return rep;
}

} // namespace lcspg
