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

#include "lcspg/strategy.hpp"

#include <algorithm>

#include "lcspg/errors.hpp"

namespace lcspg {

Dfa receive_head_contents(const Sglcs& lcs, uint32_t chan, uint8_t msg) {
    const uint32_t k = lcs.channel_count();
    const uint32_t m = lcs.alphabet_size();
    RawDfa raw;
    raw.num_symbols = m + 1;
    auto id = [&](uint32_t i, uint32_t fresh) { return i * 2 + fresh; };
    for (uint32_t i = 0; i < 2 * k; i++) raw.add_state();
    for (uint32_t i = 0; i < k; i++) {
        // fresh marks the start of segment `chan`: the head must be `msg`
        for (uint32_t a = 0; a < m; a++) {
            raw.delta[id(i, 0)][a] = static_cast<int32_t>(id(i, 0));
            if (i == chan && a == msg) raw.delta[id(i, 1)][a] = static_cast<int32_t>(id(i, 0));
        }
        if (i + 1 < k) {
            raw.delta[id(i, 0)][m] = static_cast<int32_t>(id(i + 1, (i + 1 == chan) ? 1 : 0));
            // no separator while the head is still owed
        }
    }
    raw.accepting[id(k - 1, 0)] = true;
    raw.initial = id(0, (chan == 0) ? 1 : 0);
    return raw.canonicalize();
}

std::vector<std::string> validate_strategy(const Sglcs& lcs, const RegularStrategy& strat) {
    std::vector<std::string> violations;
    for (size_t i = 0; i < strat.rules.size(); i++) {
        const GuardedRule& gr = strat.rules[i];
        if (gr.rule_index >= lcs.rules().size()) {
            violations.push_back("rule " + std::to_string(i) + ": unknown system rule");
            continue;
        }
        const LcsRule& rule = lcs.rules()[gr.rule_index];
        if (lcs.control(rule.from).owner != strat.owner)
            violations.push_back("rule " + std::to_string(i) + ": control " +
                                 lcs.control(rule.from).name + " not owned by player " +
                                 std::to_string(strat.owner));
        if (gr.guard.is_empty_language())
            violations.push_back("rule " + std::to_string(i) + ": empty guard");
        if (rule.op == OpKind::Recv) {
            Dfa heads = receive_head_contents(lcs, rule.chan, rule.msg);
            if (!difference(gr.guard, heads).is_empty_language())
                violations.push_back("rule " + std::to_string(i) + ": head condition");
        }
    }
    for (size_t i = 0; i < strat.rules.size(); i++) {
        for (size_t j = i + 1; j < strat.rules.size(); j++) {
            if (strat.rules[i].rule_index >= lcs.rules().size() ||
                strat.rules[j].rule_index >= lcs.rules().size())
                continue;
            const LcsRule& a = lcs.rules()[strat.rules[i].rule_index];
            const LcsRule& b = lcs.rules()[strat.rules[j].rule_index];
            if (a.from != b.from) continue;
            if (!intersect(strat.rules[i].guard, strat.rules[j].guard).is_empty_language())
                violations.push_back(lcs.control(a.from).name + ": guards overlap");
        }
    }
    return violations;
}

RegularStrategy selection_strategy(const SglcsPtr& lcs, int player, const ConfigLanguage& from,
                                   const ConfigLanguage& into) {
    RegularStrategy strat;
    strat.owner = player;

    const uint32_t n_controls = lcs->control_count();
    std::vector<Dfa> covered(n_controls, Dfa::empty(lcs->alphabet_size() + 1));

    for (uint32_t ri = 0; ri < lcs->rules().size(); ri++) {
        const LcsRule& rule = lcs->rules()[ri];
        if (lcs->control(rule.from).owner != player) continue;
        Dfa candidates =
            intersect(pre_rule(into, ri).slot(rule.from, 1), from.slot(rule.from, 1));
        Dfa guard = difference(candidates, covered[rule.from]);
        if (guard.is_empty_language()) continue;
        covered[rule.from] = unite(covered[rule.from], guard);
        strat.rules.push_back({ri, std::move(guard)});
    }

    // domain must cover every player-owned member of `from` that has a
    // choice to make at all
    for (uint32_t c = 0; c < n_controls; c++) {
        if (lcs->control(c).owner != player) continue;
        Dfa required =
            difference(from.slot(c, 1), deadlocked_contents(*lcs, c));
        Dfa missing = difference(required, covered[c]);
        if (!missing.is_empty_language()) {
            Configuration witness =
                make_config(*lcs, c, 1, decode_contents(*lcs, *missing.shortest_word()));
            throw NoSelectionError("selection_strategy: no successor inside the target from " +
                                       format_config(*lcs, witness),
                                   witness);
        }
    }
    return strat;
}

RegularStrategy force_strategy_syn(const SglcsPtr& lcs, int player,
                                   const SymForceResult& force) {
    RegularStrategy strat;
    strat.owner = player;
    for (size_t i = 1; i < force.layers.size(); i++) {
        ConfigLanguage fresh = difference(force.layers[i], force.layers[i - 1]);
        RegularStrategy part = selection_strategy(lcs, player, fresh, force.layers[i - 1]);
        for (GuardedRule& gr : part.rules) strat.rules.push_back(std::move(gr));
    }
    return strat;
}

RegularStrategy avoid_strategy_syn(const SglcsPtr& lcs, int player, const ConfigLanguage& trap) {
    // trap for the opponent: sink-free, loss steps stay, opponent stays
    ConfigLanguage pre = pre_full(trap, PreMode::Pre);
    if (!difference(trap, pre).is_empty())
        throw NotATrapError("avoid_strategy_syn: set is not sink-free");
    ConfigLanguage dual = pre_full(trap, PreMode::DualPre);
    std::vector<std::pair<uint32_t, int>> loss_slots;
    for (uint32_t c = 0; c < lcs->control_count(); c++) loss_slots.emplace_back(c, 0);
    ConfigLanguage loss_part =
        intersect(trap, ConfigLanguage::from_slots(lcs, loss_slots));
    if (!difference(loss_part, dual).is_empty())
        throw NotATrapError("avoid_strategy_syn: loss steps can leave the set");
    ConfigLanguage opp_part = intersect(trap, owned_configs(lcs, 1 - player));
    if (!difference(opp_part, dual).is_empty())
        throw NotATrapError("avoid_strategy_syn: the opponent can leave the set");

    return selection_strategy(lcs, player, intersect(trap, owned_configs(lcs, player)), trap);
}

std::pair<RegularStrategy, RegularStrategy> parity_strategy_syn(const SglcsPtr& lcs,
                                                                const SymParityResult& result) {
    const int x = result.player;
    RegularStrategy winner;
    winner.owner = x;
    RegularStrategy loser;
    loser.owner = 1 - x;
    if (result.stages.empty()) return {std::move(winner), std::move(loser)};

    auto append = [](RegularStrategy& dst, RegularStrategy src) {
        for (GuardedRule& gr : src.rules) dst.rules.push_back(std::move(gr));
    };

    // opponent: per stage, the force toward the previous Y plus the
    // sub-game winner of that stage. A rank-0 sub-game has no structure
    // to steer by, but its winner still must not leave it: substitute a
    // stay-inside selection.
    std::pair<RegularStrategy, RegularStrategy> last_sub_pair;
    for (const SymParityStage& st : result.stages) {
        append(loser, force_strategy_syn(lcs, 1 - x, st.x_force));
        if (st.sub) {
            last_sub_pair = parity_strategy_syn(lcs, *st.sub);
            if (st.sub->rank == 0) {
                last_sub_pair.first = selection_strategy(
                    lcs, 1 - x, intersect(st.sub->universe, owned_configs(lcs, 1 - x)),
                    st.sub->universe);
            }
            append(loser, std::move(last_sub_pair.first));
        } else {
            last_sub_pair = {};
        }
    }

    // winner, on the final stage: play the sub-game, force toward the
    // top color inside Z, and stay inside c_set on top-color targets
    const SymParityStage& last = result.stages.back();
    if (last.sub) append(winner, std::move(last_sub_pair.second));
    append(winner, force_strategy_syn(lcs, x, last.z_force));
    ConfigLanguage top_targets = intersect(last.z_force.layers[0], owned_configs(lcs, x));
    append(winner, selection_strategy(lcs, x, top_targets, result.c_set));

    return {std::move(winner), std::move(loser)};
}

std::optional<Configuration> induced_step(const Sglcs& lcs, const RegularStrategy& strat,
                                          const Configuration& config) {
    if (config.bit != 1)
        throw PhaseMismatchError("induced_step: configuration is not in the player phase");
    std::string encoded = encode_contents(lcs, config.contents);
    for (const GuardedRule& gr : strat.rules) {
        const LcsRule& rule = lcs.rules()[gr.rule_index];
        if (rule.from != config.control) continue;
        if (gr.guard.accepts(encoded)) return apply_rule(lcs, rule, config);
    }
    return std::nullopt;
}

std::string strategy_summary(const Sglcs& lcs, const RegularStrategy& strat) {
    std::string out;
    for (const GuardedRule& gr : strat.rules) {
        const LcsRule& rule = lcs.rules()[gr.rule_index];
        out += lcs.control(rule.from).name;
        out += " [guard states=" + std::to_string(gr.guard.num_states()) + "] --";
        switch (rule.op) {
        case OpKind::Nop: out += "nop"; break;
        case OpKind::Send:
            out += lcs.channels()[rule.chan] + "!" + lcs.alphabet()[rule.msg];
            break;
        case OpKind::Recv:
            out += lcs.channels()[rule.chan] + "?" + lcs.alphabet()[rule.msg];
            break;
        }
        out += "--> " + lcs.control(rule.to).name + "\n";
    }
    return out;
}

RegularStrategy random_regular_strategy(const SglcsPtr& lcs, int player, uint64_t seed) {
    Rng rng(seed);
    RegularStrategy strat;
    strat.owner = player;
    Dfa universe = contents_universe(lcs->channel_count(), lcs->alphabet_size());
    for (uint32_t c = 0; c < lcs->control_count(); c++) {
        if (lcs->control(c).owner != player) continue;
        std::vector<uint32_t> order(lcs->rules_from(c));
        if (order.empty()) continue;
        for (size_t i = order.size(); i > 1; i--)
            std::swap(order[i - 1], order[rng.below(i)]);
        // drop a suffix sometimes; uncovered contents fall back to the
        // simulator's uniform completion
        size_t keep = 1 + rng.below(order.size());
        order.resize(keep);
        Dfa covered = Dfa::empty(lcs->alphabet_size() + 1);
        for (uint32_t ri : order) {
            const LcsRule& rule = lcs->rules()[ri];
            Dfa enabled_lang = rule.op == OpKind::Recv
                                   ? receive_head_contents(*lcs, rule.chan, rule.msg)
                                   : universe;
            Dfa guard = difference(enabled_lang, covered);
            if (guard.is_empty_language()) continue;
            covered = unite(covered, guard);
            strat.rules.push_back({ri, std::move(guard)});
        }
    }
    return strat;
}

} // namespace lcspg
