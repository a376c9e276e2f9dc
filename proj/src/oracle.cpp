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

#include "lcspg/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "lcspg/errors.hpp"

namespace lcspg {

namespace {

/// completes a partial memoryless strategy with lowest-id successors
void complete_strategy(const ExplicitGame& game, int player, std::vector<uint32_t>& strat) {
    strat.resize(game.size(), kNoChoice);
    game.present().for_each([&](uint32_t s) {
        if (game.owner(s) != player_owner(player)) return;
        if (strat[s] != kNoChoice && game.is_present(strat[s])) return;
        uint32_t best = kNoChoice;
        for (uint32_t t : game.successors(s)) best = std::min(best, t);
        strat[s] = best;
    });
}

struct ChainView {
    const ExplicitGame* game;
    const std::vector<uint32_t>* strat0;
    const std::vector<uint32_t>* strat1;

    size_t degree(uint32_t s) const {
        return game->owner(s) == Owner::Random ? game->successors(s).size() : 1;
    }
    uint32_t target(uint32_t s, size_t i) const {
        switch (game->owner(s)) {
        case Owner::P0: return (*strat0)[s];
        case Owner::P1: return (*strat1)[s];
        default: return game->successors(s)[i];
        }
    }
};

/**
 * Iterative Tarjan over the chain, restricted to states reachable from
 * `start` (or all present states when start == kNoChoice). Components
 * are finished in reverse topological order, so the reachable-parity
 * mask of a component can be folded from its successors on the spot.
 * Returns per-state masks: bit p set iff a bottom SCC of parity p is
 * reachable.
 */
std::vector<uint8_t> chain_parity_masks(const ChainView& cv, uint32_t start) {
    const ExplicitGame& game = *cv.game;
    const uint32_t n = game.size();
    std::vector<uint8_t> mask(n, 0);

    StateSet roots(n);
    if (start == kNoChoice) {
        roots = game.present();
    } else {
        roots.set(start);
    }

    constexpr uint32_t kUnvisited = UINT32_MAX;
    std::vector<uint32_t> index(n, kUnvisited), low(n, 0), comp_id(n, kUnvisited);
    std::vector<uint8_t> on_stack(n, 0);
    std::vector<uint32_t> tarjan_stack;
    std::vector<uint8_t> comp_mask;
    uint32_t next_index = 0;

    struct Frame {
        uint32_t state;
        size_t edge;
    };
    std::vector<Frame> frames;

    auto visit = [&](uint32_t root) {
        if (index[root] != kUnvisited) return;
        frames.push_back({root, 0});
        index[root] = low[root] = next_index++;
        tarjan_stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            uint32_t v = f.state;
            if (f.edge < cv.degree(v)) {
                uint32_t w = cv.target(v, f.edge++);
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    tarjan_stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    uint32_t cid = static_cast<uint32_t>(comp_mask.size());
                    uint8_t succ_mask = 0;
                    bool bottom = true;
                    uint32_t max_color = 0;
                    size_t first = tarjan_stack.size();
                    while (first > 0) {
                        first--;
                        comp_id[tarjan_stack[first]] = cid;
                        if (tarjan_stack[first] == v) break;
                    }
                    for (size_t i = first; i < tarjan_stack.size(); i++) {
                        uint32_t u = tarjan_stack[i];
                        on_stack[u] = 0;
                        max_color = std::max(max_color, game.color(u));
                        for (size_t e = 0; e < cv.degree(u); e++) {
                            uint32_t w = cv.target(u, e);
                            if (comp_id[w] != cid) {
                                bottom = false;
                                succ_mask |= comp_mask[comp_id[w]];
                            }
                        }
                    }
                    tarjan_stack.resize(first);
                    comp_mask.push_back(bottom ? uint8_t(1u << (max_color % 2)) : succ_mask);
                }
                frames.pop_back();
                if (!frames.empty()) {
                    uint32_t parent = frames.back().state;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    };

    roots.for_each(visit);
    for (uint32_t s = 0; s < n; s++)
        if (comp_id[s] != kUnvisited) mask[s] = comp_mask[comp_id[s]];
    return mask;
}

} // namespace

InducedChain build_induced_chain(const ExplicitGame& game, std::vector<uint32_t> strat0,
                                 std::vector<uint32_t> strat1, uint32_t start) {
    complete_strategy(game, 0, strat0);
    complete_strategy(game, 1, strat1);
    ChainView cv{&game, &strat0, &strat1};

    InducedChain chain;
    chain.nodes = game.empty_set();
    chain.edges.assign(game.size(), {});
    std::deque<uint32_t> work{start};
    chain.nodes.set(start);
    while (!work.empty()) {
        uint32_t s = work.front();
        work.pop_front();
        for (size_t i = 0; i < cv.degree(s); i++) {
            uint32_t t = cv.target(s, i);
            chain.edges[s].push_back(t);
            if (!chain.nodes.test(t)) {
                chain.nodes.set(t);
                work.push_back(t);
            }
        }
    }
    return chain;
}

McVerdict qualitative_mc_check(const ExplicitGame& game, const std::vector<uint32_t>& strat0,
                               const std::vector<uint32_t>& strat1, uint32_t start) {
    std::vector<uint32_t> f0 = strat0, f1 = strat1;
    complete_strategy(game, 0, f0);
    complete_strategy(game, 1, f1);
    ChainView cv{&game, &f0, &f1};
    std::vector<uint8_t> mask = chain_parity_masks(cv, start);
    McVerdict v{};
    v.wpp[0] = mask[start] & 1;
    v.wpp[1] = mask[start] & 2;
    v.as_win_player = mask[start] == 1 ? 0 : mask[start] == 2 ? 1 : -1;
    return v;
}

namespace {

/// attractor of `player` to `target` inside `sub`; fills `strat` on the way
StateSet zielonka_attractor(const ExplicitGame& game, int player, const StateSet& target,
                            const StateSet& sub, std::vector<uint32_t>& strat) {
    StateSet attr = target;
    std::deque<uint32_t> work;
    attr.for_each([&](uint32_t s) { work.push_back(s); });

    // for opponent states: successors inside sub that are not yet known
    // attracted; queue processing decrements one per attracted successor
    std::vector<uint32_t> remaining(game.size(), 0);
    sub.for_each([&](uint32_t s) {
        if (game.owner(s) == player_owner(1 - player)) {
            uint32_t c = 0;
            for (uint32_t t : game.successors(s))
                if (sub.test(t)) c++;
            remaining[s] = c;
        }
    });

    // predecessor lists are not stored, so scan incrementally
    std::vector<std::vector<uint32_t>> preds(game.size());
    sub.for_each([&](uint32_t s) {
        for (uint32_t t : game.successors(s))
            if (sub.test(t)) preds[t].push_back(s);
    });

    while (!work.empty()) {
        uint32_t t = work.front();
        work.pop_front();
        for (uint32_t s : preds[t]) {
            if (attr.test(s)) continue;
            if (game.owner(s) == player_owner(player)) {
                attr.set(s);
                strat[s] = t;
                work.push_back(s);
            } else {
                if (remaining[s] > 0) remaining[s]--;
                if (remaining[s] == 0) {
                    attr.set(s);
                    work.push_back(s);
                }
            }
        }
    }
    return attr;
}

struct ZRec {
    StateSet win[2];
    std::vector<uint32_t> strat[2];
};

ZRec zielonka_rec(const ExplicitGame& game, const StateSet& sub) {
    const uint32_t n = game.size();
    ZRec res{{StateSet(n), StateSet(n)},
             {std::vector<uint32_t>(n, kNoChoice), std::vector<uint32_t>(n, kNoChoice)}};
    if (sub.empty()) return res;

    uint32_t m = 0;
    sub.for_each([&](uint32_t s) { m = std::max(m, game.color(s)); });
    const int p = static_cast<int>(m % 2);

    StateSet target(n);
    sub.for_each([&](uint32_t s) {
        if (game.color(s) == m) target.set(s);
    });

    std::vector<uint32_t> attr_strat(n, kNoChoice);
    StateSet a = zielonka_attractor(game, p, target, sub, attr_strat);

    ZRec first = zielonka_rec(game, sub - a);
    if (first.win[1 - p].empty()) {
        res.win[p] = sub;
        res.strat[p] = std::move(first.strat[p]);
        for (uint32_t s = 0; s < n; s++)
            if (attr_strat[s] != kNoChoice) res.strat[p][s] = attr_strat[s];
        target.for_each([&](uint32_t s) {
            if (game.owner(s) != player_owner(p)) return;
            uint32_t best = kNoChoice;
            for (uint32_t t : game.successors(s))
                if (sub.test(t)) best = std::min(best, t);
            res.strat[p][s] = best;
        });
        return res;
    }

    std::vector<uint32_t> b_strat(n, kNoChoice);
    StateSet b = zielonka_attractor(game, 1 - p, first.win[1 - p], sub, b_strat);
    ZRec second = zielonka_rec(game, sub - b);
    res.win[p] = second.win[p];
    res.strat[p] = std::move(second.strat[p]);
    res.win[1 - p] = second.win[1 - p] | b;
    res.strat[1 - p] = std::move(second.strat[1 - p]);
    for (uint32_t s = 0; s < n; s++) {
        if (b_strat[s] != kNoChoice) res.strat[1 - p][s] = b_strat[s];
        if (first.strat[1 - p][s] != kNoChoice && first.win[1 - p].test(s))
            res.strat[1 - p][s] = first.strat[1 - p][s];
    }
    return res;
}

} // namespace

ZielonkaResult zielonka(const ExplicitGame& game) {
    if (!game.random_states().empty())
        throw HasRandomStatesError("zielonka: game has random states");
    ZRec rec = zielonka_rec(game, game.present());
    ZielonkaResult r;
    r.winning[0] = std::move(rec.win[0]);
    r.winning[1] = std::move(rec.win[1]);
    r.strategy[0] = std::move(rec.strat[0]);
    r.strategy[1] = std::move(rec.strat[1]);
    return r;
}

namespace {

struct ProfileSpace {
    std::vector<uint32_t> states; // owned states in id order
    std::vector<uint32_t> degree;
    uint64_t total = 1;
};

ProfileSpace profile_space(const ExplicitGame& game, int player) {
    ProfileSpace ps;
    game.owned_by(player).for_each([&](uint32_t s) {
        ps.states.push_back(s);
        ps.degree.push_back(static_cast<uint32_t>(game.successors(s).size()));
    });
    for (uint32_t d : ps.degree) {
        ps.total *= d;
        if (ps.total > 100000000ULL) ps.total = 100000000ULL + 1;
    }
    return ps;
}

std::vector<uint32_t> decode_profile(const ExplicitGame& game, const ProfileSpace& ps,
                                     uint64_t idx) {
    std::vector<uint32_t> strat(game.size(), kNoChoice);
    for (size_t i = 0; i < ps.states.size(); i++) {
        uint32_t s = ps.states[i];
        strat[s] = game.successors(s)[idx % ps.degree[i]];
        idx /= ps.degree[i];
    }
    return strat;
}

EnumVerdict enumerate_verify_impl(const ExplicitGame& game, int player, const StateSet& claimed,
                                  bool parallel) {
    ProfileSpace xs = profile_space(game, player);
    ProfileSpace ys = profile_space(game, 1 - player);
    if (xs.total > 1000000ULL || ys.total > 1000000ULL || xs.total * ys.total > 1000000ULL)
        throw TooLargeError("enumerate_verify: more than 10^6 strategy profiles");

    const uint8_t want = static_cast<uint8_t>(1u << player);
    const int64_t x_count = static_cast<int64_t>(xs.total);
    StateSet winnable = game.empty_set();

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int64_t xi = 0; xi < x_count; xi++) {
        std::vector<uint32_t> fx = decode_profile(game, xs, static_cast<uint64_t>(xi));
        StateSet wins = game.present();
        for (uint64_t yi = 0; yi < ys.total && !wins.empty(); yi++) {
            std::vector<uint32_t> fy = decode_profile(game, ys, yi);
            const std::vector<uint32_t>& f0 = player == 0 ? fx : fy;
            const std::vector<uint32_t>& f1 = player == 0 ? fy : fx;
            ChainView cv{&game, &f0, &f1};
            std::vector<uint8_t> mask = chain_parity_masks(cv, kNoChoice);
            wins.for_each([&](uint32_t s) {
                if (mask[s] != want) wins.reset(s);
            });
        }
#pragma omp critical
        winnable |= wins;
    }

    EnumVerdict verdict{winnable == claimed, std::nullopt};
    if (verdict.confirmed) return verdict;

    // deterministic witness: lowest disagreeing state
    StateSet diff = (claimed - winnable) | (winnable - claimed);
    uint32_t w = kNoChoice;
    diff.for_each([&](uint32_t s) { w = std::min(w, s); });
    EnumWitness witness;
    witness.state = w;
    if (claimed.test(w)) {
        // claimed but not winnable: show a refuter for the first profile
        witness.strat_x = decode_profile(game, xs, 0);
        for (uint64_t yi = 0; yi < ys.total; yi++) {
            std::vector<uint32_t> fy = decode_profile(game, ys, yi);
            const std::vector<uint32_t>& f0 = player == 0 ? witness.strat_x : fy;
            const std::vector<uint32_t>& f1 = player == 0 ? fy : witness.strat_x;
            ChainView cv{&game, &f0, &f1};
            if (chain_parity_masks(cv, kNoChoice)[w] != want) {
                witness.strat_y = fy;
                break;
            }
        }
    } else {
        // winnable but not claimed: show the winning profile
        for (uint64_t xi = 0; xi < xs.total; xi++) {
            std::vector<uint32_t> fx = decode_profile(game, xs, xi);
            bool all = true;
            for (uint64_t yi = 0; yi < ys.total && all; yi++) {
                std::vector<uint32_t> fy = decode_profile(game, ys, yi);
                const std::vector<uint32_t>& f0 = player == 0 ? fx : fy;
                const std::vector<uint32_t>& f1 = player == 0 ? fy : fx;
                ChainView cv{&game, &f0, &f1};
                if (chain_parity_masks(cv, kNoChoice)[w] != want) all = false;
            }
            if (all) {
                witness.strat_x = fx;
                break;
            }
        }
    }
    verdict.witness = std::move(witness);
    return verdict;
}

} // namespace

EnumVerdict enumerate_verify(const ExplicitGame& game, int player, const StateSet& claimed) {
    return enumerate_verify_impl(game, player, claimed, true);
}

EnumVerdict enumerate_verify_serial(const ExplicitGame& game, int player,
                                    const StateSet& claimed) {
    return enumerate_verify_impl(game, player, claimed, false);
}

} // namespace lcspg
