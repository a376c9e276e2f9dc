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

#ifndef LCSPG_EXPLICIT_GAME_HPP
#define LCSPG_EXPLICIT_GAME_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcspg/state_set.hpp"

namespace lcspg {

enum class Owner : uint8_t { P0 = 0, P1 = 1, Random = 2 };

inline Owner player_owner(int player) { return player == 0 ? Owner::P0 : Owner::P1; }

/**
 * A finite turn-based stochastic game graph.
 *
 * States are dense integer ids. Owner and color are parallel arrays,
 * successors are stored CSR-style with probabilities aligned to the
 * successor array (nonzero only for Random states). Restriction to a
 * sub-game keeps the original ids and masks absent states via present(),
 * so state sets computed on sub-games compose with parent-game sets.
 *
 * Probabilities are 64-bit floats; the qualitative algorithms only ever
 * read their support, never their magnitudes, so float rounding cannot
 * change a winner.
 *
 * Immutable after construction; safe to share across threads.
 */
class ExplicitGame {
public:
    ExplicitGame() = default;

    uint32_t size() const { return size_; }
    const StateSet& present() const { return present_; }
    bool is_present(uint32_t s) const { return present_.test(s); }
    Owner owner(uint32_t s) const { return owner_[s]; }
    uint32_t color(uint32_t s) const { return color_[s]; }
    /// maximal color among present states (0 for the empty mask)
    uint32_t max_color() const;

    std::span<const uint32_t> successors(uint32_t s) const {
        return {succ_.data() + succ_off_[s], succ_off_[s + 1] - succ_off_[s]};
    }
    std::span<const double> probabilities(uint32_t s) const {
        return {prob_.data() + succ_off_[s], succ_off_[s + 1] - succ_off_[s]};
    }

    bool has_successor_in(uint32_t s, const StateSet& q) const {
        for (uint32_t t : successors(s))
            if (q.test(t)) return true;
        return false;
    }
    bool all_successors_in(uint32_t s, const StateSet& q) const {
        for (uint32_t t : successors(s))
            if (!q.test(t)) return false;
        return true;
    }

    /// owned (non-Random) states of a player, intersected with present()
    StateSet owned_by(int player) const;
    StateSet random_states() const;
    /// present states with the given color
    StateSet states_with_color(uint32_t c) const;
    StateSet empty_set() const { return StateSet(size_); }

    /// list of well-formedness violations; empty iff the game is valid
    std::vector<std::string> validate() const;

    /**
     * Sub-game that removes `removed`. The kept part must be closable
     * (and nonempty), otherwise NotClosableError is thrown. Ids are
     * preserved; transitions are cut down to kept x kept.
     */
    ExplicitGame restrict(const StateSet& removed) const;

    bool structurally_equal(const ExplicitGame& o) const;

private:
    friend class ExplicitGameBuilder;

    uint32_t size_ = 0;
    StateSet present_;
    std::vector<Owner> owner_;
    std::vector<uint32_t> color_;
    std::vector<uint32_t> succ_off_;
    std::vector<uint32_t> succ_;
    std::vector<double> prob_;
};

/// Incremental construction; build() assembles the CSR arrays.
class ExplicitGameBuilder {
public:
    uint32_t add_state(Owner owner, uint32_t color);
    void add_edge(uint32_t from, uint32_t to, double prob = 0.0);
    ExplicitGame build() const;

private:
    struct Edge {
        uint32_t from, to;
        double prob;
    };
    std::vector<Owner> owner_;
    std::vector<uint32_t> color_;
    std::vector<Edge> edges_;
};

struct PreSets {
    StateSet pre;      // states with some successor in Q
    StateSet dual_pre; // states with all successors in Q
};

/// OpenMP kernel; falls back to the serial path for small games.
PreSets pre_sets(const ExplicitGame& game, const StateSet& q);
/// serial reference implementation, kept as the differential baseline
PreSets pre_sets_serial(const ExplicitGame& game, const StateSet& q);

struct SetFlags {
    bool sink_free;
    bool closable;
    bool is_trap_for_player;
};

/**
 * Classifies Q: sink-free (every member keeps a successor in Q),
 * closable (sink-free and Random members cannot leave), and trap for
 * the given player (closable and that player cannot leave).
 */
SetFlags classify_set(const ExplicitGame& game, const StateSet& q, int player);

} // namespace lcspg

#endif // LCSPG_EXPLICIT_GAME_HPP
