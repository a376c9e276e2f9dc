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

#ifndef LCSPG_CONFIG_LANGUAGE_HPP
#define LCSPG_CONFIG_LANGUAGE_HPP

#include <optional>
#include <vector>

#include "lcspg/automaton.hpp"
#include "lcspg/lcs.hpp"

namespace lcspg {

/// channel contents encoded as w1 # w2 # ... # wk (k-1 separators)
std::string encode_contents(const Sglcs& lcs, const Contents& contents);
Contents decode_contents(const Sglcs& lcs, const std::string& word);

/// the well-formed word universe for k channels over m messages
Dfa contents_universe(uint32_t channels, uint32_t alphabet_size);

/**
 * A regular set of configurations: one canonical automaton per
 * (control, bit) pair over the message alphabet plus one separator
 * symbol. Every slot language stays inside the well-formed universe;
 * complementation is taken relative to it. Because slots are kept
 * canonical, language equality is plain structural comparison — the
 * fixpoint loops rely on that.
 *
 * Operations never mutate their inputs; they hand back fresh values.
 */
class ConfigLanguage {
public:
    ConfigLanguage() = default;

    static ConfigLanguage empty(SglcsPtr lcs);
    static ConfigLanguage universe(SglcsPtr lcs);
    /// the empty-channel configurations at every control and bit
    static ConfigLanguage attractor(SglcsPtr lcs);
    static ConfigLanguage from_configs(SglcsPtr lcs, const std::vector<Configuration>& configs);
    /// full contents universe on the chosen (control, bit) slots
    static ConfigLanguage from_slots(SglcsPtr lcs,
                                     const std::vector<std::pair<uint32_t, int>>& slots);

    const SglcsPtr& lcs() const { return lcs_; }
    bool valid() const { return lcs_ != nullptr; }
    const Dfa& slot(uint32_t control, int bit) const { return slots_[control * 2 + bit]; }
    void set_slot(uint32_t control, int bit, Dfa dfa) {
        slots_[control * 2 + bit] = std::move(dfa);
    }

    bool contains(const Configuration& config) const;
    bool is_empty() const;
    bool equals(const ConfigLanguage& o) const;
    bool operator==(const ConfigLanguage& o) const { return equals(o); }

    std::optional<Configuration> shortest_member() const;
    /// all members with total content length <= max_total_len
    std::vector<Configuration> members_up_to(size_t max_total_len) const;
    /// summed canonical automaton sizes, for stage traces
    size_t total_states() const;

    ConfigLanguage complement() const;
    ConfigLanguage upward_closure() const;

    friend ConfigLanguage unite(const ConfigLanguage& a, const ConfigLanguage& b);
    friend ConfigLanguage intersect(const ConfigLanguage& a, const ConfigLanguage& b);
    friend ConfigLanguage difference(const ConfigLanguage& a, const ConfigLanguage& b);

private:
    SglcsPtr lcs_;
    std::vector<Dfa> slots_; // control * 2 + bit
};

/// contents at `control` where no rule is enabled (deadlocked player phase)
Dfa deadlocked_contents(const Sglcs& lcs, uint32_t control);

/// exact predecessors through one rule, landing at (rule.from, bit 1)
ConfigLanguage pre_rule(const ConfigLanguage& lang, uint32_t rule_index);
/// predecessors through the loss step: bit 1 -> 0 plus upward closure
ConfigLanguage pre_loss(const ConfigLanguage& lang);
/// predecessors through the deadlock completion edge
ConfigLanguage pre_deadlock(const ConfigLanguage& lang);

enum class PreMode { Pre, DualPre };

/**
 * Predecessors through all edges of the induced game. With a
 * restriction the operator is relativized to the sub-game on
 * restrict_to: only kept sources and kept successors count.
 */
ConfigLanguage pre_full(const ConfigLanguage& lang, PreMode mode,
                        const ConfigLanguage* restrict_to = nullptr);

} // namespace lcspg

#endif // LCSPG_CONFIG_LANGUAGE_HPP
