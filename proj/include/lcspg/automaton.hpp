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

#ifndef LCSPG_AUTOMATON_HPP
#define LCSPG_AUTOMATON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lcspg {

/// nondeterministic automaton used as the construction vehicle
class Nfa {
public:
    explicit Nfa(uint32_t num_symbols) : num_symbols_(num_symbols) {}

    uint32_t num_symbols() const { return num_symbols_; }
    uint32_t num_states() const { return static_cast<uint32_t>(transitions_.size()); }

    uint32_t add_state() {
        transitions_.emplace_back();
        accepting_.push_back(false);
        return num_states() - 1;
    }
    void add_transition(uint32_t from, uint32_t sym, uint32_t to) {
        transitions_[from].push_back({sym, to});
    }
    void set_initial(uint32_t s) { initial_.push_back(s); }
    void set_accepting(uint32_t s, bool acc = true) { accepting_[s] = acc; }

    const std::vector<uint32_t>& initial() const { return initial_; }
    bool is_accepting(uint32_t s) const { return accepting_[s]; }
    struct Arc {
        uint32_t sym, to;
    };
    const std::vector<Arc>& arcs(uint32_t s) const { return transitions_[s]; }

    /// singleton-word automaton
    static Nfa word(uint32_t num_symbols, const std::string& w);

private:
    uint32_t num_symbols_;
    std::vector<std::vector<Arc>> transitions_;
    std::vector<bool> accepting_;
    std::vector<uint32_t> initial_;
};

/**
 * Deterministic automaton kept in canonical reduced form: trim
 * (every state reachable and productive), minimal, states numbered by
 * a breadth-first walk from the initial state in symbol order. Under
 * this normal form two automata accept the same language iff they are
 * structurally equal, which makes fixpoint stabilization tests cheap.
 * The empty language is the automaton with zero states.
 */
class Dfa {
public:
    Dfa() = default;
    static Dfa empty(uint32_t num_symbols);
    /// determinize + minimize + trim + canonical renumbering
    static Dfa from_nfa(const Nfa& nfa);

    uint32_t num_symbols() const { return num_symbols_; }
    uint32_t num_states() const { return num_states_; }
    bool is_empty_language() const { return num_states_ == 0; }
    bool is_accepting(uint32_t s) const { return accepting_[s]; }
    /// -1 when the transition is missing
    int32_t delta(uint32_t s, uint32_t sym) const { return delta_[s * num_symbols_ + sym]; }

    bool accepts(const std::string& word) const;

    bool operator==(const Dfa& o) const = default;

    Nfa to_nfa() const;

    std::optional<std::string> shortest_word() const;
    /// accepted words of length <= max_len, lexicographic order
    std::vector<std::string> words_up_to(size_t max_len) const;

    friend Dfa intersect(const Dfa& a, const Dfa& b);
    friend Dfa unite(const Dfa& a, const Dfa& b);
    /// a minus b
    friend Dfa difference(const Dfa& a, const Dfa& b);

    /**
     * Adds a self-loop on every state for each listed symbol and
     * re-canonicalizes; with the message symbols this is exactly the
     * upward closure for the subword order.
     */
    Dfa with_self_loops(const std::vector<uint32_t>& symbols) const;

private:
    friend struct RawDfa;
    uint32_t num_symbols_ = 0;
    uint32_t num_states_ = 0;
    std::vector<int32_t> delta_;
    std::vector<bool> accepting_;
};

/// scratch automaton for ad-hoc product constructions
struct RawDfa {
    uint32_t num_symbols = 0;
    uint32_t initial = 0;
    std::vector<std::vector<int32_t>> delta; // [state][symbol], -1 missing
    std::vector<bool> accepting;

    uint32_t add_state() {
        delta.emplace_back(num_symbols, -1);
        accepting.push_back(false);
        return static_cast<uint32_t>(delta.size() - 1);
    }
    /// minimize + trim + renumber into the canonical form
    Dfa canonicalize() const;
};

} // namespace lcspg

#endif // LCSPG_AUTOMATON_HPP
