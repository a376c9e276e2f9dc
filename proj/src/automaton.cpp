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

#include "lcspg/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace lcspg {

Nfa Nfa::word(uint32_t num_symbols, const std::string& w) {
    Nfa nfa(num_symbols);
    uint32_t prev = nfa.add_state();
    nfa.set_initial(prev);
    for (char c : w) {
        uint32_t next = nfa.add_state();
        nfa.add_transition(prev, static_cast<uint8_t>(c), next);
        prev = next;
    }
    nfa.set_accepting(prev);
    return nfa;
}

Dfa Dfa::empty(uint32_t num_symbols) {
    Dfa d;
    d.num_symbols_ = num_symbols;
    return d;
}

bool Dfa::accepts(const std::string& word) const {
    if (num_states_ == 0) return false;
    int32_t s = 0;
    for (char c : word) {
        s = delta(static_cast<uint32_t>(s), static_cast<uint8_t>(c));
        if (s < 0) return false;
    }
    return accepting_[static_cast<uint32_t>(s)];
}

Nfa Dfa::to_nfa() const {
    Nfa nfa(num_symbols_);
    for (uint32_t s = 0; s < num_states_; s++) {
        nfa.add_state();
        nfa.set_accepting(s, accepting_[s]);
    }
    for (uint32_t s = 0; s < num_states_; s++)
        for (uint32_t a = 0; a < num_symbols_; a++)
            if (delta(s, a) >= 0) nfa.add_transition(s, a, static_cast<uint32_t>(delta(s, a)));
    if (num_states_ > 0) nfa.set_initial(0);
    return nfa;
}

std::optional<std::string> Dfa::shortest_word() const {
    if (num_states_ == 0) return std::nullopt;
    // canonical form is trim, so BFS must find an accepting state
    std::vector<int32_t> back_state(num_states_, -1);
    std::vector<uint32_t> back_sym(num_states_, 0);
    std::vector<bool> seen(num_states_, false);
    std::deque<uint32_t> work{0};
    seen[0] = true;
    while (!work.empty()) {
        uint32_t s = work.front();
        work.pop_front();
        if (accepting_[s]) {
            std::string w;
            uint32_t cur = s;
            while (back_state[cur] >= 0) {
                w.push_back(static_cast<char>(back_sym[cur]));
                cur = static_cast<uint32_t>(back_state[cur]);
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (uint32_t a = 0; a < num_symbols_; a++) {
            int32_t t = delta(s, a);
            if (t >= 0 && !seen[static_cast<uint32_t>(t)]) {
                seen[static_cast<uint32_t>(t)] = true;
                back_state[static_cast<uint32_t>(t)] = static_cast<int32_t>(s);
                back_sym[static_cast<uint32_t>(t)] = a;
                work.push_back(static_cast<uint32_t>(t));
            }
        }
    }
    return std::nullopt;
}

std::vector<std::string> Dfa::words_up_to(size_t max_len) const {
    std::vector<std::string> out;
    if (num_states_ == 0) return out;
    std::string word;
    auto rec = [&](auto&& self, uint32_t s) -> void {
        if (accepting_[s]) out.push_back(word);
        if (word.size() == max_len) return;
        for (uint32_t a = 0; a < num_symbols_; a++) {
            int32_t t = delta(s, a);
            if (t < 0) continue;
            word.push_back(static_cast<char>(a));
            self(self, static_cast<uint32_t>(t));
            word.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Dfa RawDfa::canonicalize() const {
    const uint32_t n = static_cast<uint32_t>(delta.size());
    if (n == 0) return Dfa::empty(num_symbols);

    // complete with a sink, then Moore partition refinement
    const uint32_t sink = n;
    auto step = [&](uint32_t s, uint32_t a) -> uint32_t {
        if (s == sink) return sink;
        int32_t t = delta[s][a];
        return t < 0 ? sink : static_cast<uint32_t>(t);
    };
    std::vector<uint32_t> cls(n + 1);
    for (uint32_t s = 0; s < n; s++) cls[s] = accepting[s] ? 1 : 0;
    cls[sink] = 0;

    for (;;) {
        std::map<std::vector<uint32_t>, uint32_t> sig_to_class;
        std::vector<uint32_t> next_cls(n + 1);
        for (uint32_t s = 0; s <= n; s++) {
            std::vector<uint32_t> sig;
            sig.reserve(num_symbols + 1);
            sig.push_back(cls[s]);
            for (uint32_t a = 0; a < num_symbols; a++) sig.push_back(cls[step(s, a)]);
            auto it = sig_to_class.emplace(std::move(sig),
                                           static_cast<uint32_t>(sig_to_class.size()));
            next_cls[s] = it.first->second;
        }
        if (next_cls == cls) break;
        cls = std::move(next_cls);
    }

    const uint32_t n_classes = *std::max_element(cls.begin(), cls.end()) + 1;

    std::vector<std::vector<int32_t>> qdelta(n_classes, std::vector<int32_t>(num_symbols, -1));
    std::vector<bool> qacc(n_classes, false);
    for (uint32_t s = 0; s <= n; s++) {
        for (uint32_t a = 0; a < num_symbols; a++)
            qdelta[cls[s]][a] = static_cast<int32_t>(cls[step(s, a)]);
        if (s < n && accepting[s]) qacc[cls[s]] = true;
    }

    // productive classes: can reach an accepting class
    std::vector<bool> productive(qacc.begin(), qacc.end());
    for (bool changed = true; changed;) {
        changed = false;
        for (uint32_t c = 0; c < n_classes; c++) {
            if (productive[c]) continue;
            for (uint32_t a = 0; a < num_symbols; a++) {
                int32_t t = qdelta[c][a];
                if (t >= 0 && productive[static_cast<uint32_t>(t)]) {
                    productive[c] = true;
                    changed = true;
                    break;
                }
            }
        }
    }

    uint32_t q0 = cls[initial];
    if (!productive[q0]) return Dfa::empty(num_symbols);

    // canonical BFS renumbering over productive classes only
    std::vector<int32_t> renum(n_classes, -1);
    std::vector<uint32_t> order;
    std::deque<uint32_t> work{q0};
    renum[q0] = 0;
    order.push_back(q0);
    while (!work.empty()) {
        uint32_t c = work.front();
        work.pop_front();
        for (uint32_t a = 0; a < num_symbols; a++) {
            int32_t t = qdelta[c][a];
            if (t < 0 || !productive[static_cast<uint32_t>(t)]) continue;
            if (renum[static_cast<uint32_t>(t)] < 0) {
                renum[static_cast<uint32_t>(t)] = static_cast<int32_t>(order.size());
                order.push_back(static_cast<uint32_t>(t));
                work.push_back(static_cast<uint32_t>(t));
            }
        }
    }

    Dfa d;
    d.num_symbols_ = num_symbols;
    d.num_states_ = static_cast<uint32_t>(order.size());
    d.delta_.assign(size_t(d.num_states_) * num_symbols, -1);
    d.accepting_.assign(d.num_states_, false);
    for (uint32_t i = 0; i < d.num_states_; i++) {
        uint32_t c = order[i];
        d.accepting_[i] = qacc[c];
        for (uint32_t a = 0; a < num_symbols; a++) {
            int32_t t = qdelta[c][a];
            if (t >= 0 && productive[static_cast<uint32_t>(t)])
                d.delta_[size_t(i) * num_symbols + a] = renum[static_cast<uint32_t>(t)];
        }
    }
    return d;
}

Dfa Dfa::from_nfa(const Nfa& nfa) {
    if (nfa.initial().empty()) return Dfa::empty(nfa.num_symbols());

    std::vector<uint32_t> start(nfa.initial());
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());

    std::map<std::vector<uint32_t>, uint32_t> subset_id;
    std::vector<std::vector<uint32_t>> subsets{start};
    subset_id[start] = 0;

    RawDfa raw;
    raw.num_symbols = nfa.num_symbols();
    raw.add_state();
    raw.initial = 0;

    for (uint32_t cur = 0; cur < subsets.size(); cur++) {
        std::vector<std::vector<uint32_t>> next(nfa.num_symbols());
        bool acc = false;
        for (uint32_t q : subsets[cur]) {
            if (nfa.is_accepting(q)) acc = true;
            for (const auto& arc : nfa.arcs(q)) next[arc.sym].push_back(arc.to);
        }
        raw.accepting[cur] = acc;
        for (uint32_t a = 0; a < nfa.num_symbols(); a++) {
            if (next[a].empty()) continue;
            std::sort(next[a].begin(), next[a].end());
            next[a].erase(std::unique(next[a].begin(), next[a].end()), next[a].end());
            auto it = subset_id.find(next[a]);
            uint32_t id;
            if (it == subset_id.end()) {
                id = raw.add_state();
                subset_id[next[a]] = id;
                subsets.push_back(next[a]);
            } else {
                id = it->second;
            }
            raw.delta[cur][a] = static_cast<int32_t>(id);
        }
    }
    return raw.canonicalize();
}

Dfa intersect(const Dfa& a, const Dfa& b) {
    assert(a.num_symbols() == b.num_symbols());
    if (a.is_empty_language() || b.is_empty_language()) return Dfa::empty(a.num_symbols());

    std::map<std::pair<uint32_t, uint32_t>, uint32_t> id;
    std::vector<std::pair<uint32_t, uint32_t>> pairs{{0, 0}};
    id[{0, 0}] = 0;
    RawDfa raw;
    raw.num_symbols = a.num_symbols();
    raw.add_state();
    for (uint32_t cur = 0; cur < pairs.size(); cur++) {
        auto [sa, sb] = pairs[cur];
        raw.accepting[cur] = a.is_accepting(sa) && b.is_accepting(sb);
        for (uint32_t sym = 0; sym < raw.num_symbols; sym++) {
            int32_t ta = a.delta(sa, sym), tb = b.delta(sb, sym);
            if (ta < 0 || tb < 0) continue;
            std::pair<uint32_t, uint32_t> key{static_cast<uint32_t>(ta),
                                              static_cast<uint32_t>(tb)};
            auto it = id.find(key);
            uint32_t t;
            if (it == id.end()) {
                t = raw.add_state();
                id[key] = t;
                pairs.push_back(key);
            } else {
                t = it->second;
            }
            raw.delta[cur][sym] = static_cast<int32_t>(t);
        }
    }
    return raw.canonicalize();
}

Dfa unite(const Dfa& a, const Dfa& b) {
    assert(a.num_symbols() == b.num_symbols());
    Nfa nfa(a.num_symbols());
    auto embed = [&](const Dfa& d) {
        uint32_t base = nfa.num_states();
        for (uint32_t s = 0; s < d.num_states(); s++) {
            nfa.add_state();
            nfa.set_accepting(base + s, d.is_accepting(s));
        }
        for (uint32_t s = 0; s < d.num_states(); s++)
            for (uint32_t sym = 0; sym < d.num_symbols(); sym++)
                if (d.delta(s, sym) >= 0)
                    nfa.add_transition(base + s, sym,
                                       base + static_cast<uint32_t>(d.delta(s, sym)));
        if (d.num_states() > 0) nfa.set_initial(base);
    };
    embed(a);
    embed(b);
    return Dfa::from_nfa(nfa);
}

Dfa difference(const Dfa& a, const Dfa& b) {
    if (a.is_empty_language()) return Dfa::empty(a.num_symbols());
    assert(a.num_symbols() == b.num_symbols());

    // product with b completed; -2 on the b side is the implicit sink
    constexpr int32_t kSinkB = -2;
    std::map<std::pair<uint32_t, int32_t>, uint32_t> id;
    std::vector<std::pair<uint32_t, int32_t>> pairs;
    int32_t b0 = b.is_empty_language() ? kSinkB : 0;
    pairs.push_back({0, b0});
    id[pairs[0]] = 0;
    RawDfa raw;
    raw.num_symbols = a.num_symbols();
    raw.add_state();
    for (uint32_t cur = 0; cur < pairs.size(); cur++) {
        auto [sa, sb] = pairs[cur];
        bool bacc = sb >= 0 && b.is_accepting(static_cast<uint32_t>(sb));
        raw.accepting[cur] = a.is_accepting(sa) && !bacc;
        for (uint32_t sym = 0; sym < raw.num_symbols; sym++) {
            int32_t ta = a.delta(sa, sym);
            if (ta < 0) continue;
            int32_t tb = sb >= 0 ? b.delta(static_cast<uint32_t>(sb), sym) : kSinkB;
            if (tb < 0) tb = kSinkB;
            std::pair<uint32_t, int32_t> key{static_cast<uint32_t>(ta), tb};
            auto it = id.find(key);
            uint32_t t;
            if (it == id.end()) {
                t = raw.add_state();
                id[key] = t;
                pairs.push_back(key);
            } else {
                t = it->second;
            }
            raw.delta[cur][sym] = static_cast<int32_t>(t);
        }
    }
    return raw.canonicalize();
}

Dfa Dfa::with_self_loops(const std::vector<uint32_t>& symbols) const {
    if (is_empty_language()) return *this;
    Nfa nfa = to_nfa();
    for (uint32_t s = 0; s < num_states_; s++)
        for (uint32_t a : symbols) nfa.add_transition(s, a, s);
    return Dfa::from_nfa(nfa);
}

} // namespace lcspg
