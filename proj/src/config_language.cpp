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

#include "lcspg/config_language.hpp"

#include <cassert>
#include <map>

#include "lcspg/errors.hpp"

namespace lcspg {

namespace {

uint32_t symbol_count(const Sglcs& lcs) { return lcs.alphabet_size() + 1; }
uint32_t separator(const Sglcs& lcs) { return lcs.alphabet_size(); }

void check_signature(const ConfigLanguage& a, const ConfigLanguage& b) {
    if (!a.valid() || !b.valid() || !a.lcs()->same_signature(*b.lcs()))
        throw SignatureMismatchError("config languages over different systems");
}

std::vector<uint32_t> message_symbols(const Sglcs& lcs) {
    std::vector<uint32_t> syms(lcs.alphabet_size());
    for (uint32_t i = 0; i < syms.size(); i++) syms[i] = i;
    return syms;
}

} // namespace

std::string encode_contents(const Sglcs& lcs, const Contents& contents) {
    std::string out;
    for (uint32_t c = 0; c < lcs.channel_count(); c++) {
        if (c) out.push_back(static_cast<char>(separator(lcs)));
        out += contents[c];
    }
    return out;
}

Contents decode_contents(const Sglcs& lcs, const std::string& word) {
    Contents out(lcs.channel_count());
    uint32_t chan = 0;
    for (char ch : word) {
        if (static_cast<uint8_t>(ch) == separator(lcs)) chan++;
        else out[chan].push_back(ch);
    }
    return out;
}

Dfa contents_universe(uint32_t channels, uint32_t alphabet_size) {
    RawDfa raw;
    raw.num_symbols = alphabet_size + 1;
    for (uint32_t i = 0; i < channels; i++) raw.add_state();
    for (uint32_t i = 0; i < channels; i++) {
        for (uint32_t a = 0; a < alphabet_size; a++) raw.delta[i][a] = static_cast<int32_t>(i);
        if (i + 1 < channels) raw.delta[i][alphabet_size] = static_cast<int32_t>(i + 1);
    }
    raw.accepting[channels - 1] = true;
    return raw.canonicalize();
}

ConfigLanguage ConfigLanguage::empty(SglcsPtr lcs) {
    ConfigLanguage l;
    l.slots_.assign(size_t(lcs->control_count()) * 2, Dfa::empty(symbol_count(*lcs)));
    l.lcs_ = std::move(lcs);
    return l;
}

ConfigLanguage ConfigLanguage::universe(SglcsPtr lcs) {
    ConfigLanguage l;
    Dfa u = contents_universe(lcs->channel_count(), lcs->alphabet_size());
    l.slots_.assign(size_t(lcs->control_count()) * 2, u);
    l.lcs_ = std::move(lcs);
    return l;
}

ConfigLanguage ConfigLanguage::attractor(SglcsPtr lcs) {
    ConfigLanguage l;
    Contents empty_contents(lcs->channel_count());
    Dfa slot = Dfa::from_nfa(
        Nfa::word(symbol_count(*lcs), encode_contents(*lcs, empty_contents)));
    l.slots_.assign(size_t(lcs->control_count()) * 2, slot);
    l.lcs_ = std::move(lcs);
    return l;
}

ConfigLanguage ConfigLanguage::from_configs(SglcsPtr lcs,
                                            const std::vector<Configuration>& configs) {
    ConfigLanguage l = ConfigLanguage::empty(lcs);
    // group words per slot, then one union per slot
    std::map<size_t, Nfa> nfas;
    for (const Configuration& c : configs) {
        size_t key = c.control * 2 + c.bit;
        auto it = nfas.find(key);
        if (it == nfas.end()) it = nfas.emplace(key, Nfa(symbol_count(*lcs))).first;
        Nfa word = Nfa::word(symbol_count(*lcs), encode_contents(*lcs, c.contents));
        uint32_t base = it->second.num_states();
        for (uint32_t s = 0; s < word.num_states(); s++) {
            it->second.add_state();
            it->second.set_accepting(base + s, word.is_accepting(s));
        }
        for (uint32_t s = 0; s < word.num_states(); s++)
            for (const auto& arc : word.arcs(s))
                it->second.add_transition(base + s, arc.sym, base + arc.to);
        it->second.set_initial(base);
    }
    for (auto& [key, nfa] : nfas) l.slots_[key] = Dfa::from_nfa(nfa);
    return l;
}

ConfigLanguage ConfigLanguage::from_slots(
    SglcsPtr lcs, const std::vector<std::pair<uint32_t, int>>& slots) {
    ConfigLanguage l = ConfigLanguage::empty(lcs);
    Dfa u = contents_universe(lcs->channel_count(), lcs->alphabet_size());
    for (auto [control, bit] : slots) l.slots_[control * 2 + bit] = u;
    return l;
}

bool ConfigLanguage::contains(const Configuration& config) const {
    return slot(config.control, config.bit).accepts(encode_contents(*lcs_, config.contents));
}

bool ConfigLanguage::is_empty() const {
    for (const Dfa& d : slots_)
        if (!d.is_empty_language()) return false;
    return true;
}

bool ConfigLanguage::equals(const ConfigLanguage& o) const {
    check_signature(*this, o);
    return slots_ == o.slots_;
}

std::optional<Configuration> ConfigLanguage::shortest_member() const {
    std::optional<Configuration> best;
    size_t best_len = 0;
    for (uint32_t control = 0; control < lcs_->control_count(); control++) {
        for (int bit = 0; bit <= 1; bit++) {
            auto w = slot(control, bit).shortest_word();
            if (!w) continue;
            if (!best || w->size() < best_len) {
                best = make_config(*lcs_, control, static_cast<uint8_t>(bit),
                                   decode_contents(*lcs_, *w));
                best_len = w->size();
            }
        }
    }
    return best;
}

std::vector<Configuration> ConfigLanguage::members_up_to(size_t max_total_len) const {
    std::vector<Configuration> out;
    const size_t word_len = max_total_len + lcs_->channel_count() - 1;
    for (uint32_t control = 0; control < lcs_->control_count(); control++) {
        for (int bit = 0; bit <= 1; bit++) {
            for (const std::string& w : slot(control, bit).words_up_to(word_len))
                out.push_back(make_config(*lcs_, control, static_cast<uint8_t>(bit),
                                          decode_contents(*lcs_, w)));
        }
    }
    return out;
}

size_t ConfigLanguage::total_states() const {
    size_t n = 0;
    for (const Dfa& d : slots_) n += d.num_states();
    return n;
}

ConfigLanguage ConfigLanguage::complement() const {
    ConfigLanguage l = *this;
    Dfa u = contents_universe(lcs_->channel_count(), lcs_->alphabet_size());
    for (Dfa& d : l.slots_) d = difference(u, d);
    return l;
}

ConfigLanguage ConfigLanguage::upward_closure() const {
    ConfigLanguage l = *this;
    std::vector<uint32_t> msgs = message_symbols(*lcs_);
    for (Dfa& d : l.slots_) d = d.with_self_loops(msgs);
    return l;
}

ConfigLanguage unite(const ConfigLanguage& a, const ConfigLanguage& b) {
    check_signature(a, b);
    ConfigLanguage l = a;
    for (size_t i = 0; i < l.slots_.size(); i++) l.slots_[i] = unite(l.slots_[i], b.slots_[i]);
    return l;
}

ConfigLanguage intersect(const ConfigLanguage& a, const ConfigLanguage& b) {
    check_signature(a, b);
    ConfigLanguage l = a;
    for (size_t i = 0; i < l.slots_.size(); i++)
        l.slots_[i] = intersect(l.slots_[i], b.slots_[i]);
    return l;
}

ConfigLanguage difference(const ConfigLanguage& a, const ConfigLanguage& b) {
    check_signature(a, b);
    ConfigLanguage l = a;
    for (size_t i = 0; i < l.slots_.size(); i++)
        l.slots_[i] = difference(l.slots_[i], b.slots_[i]);
    return l;
}

Dfa deadlocked_contents(const Sglcs& lcs, uint32_t control) {
    const uint32_t k = lcs.channel_count();
    const uint32_t m = lcs.alphabet_size();

    // controls with a nop or send rule are never deadlocked
    for (uint32_t ri : lcs.rules_from(control)) {
        OpKind op = lcs.rules()[ri].op;
        if (op == OpKind::Nop || op == OpKind::Send) return Dfa::empty(m + 1);
    }
    Dfa result = contents_universe(k, m);
    for (uint32_t ri : lcs.rules_from(control)) {
        const LcsRule& rule = lcs.rules()[ri];
        // words whose segment `rule.chan` is empty or starts with != rule.msg
        RawDfa raw;
        raw.num_symbols = m + 1;
        // states: (segment i, fresh) with fresh marking the start of segment chan
        auto id = [&](uint32_t i, uint32_t fresh) { return i * 2 + fresh; };
        for (uint32_t i = 0; i < k; i++) {
            raw.add_state();
            raw.add_state();
        }
        for (uint32_t i = 0; i < k; i++) {
            for (uint32_t fresh = 0; fresh <= 1; fresh++) {
                for (uint32_t a = 0; a < m; a++) {
                    if (i == rule.chan && fresh == 1 && a == rule.msg) continue; // head match
                    raw.delta[id(i, fresh)][a] = static_cast<int32_t>(id(i, 0));
                }
                if (i + 1 < k)
                    raw.delta[id(i, fresh)][m] =
                        static_cast<int32_t>(id(i + 1, (i + 1 == rule.chan) ? 1 : 0));
            }
        }
        raw.accepting[id(k - 1, 0)] = true;
        raw.accepting[id(k - 1, 1)] = true;
        raw.initial = id(0, (rule.chan == 0) ? 1 : 0);
        result = intersect(result, raw.canonicalize());
    }
    return result;
}

namespace {

/// predecessor of A through a send: the word with `msg` appended to the
/// end of segment `chan` must be in A
Dfa send_pre(const Dfa& a, uint32_t chan, uint8_t msg, uint32_t k, uint32_t m) {
    if (a.is_empty_language()) return a;
    const uint32_t sep = m;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> id;
    std::vector<std::pair<uint32_t, uint32_t>> states{{0, 0}}; // (a-state, segment)
    id[{0, 0}] = 0;
    RawDfa raw;
    raw.num_symbols = m + 1;
    raw.add_state();
    for (uint32_t cur = 0; cur < states.size(); cur++) {
        auto [q, seg] = states[cur];
        auto link = [&](uint32_t sym, int32_t aq, uint32_t nseg) {
            if (aq < 0) return;
            std::pair<uint32_t, uint32_t> key{static_cast<uint32_t>(aq), nseg};
            auto it = id.find(key);
            uint32_t t;
            if (it == id.end()) {
                t = raw.add_state();
                id[key] = t;
                states.push_back(key);
            } else {
                t = it->second;
            }
            raw.delta[cur][sym] = static_cast<int32_t>(t);
        };
        for (uint32_t sym = 0; sym < m; sym++) link(sym, a.delta(q, sym), seg);
        if (seg + 1 < k) {
            if (seg == chan) {
                int32_t mid = a.delta(q, msg);
                link(sep, mid < 0 ? -1 : a.delta(static_cast<uint32_t>(mid), sep), seg + 1);
            } else {
                link(sep, a.delta(q, sep), seg + 1);
            }
        }
        if (seg == k - 1) {
            if (chan == k - 1) {
                int32_t mid = a.delta(q, msg);
                raw.accepting[cur] = mid >= 0 && a.is_accepting(static_cast<uint32_t>(mid));
            } else {
                raw.accepting[cur] = a.is_accepting(q);
            }
        }
    }
    return raw.canonicalize();
}

/// predecessor of A through a receive: segment `chan` starts with `msg`
/// and the word with that head removed is in A
Dfa recv_pre(const Dfa& a, uint32_t chan, uint8_t msg, uint32_t k, uint32_t m) {
    if (a.is_empty_language()) return a;
    const uint32_t sep = m;
    // state: (a-state, segment, pending-head)
    std::map<std::tuple<uint32_t, uint32_t, uint32_t>, uint32_t> id;
    std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> states;
    states.emplace_back(0u, 0u, chan == 0 ? 1u : 0u);
    id[states[0]] = 0;
    RawDfa raw;
    raw.num_symbols = m + 1;
    raw.add_state();
    for (uint32_t cur = 0; cur < states.size(); cur++) {
        auto [q, seg, pending] = states[cur];
        auto link = [&](uint32_t sym, uint32_t aq, uint32_t nseg, uint32_t npending) {
            std::tuple<uint32_t, uint32_t, uint32_t> key{aq, nseg, npending};
            auto it = id.find(key);
            uint32_t t;
            if (it == id.end()) {
                t = raw.add_state();
                id[key] = t;
                states.push_back(key);
            } else {
                t = it->second;
            }
            raw.delta[cur][sym] = static_cast<int32_t>(t);
        };
        if (pending) {
            // the prepended head must come first and does not advance A
            link(msg, q, seg, 0);
        } else {
            for (uint32_t sym = 0; sym < m; sym++)
                if (a.delta(q, sym) >= 0)
                    link(sym, static_cast<uint32_t>(a.delta(q, sym)), seg, 0);
            if (seg + 1 < k && a.delta(q, sep) >= 0)
                link(sep, static_cast<uint32_t>(a.delta(q, sep)), seg + 1,
                     (seg + 1 == chan) ? 1u : 0u);
            raw.accepting[cur] = seg == k - 1 && a.is_accepting(q);
        }
    }
    return raw.canonicalize();
}

} // namespace

ConfigLanguage pre_rule(const ConfigLanguage& lang, uint32_t rule_index) {
    const Sglcs& lcs = *lang.lcs();
    const LcsRule& rule = lcs.rules()[rule_index];
    ConfigLanguage out = ConfigLanguage::empty(lang.lcs());
    const Dfa& target = lang.slot(rule.to, 0);
    Dfa pre;
    switch (rule.op) {
    case OpKind::Nop: pre = target; break;
    case OpKind::Send:
        pre = send_pre(target, rule.chan, rule.msg, lcs.channel_count(), lcs.alphabet_size());
        break;
    case OpKind::Recv:
        pre = recv_pre(target, rule.chan, rule.msg, lcs.channel_count(), lcs.alphabet_size());
        break;
    }
    out.set_slot(rule.from, 1, std::move(pre));
    return out;
}

ConfigLanguage pre_loss(const ConfigLanguage& lang) {
    const Sglcs& lcs = *lang.lcs();
    ConfigLanguage out = ConfigLanguage::empty(lang.lcs());
    std::vector<uint32_t> msgs;
    for (uint32_t i = 0; i < lcs.alphabet_size(); i++) msgs.push_back(i);
    for (uint32_t control = 0; control < lcs.control_count(); control++)
        out.set_slot(control, 0, lang.slot(control, 1).with_self_loops(msgs));
    return out;
}

ConfigLanguage pre_deadlock(const ConfigLanguage& lang) {
    const Sglcs& lcs = *lang.lcs();
    ConfigLanguage out = ConfigLanguage::empty(lang.lcs());
    for (uint32_t control = 0; control < lcs.control_count(); control++) {
        Dfa dead = deadlocked_contents(lcs, control);
        if (dead.is_empty_language()) continue;
        out.set_slot(control, 1, intersect(dead, lang.slot(control, 0)));
    }
    return out;
}

namespace {

ConfigLanguage pre_raw(const ConfigLanguage& lang) {
    const Sglcs& lcs = *lang.lcs();
    ConfigLanguage acc = pre_loss(lang);
    acc = unite(acc, pre_deadlock(lang));
    for (uint32_t ri = 0; ri < lcs.rules().size(); ri++) acc = unite(acc, pre_rule(lang, ri));
    return acc;
}

} // namespace

ConfigLanguage pre_full(const ConfigLanguage& lang, PreMode mode,
                        const ConfigLanguage* restrict_to) {
    if (restrict_to == nullptr) {
        if (mode == PreMode::Pre) return pre_raw(lang);
        // all successors in lang <=> no successor outside lang
        return pre_raw(lang.complement()).complement();
    }
    const ConfigLanguage& r = *restrict_to;
    if (mode == PreMode::Pre) return intersect(r, pre_raw(intersect(lang, r)));
    return difference(r, pre_raw(difference(r, lang)));
}

} // namespace lcspg
