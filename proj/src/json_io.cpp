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

#include "lcspg/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lcspg/errors.hpp"

namespace lcspg {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
    return *it;
}

Owner owner_from_string(const std::string& s) {
    if (s == "P0") return Owner::P0;
    if (s == "P1") return Owner::P1;
    if (s == "R") return Owner::Random;
    fail("owner must be one of \"P0\", \"P1\", \"R\", got \"" + s + "\"");
}

} // namespace

ExplicitGame game_from_json(const Json& j) {
    const Json& states = need(j, "states");
    if (!states.is_array() || states.empty()) fail("\"states\" must be a nonempty array");
    const size_t n = states.size();
    std::vector<std::tuple<Owner, uint32_t>> meta(n);
    std::vector<bool> seen(n, false);
    struct E {
        uint32_t from, to;
        double prob;
    };
    std::vector<E> edges;
    for (const Json& st : states) {
        uint64_t id = need(st, "id").get<uint64_t>();
        if (id >= n) fail("state ids must be dense 0..n-1; id " + std::to_string(id));
        if (seen[id]) fail("duplicate state id " + std::to_string(id));
        seen[id] = true;
        Owner owner = owner_from_string(need(st, "owner").get<std::string>());
        uint32_t color = need(st, "color").get<uint32_t>();
        meta[id] = {owner, color};
        const Json& succ = need(st, "succ");
        bool has_prob = st.contains("prob");
        if (has_prob != (owner == Owner::Random))
            fail("state " + std::to_string(id) + ": \"prob\" must be present iff owner is R");
        for (const Json& t : succ) {
            uint64_t to = t.get<uint64_t>();
            if (to >= n) fail("successor out of range: " + std::to_string(to));
            double p = 0.0;
            if (has_prob) {
                const Json& probs = st["prob"];
                auto it = probs.find(std::to_string(to));
                if (it == probs.end())
                    fail("state " + std::to_string(id) + ": missing prob for successor " +
                         std::to_string(to));
                p = it->get<double>();
            }
            edges.push_back({static_cast<uint32_t>(id), static_cast<uint32_t>(to), p});
        }
        if (has_prob && st["prob"].size() != succ.size())
            fail("state " + std::to_string(id) + ": prob support must equal the successor list");
    }
    ExplicitGameBuilder b;
    for (auto& [owner, color] : meta) b.add_state(owner, color);
    for (const E& e : edges) b.add_edge(e.from, e.to, e.prob);
    ExplicitGame game = b.build();
    auto violations = game.validate();
    if (!violations.empty()) fail("invalid game: " + violations.front());
    return game;
}

Json game_to_json(const ExplicitGame& game) {
    Json states = Json::array();
    game.present().for_each([&](uint32_t s) {
        Json st;
        st["id"] = s;
        st["owner"] = game.owner(s) == Owner::P0 ? "P0"
                      : game.owner(s) == Owner::P1 ? "P1"
                                                   : "R";
        st["color"] = game.color(s);
        st["succ"] = game.successors(s);
        if (game.owner(s) == Owner::Random) {
            Json prob = Json::object();
            auto succ = game.successors(s);
            auto probs = game.probabilities(s);
            for (size_t i = 0; i < succ.size(); i++)
                prob[std::to_string(succ[i])] = probs[i];
            st["prob"] = std::move(prob);
        }
        states.push_back(std::move(st));
    });
    return Json{{"states", std::move(states)}};
}

SglcsPtr lcs_from_json(const Json& j) {
    std::vector<std::string> channels = need(j, "channels").get<std::vector<std::string>>();
    std::vector<std::string> alphabet = need(j, "alphabet").get<std::vector<std::string>>();
    if (channels.empty()) fail("\"channels\" must be nonempty");
    if (alphabet.empty()) fail("\"alphabet\" must be nonempty");
    double lambda = need(j, "lambda").get<double>();
    if (!(lambda > 0.0 && lambda < 1.0)) fail("field \"lambda\" must lie in (0,1)");

    std::vector<ControlInfo> controls;
    for (const Json& c : need(j, "controls")) {
        ControlInfo info;
        info.name = need(c, "id").get<std::string>();
        std::string owner = need(c, "owner").get<std::string>();
        if (owner != "P0" && owner != "P1")
            fail("control owner must be \"P0\" or \"P1\", got \"" + owner + "\"");
        info.owner = owner == "P0" ? 0 : 1;
        info.color = need(c, "color").get<uint32_t>();
        for (const ControlInfo& prev : controls)
            if (prev.name == info.name) fail("duplicate control id \"" + info.name + "\"");
        controls.push_back(std::move(info));
    }
    auto control_index = [&](const std::string& name) -> uint32_t {
        for (uint32_t i = 0; i < controls.size(); i++)
            if (controls[i].name == name) return i;
        fail("unknown control \"" + name + "\"");
    };
    auto lookup = [&](const std::vector<std::string>& xs, const std::string& x,
                      const char* kind) -> uint32_t {
        for (uint32_t i = 0; i < xs.size(); i++)
            if (xs[i] == x) return i;
        fail(std::string("unknown ") + kind + " \"" + x + "\"");
    };

    std::vector<LcsRule> rules;
    for (const Json& r : need(j, "rules")) {
        LcsRule rule{};
        rule.from = control_index(need(r, "from").get<std::string>());
        rule.to = control_index(need(r, "to").get<std::string>());
        std::string op = need(r, "op").get<std::string>();
        if (op == "nop") {
            rule.op = OpKind::Nop;
        } else {
            rule.op = op == "send" ? OpKind::Send
                      : op == "recv"
                          ? OpKind::Recv
                          : (fail("rule op must be nop|send|recv, got \"" + op + "\""), OpKind::Nop);
            rule.chan = lookup(channels, need(r, "chan").get<std::string>(), "channel");
            rule.msg =
                static_cast<uint8_t>(lookup(alphabet, need(r, "msg").get<std::string>(), "message"));
        }
        rules.push_back(rule);
    }
    return std::make_shared<Sglcs>(std::move(channels), std::move(alphabet), std::move(controls),
                                   std::move(rules), lambda);
}

Json lcs_to_json(const Sglcs& lcs) {
    Json j;
    j["channels"] = lcs.channels();
    j["alphabet"] = lcs.alphabet();
    j["lambda"] = lcs.lambda();
    Json controls = Json::array();
    for (uint32_t c = 0; c < lcs.control_count(); c++) {
        const ControlInfo& info = lcs.control(c);
        controls.push_back(Json{{"id", info.name},
                                {"owner", info.owner == 0 ? "P0" : "P1"},
                                {"color", info.color}});
    }
    j["controls"] = std::move(controls);
    Json rules = Json::array();
    for (const LcsRule& r : lcs.rules()) {
        Json rj{{"from", lcs.control(r.from).name}, {"to", lcs.control(r.to).name}};
        switch (r.op) {
        case OpKind::Nop: rj["op"] = "nop"; break;
        case OpKind::Send: rj["op"] = "send"; break;
        case OpKind::Recv: rj["op"] = "recv"; break;
        }
        if (r.op != OpKind::Nop) {
            rj["chan"] = lcs.channels()[r.chan];
            rj["msg"] = lcs.alphabet()[r.msg];
        }
        rules.push_back(std::move(rj));
    }
    j["rules"] = std::move(rules);
    return j;
}

ParsedModel parse_model_json(const Json& j) {
    ParsedModel m;
    if (j.contains("states")) m.game = game_from_json(j);
    else if (j.contains("controls")) m.lcs = lcs_from_json(j);
    else fail("model must contain \"states\" (game) or \"controls\" (channel system)");
    return m;
}

ParsedModel parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open \"" + path + "\"");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail("syntax error in \"" + path + "\": " + e.what());
    }
    return parse_model_json(j);
}

namespace {

std::string symbol_name(const Sglcs& lcs, uint32_t sym) {
    return sym == lcs.alphabet_size() ? "#" : lcs.alphabet()[sym];
}

uint32_t symbol_index(const Sglcs& lcs, const std::string& name) {
    if (name == "#") return lcs.alphabet_size();
    for (uint32_t i = 0; i < lcs.alphabet_size(); i++)
        if (lcs.alphabet()[i] == name) return i;
    fail("unknown symbol \"" + name + "\"");
}

} // namespace

Json dfa_to_json(const Dfa& dfa, const Sglcs& lcs) {
    Json j;
    j["states"] = dfa.num_states();
    if (dfa.is_empty_language()) j["initial"] = nullptr;
    else j["initial"] = 0;
    Json acc = Json::array();
    for (uint32_t s = 0; s < dfa.num_states(); s++)
        if (dfa.is_accepting(s)) acc.push_back(s);
    j["accepting"] = std::move(acc);
    Json delta = Json::array();
    for (uint32_t s = 0; s < dfa.num_states(); s++)
        for (uint32_t a = 0; a < dfa.num_symbols(); a++)
            if (dfa.delta(s, a) >= 0)
                delta.push_back(Json::array({s, symbol_name(lcs, a), dfa.delta(s, a)}));
    j["delta"] = std::move(delta);
    return j;
}

Dfa dfa_from_json(const Json& j, const Sglcs& lcs) {
    uint32_t n = need(j, "states").get<uint32_t>();
    if (n == 0) return Dfa::empty(lcs.alphabet_size() + 1);
    RawDfa raw;
    raw.num_symbols = lcs.alphabet_size() + 1;
    for (uint32_t s = 0; s < n; s++) raw.add_state();
    raw.initial = need(j, "initial").get<uint32_t>();
    for (const Json& s : need(j, "accepting")) raw.accepting[s.get<uint32_t>()] = true;
    for (const Json& t : need(j, "delta")) {
        uint32_t from = t.at(0).get<uint32_t>();
        uint32_t sym = symbol_index(lcs, t.at(1).get<std::string>());
        uint32_t to = t.at(2).get<uint32_t>();
        raw.delta[from][sym] = static_cast<int32_t>(to);
    }
    return raw.canonicalize();
}

Json region_to_json(const ConfigLanguage& lang) {
    const Sglcs& lcs = *lang.lcs();
    Json slots = Json::object();
    for (uint32_t c = 0; c < lcs.control_count(); c++)
        for (int bit = 0; bit <= 1; bit++)
            slots[lcs.control(c).name + "/" + std::to_string(bit)] =
                dfa_to_json(lang.slot(c, bit), lcs);
    return Json{{"slots", std::move(slots)}};
}

ConfigLanguage region_from_json(SglcsPtr lcs, const Json& j) {
    ConfigLanguage lang = ConfigLanguage::empty(lcs);
    const Json& slots = need(j, "slots");
    for (auto& [key, value] : slots.items()) {
        auto sep = key.rfind('/');
        if (sep == std::string::npos) fail("slot key must be control/bit: \"" + key + "\"");
        int ci = lcs->control_index(key.substr(0, sep));
        if (ci < 0) fail("unknown control in slot key \"" + key + "\"");
        int bit = std::stoi(key.substr(sep + 1));
        if (bit != 0 && bit != 1) fail("slot bit must be 0 or 1 in \"" + key + "\"");
        lang.set_slot(static_cast<uint32_t>(ci), bit, dfa_from_json(value, *lcs));
    }
    return lang;
}

std::string region_to_dot(const ConfigLanguage& lang, const std::string& name) {
    const Sglcs& lcs = *lang.lcs();
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
    for (uint32_t c = 0; c < lcs.control_count(); c++) {
        for (int bit = 0; bit <= 1; bit++) {
            const Dfa& d = lang.slot(c, bit);
            std::string prefix = "s" + std::to_string(c) + "_" + std::to_string(bit) + "_";
            os << "  subgraph \"cluster_" << lcs.control(c).name << "_" << bit << "\" {\n";
            os << "    label=\"" << lcs.control(c).name << " / bit " << bit << "\";\n";
            if (d.is_empty_language()) {
                os << "    \"" << prefix << "none\" [shape=plaintext,label=\"(empty)\"];\n";
            } else {
                for (uint32_t s = 0; s < d.num_states(); s++) {
                    os << "    \"" << prefix << s << "\" [shape="
                       << (d.is_accepting(s) ? "doublecircle" : "circle") << ",label=\"" << s
                       << "\"" << (s == 0 ? ",penwidth=2" : "") << "];\n";
                }
                for (uint32_t s = 0; s < d.num_states(); s++)
                    for (uint32_t a = 0; a < d.num_symbols(); a++)
                        if (d.delta(s, a) >= 0)
                            os << "    \"" << prefix << s << "\" -> \"" << prefix
                               << d.delta(s, a) << "\" [label=\"" << symbol_name(lcs, a)
                               << "\"];\n";
            }
            os << "  }\n";
        }
    }
    os << "}\n";
    return os.str();
}

Json strategy_to_json(const Sglcs& lcs, const RegularStrategy& strat) {
    Json rules = Json::array();
    for (const GuardedRule& gr : strat.rules) {
        const LcsRule& rule = lcs.rules()[gr.rule_index];
        Json rj;
        rj["from"] = lcs.control(rule.from).name;
        rj["to"] = lcs.control(rule.to).name;
        switch (rule.op) {
        case OpKind::Nop: rj["op"] = "nop"; break;
        case OpKind::Send: rj["op"] = "send"; break;
        case OpKind::Recv: rj["op"] = "recv"; break;
        }
        if (rule.op != OpKind::Nop) {
            rj["chan"] = lcs.channels()[rule.chan];
            rj["msg"] = lcs.alphabet()[rule.msg];
        }
        rj["guard"] = dfa_to_json(gr.guard, lcs);
        rules.push_back(std::move(rj));
    }
    return Json{{"owner", strat.owner}, {"rules", std::move(rules)}};
}

RegularStrategy strategy_from_json(const Sglcs& lcs, const Json& j) {
    RegularStrategy strat;
    strat.owner = need(j, "owner").get<int>();
    for (const Json& rj : need(j, "rules")) {
        std::string from = need(rj, "from").get<std::string>();
        std::string to = need(rj, "to").get<std::string>();
        std::string op = need(rj, "op").get<std::string>();
        int found = -1;
        for (uint32_t ri = 0; ri < lcs.rules().size(); ri++) {
            const LcsRule& rule = lcs.rules()[ri];
            if (lcs.control(rule.from).name != from || lcs.control(rule.to).name != to) continue;
            std::string rop = rule.op == OpKind::Nop ? "nop"
                              : rule.op == OpKind::Send ? "send"
                                                        : "recv";
            if (rop != op) continue;
            if (rule.op != OpKind::Nop &&
                (lcs.channels()[rule.chan] != need(rj, "chan").get<std::string>() ||
                 lcs.alphabet()[rule.msg] != need(rj, "msg").get<std::string>()))
                continue;
            found = static_cast<int>(ri);
            break;
        }
        if (found < 0) fail("strategy rule does not match any system rule");
        strat.rules.push_back(
            {static_cast<uint32_t>(found), dfa_from_json(need(rj, "guard"), lcs)});
    }
    return strat;
}

Configuration parse_config_literal(const Sglcs& lcs, const std::string& literal) {
    auto first = literal.find(':');
    auto second = first == std::string::npos ? std::string::npos
                                             : literal.find(':', first + 1);
    if (second == std::string::npos)
        fail("configuration literal must be control:bit:w1#w2, got \"" + literal + "\"");
    std::string control = literal.substr(0, first);
    std::string bit_s = literal.substr(first + 1, second - first - 1);
    std::string contents_s = literal.substr(second + 1);
    int ci = lcs.control_index(control);
    if (ci < 0) fail("unknown control \"" + control + "\"");
    if (bit_s != "0" && bit_s != "1") fail("bit must be 0 or 1, got \"" + bit_s + "\"");

    Contents contents(lcs.channel_count());
    uint32_t chan = 0;
    size_t pos = 0;
    while (pos < contents_s.size()) {
        if (contents_s[pos] == '#') {
            chan++;
            pos++;
            if (chan >= lcs.channel_count()) fail("too many channel separators in literal");
            continue;
        }
        // greedy longest alphabet match
        int best = -1;
        size_t best_len = 0;
        for (uint32_t m = 0; m < lcs.alphabet_size(); m++) {
            const std::string& tok = lcs.alphabet()[m];
            if (tok.size() > best_len && contents_s.compare(pos, tok.size(), tok) == 0) {
                best = static_cast<int>(m);
                best_len = tok.size();
            }
        }
        if (best < 0) fail("cannot parse contents at \"" + contents_s.substr(pos) + "\"");
        contents[chan].push_back(static_cast<char>(best));
        pos += best_len;
    }
    return make_config(lcs, static_cast<uint32_t>(ci),
                       static_cast<uint8_t>(bit_s == "1" ? 1 : 0), std::move(contents));
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ArtifactWriter::ArtifactWriter(std::string dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

void ArtifactWriter::write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ + "/" + name, std::ios::binary);
    if (!out) fail("cannot write \"" + dir_ + "/" + name + "\"");
    out << content;
    std::ostringstream hex;
    hex << std::hex << fnv1a64(content);
    entries_.emplace_back(name, "fnv1a64:" + hex.str());
}

void ArtifactWriter::write_json(const std::string& name, const Json& j) {
    write(name, j.dump(2) + "\n");
}

Json ArtifactWriter::finish() {
    Json files = Json::array();
    for (const auto& [name, digest] : entries_)
        files.push_back(Json{{"path", name}, {"digest", digest}});
    Json manifest{{"files", std::move(files)}};
    std::ofstream out(dir_ + "/manifest.json", std::ios::binary);
    out << manifest.dump(2) << "\n";
    return manifest;
}

} // namespace lcspg
