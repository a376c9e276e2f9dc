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

#ifndef LCSPG_TESTS_SUPPORT_HPP
#define LCSPG_TESTS_SUPPORT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcspg/explicit_game.hpp"
#include "lcspg/lcs.hpp"

namespace lcspg::testsupport {

/// encodes a letter string ("ab") into a Word of alphabet indices
inline Word mkword(const Sglcs& lcs, const std::string& letters) {
    Word w;
    for (char ch : letters) {
        std::string key(1, ch);
        uint8_t idx = 255;
        for (uint32_t i = 0; i < lcs.alphabet_size(); i++)
            if (lcs.alphabet()[i] == key) idx = static_cast<uint8_t>(i);
        if (idx == 255) throw std::runtime_error("mkword: unknown letter");
        w.push_back(static_cast<char>(idx));
    }
    return w;
}

/// "ab#c" -> per-channel contents in declaration order
inline Contents mkcontents(const Sglcs& lcs, const std::string& literal) {
    Contents out;
    std::string seg;
    for (char ch : literal) {
        if (ch == '#') {
            out.push_back(mkword(lcs, seg));
            seg.clear();
        } else {
            seg.push_back(ch);
        }
    }
    out.push_back(mkword(lcs, seg));
    out.resize(lcs.channel_count());
    return out;
}

inline Configuration mkconfig(const Sglcs& lcs, const std::string& control, int bit,
                              const std::string& contents = "") {
    int ci = lcs.control_index(control);
    if (ci < 0) throw std::runtime_error("mkconfig: unknown control");
    return make_config(lcs, static_cast<uint32_t>(ci), static_cast<uint8_t>(bit),
                       mkcontents(lcs, contents));
}

/// single channel "c", alphabet {1}: p pumps, q risks the receive, r pays out
inline SglcsPtr pumping_lcs(double lambda = 0.5) {
    std::vector<ControlInfo> controls{{"p", 1, 0}, {"q", 1, 0}, {"r", 1, 1}};
    std::vector<LcsRule> rules{
        {0, OpKind::Send, 0, 0, 0}, // p --c!1--> p
        {0, OpKind::Nop, 0, 0, 1},  // p --nop--> q
        {1, OpKind::Nop, 0, 0, 1},  // q --nop--> q
        {1, OpKind::Recv, 0, 0, 2}, // q --c?1--> r
        {2, OpKind::Nop, 0, 0, 0},  // r --nop--> p
    };
    return std::make_shared<Sglcs>(std::vector<std::string>{"c"},
                                   std::vector<std::string>{"1"}, controls, rules, lambda);
}

/// colors 0/1/2 on controls named by color; the risky receive loop
inline SglcsPtr three_color_lcs(double lambda = 0.5) {
    std::vector<ControlInfo> controls{{"s0", 1, 0}, {"s1", 1, 1}, {"s2", 1, 2}};
    std::vector<LcsRule> rules{
        {0, OpKind::Send, 0, 0, 0}, // s0 --c!1--> s0
        {0, OpKind::Nop, 0, 0, 1},  // s0 --nop--> s1
        {1, OpKind::Recv, 0, 0, 0}, // s1 --c?1--> s0
        {1, OpKind::Nop, 0, 0, 2},  // s1 --nop--> s2
        {2, OpKind::Nop, 0, 0, 0},  // s2 --nop--> s0
    };
    return std::make_shared<Sglcs>(std::vector<std::string>{"c"},
                                   std::vector<std::string>{"1"}, controls, rules, lambda);
}

/**
 * The explicit game reachable from a start configuration. Terminates
 * when the reachable configuration space is finite, e.g. for systems
 * without send rules.
 */
struct ReachableGame {
    ExplicitGame game;
    std::map<Configuration, uint32_t> ids;
};

inline ReachableGame build_reachable(const Sglcs& lcs, const Configuration& start) {
    std::map<Configuration, uint32_t> ids;
    std::vector<Configuration> order;
    std::vector<std::vector<std::pair<uint32_t, double>>> edges;

    auto intern = [&](const Configuration& c) -> uint32_t {
        auto it = ids.find(c);
        if (it != ids.end()) return it->second;
        uint32_t id = static_cast<uint32_t>(order.size());
        ids.emplace(c, id);
        order.push_back(c);
        edges.emplace_back();
        return id;
    };
    intern(start);
    for (uint32_t cur = 0; cur < order.size(); cur++) {
        Configuration config = order[cur]; // copy: intern reallocates
        std::vector<std::pair<uint32_t, double>> out;
        for (const Successor& s : successors(lcs, config))
            out.emplace_back(intern(s.config), s.prob);
        edges[cur] = std::move(out);
    }

    ExplicitGameBuilder b;
    for (const Configuration& c : order) {
        Owner owner = c.bit == 0 ? Owner::Random
                                 : (lcs.control(c.control).owner == 0 ? Owner::P0 : Owner::P1);
        b.add_state(owner, lcs.control(c.control).color);
    }
    for (uint32_t s = 0; s < order.size(); s++)
        for (auto [t, p] : edges[s]) b.add_edge(s, t, p);
    return {b.build(), std::move(ids)};
}

} // namespace lcspg::testsupport

#endif // LCSPG_TESTS_SUPPORT_HPP
