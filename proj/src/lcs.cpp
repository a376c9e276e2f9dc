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

#include "lcspg/lcs.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

#include "lcspg/errors.hpp"

namespace lcspg {

Sglcs::Sglcs(std::vector<std::string> channels, std::vector<std::string> alphabet,
             std::vector<ControlInfo> controls, std::vector<LcsRule> rules, double lambda)
    : channels_(std::move(channels)),
      alphabet_(std::move(alphabet)),
      controls_(std::move(controls)),
      rules_(std::move(rules)),
      lambda_(lambda) {
    if (!(lambda_ > 0.0 && lambda_ < 1.0))
        throw ParseError("lambda must lie in the open interval (0,1)");
    rules_by_control_.resize(controls_.size());
    for (uint32_t i = 0; i < rules_.size(); i++) {
        const LcsRule& r = rules_[i];
        if (r.from >= controls_.size() || r.to >= controls_.size())
            throw ParseError("rule references an undeclared control");
        if (r.op != OpKind::Nop && (r.chan >= channels_.size() || r.msg >= alphabet_.size()))
            throw ParseError("rule references an undeclared channel or message");
        rules_by_control_[r.from].push_back(i);
    }
}

uint32_t Sglcs::max_color() const {
    uint32_t m = 0;
    for (const auto& c : controls_) m = std::max(m, c.color);
    return m;
}

int Sglcs::control_index(const std::string& name) const {
    for (uint32_t i = 0; i < controls_.size(); i++)
        if (controls_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool Sglcs::same_signature(const Sglcs& o) const {
    return channels_ == o.channels_ && alphabet_ == o.alphabet_ &&
           controls_.size() == o.controls_.size();
}

std::string Sglcs::format_word(const Word& w) const {
    std::string out;
    for (char m : w) out += alphabet_[static_cast<uint8_t>(m)];
    return out;
}

std::string Sglcs::format_contents(const Contents& x) const {
    std::string out;
    for (size_t c = 0; c < x.size(); c++) {
        if (c) out += '#';
        out += format_word(x[c]);
    }
    return out;
}

Configuration make_config(const Sglcs& lcs, uint32_t control, uint8_t bit, Contents contents) {
    Configuration c;
    c.control = control;
    c.bit = bit;
    c.contents = std::move(contents);
    c.contents.resize(lcs.channel_count());
    return c;
}

std::string format_config(const Sglcs& lcs, const Configuration& c) {
    return lcs.control(c.control).name + ":" + std::to_string(int(c.bit)) + ":" +
           lcs.format_contents(c.contents);
}

bool enabled(const Sglcs& lcs, const LcsRule& rule, const Configuration& config) {
    if (config.bit != 1)
        throw PhaseMismatchError("enabled: configuration is not in the player phase");
    if (rule.from != config.control)
        throw PhaseMismatchError("enabled: rule does not start at the configuration's control");
    (void)lcs;
    if (rule.op != OpKind::Recv) return true;
    const Word& w = config.contents[rule.chan];
    return !w.empty() && static_cast<uint8_t>(w[0]) == rule.msg;
}

Configuration apply_rule([[maybe_unused]] const Sglcs& lcs, const LcsRule& rule,
                         const Configuration& config) {
    assert(enabled(lcs, rule, config));
    Configuration next = config;
    next.control = rule.to;
    next.bit = 0;
    switch (rule.op) {
    case OpKind::Nop: break;
    case OpKind::Send: next.contents[rule.chan].push_back(static_cast<char>(rule.msg)); break;
    case OpKind::Recv: next.contents[rule.chan].erase(0, 1); break;
    }
    return next;
}

std::vector<Successor> successors(const Sglcs& lcs, const Configuration& config) {
    std::vector<Successor> out;
    if (config.bit == 1) {
        for (uint32_t ri : lcs.rules_from(config.control)) {
            const LcsRule& r = lcs.rules()[ri];
            if (enabled(lcs, r, config)) out.push_back({apply_rule(lcs, r, config), 1.0});
        }
        if (out.empty()) {
            Configuration stay = config;
            stay.bit = 0;
            out.push_back({stay, 1.0}); // completion edge, keeps the game sink-free
        }
    } else {
        for (auto& [contents, prob] : loss_distribution(config.contents, lcs.lambda())) {
            Configuration next;
            next.control = config.control;
            next.bit = 1;
            next.contents = contents;
            out.push_back({std::move(next), prob});
        }
    }
    return out;
}

namespace {

/// number of distinct position subsets of w spelling sub
double embedding_count(const Word& sub, const Word& w) {
    // classic distinct-subsequence count
    std::vector<double> dp(sub.size() + 1, 0.0);
    dp[0] = 1.0;
    for (char c : w)
        for (size_t j = sub.size(); j >= 1; j--)
            if (sub[j - 1] == c) dp[j] += dp[j - 1];
    return dp[sub.size()];
}

/// all distinct subwords of w, via iterated single-deletion closure
std::set<Word> distinct_subwords(const Word& w) {
    std::set<Word> all{w};
    std::vector<Word> frontier{w};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& u : frontier) {
            for (size_t i = 0; i < u.size(); i++) {
                Word v = u;
                v.erase(i, 1);
                if (all.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return all;
}

} // namespace

std::map<Contents, double> loss_distribution(const Contents& contents, double lambda) {
    size_t total = 0;
    for (const Word& w : contents) total += w.size();
    if (total > 20) throw TooLongError("loss_distribution: total content length exceeds 20");

    std::vector<std::vector<std::pair<Word, double>>> per_channel;
    for (const Word& w : contents) {
        std::vector<std::pair<Word, double>> dist;
        for (const Word& sub : distinct_subwords(w)) {
            double a = embedding_count(sub, w);
            double p = a * std::pow(lambda, double(w.size() - sub.size())) *
                       std::pow(1.0 - lambda, double(sub.size()));
            dist.emplace_back(sub, p);
        }
        per_channel.push_back(std::move(dist));
    }

    std::map<Contents, double> result;
    Contents current(contents.size());
    auto rec = [&](auto&& self, size_t c, double p) -> void {
        if (c == per_channel.size()) {
            result[current] += p;
            return;
        }
        for (const auto& [w, pw] : per_channel[c]) {
            current[c] = w;
            self(self, c + 1, p * pw);
        }
    };
    rec(rec, 0, 1.0);
    return result;
}

Contents sample_loss(const Contents& contents, double lambda, Rng& rng) {
    Contents out(contents.size());
    for (size_t c = 0; c < contents.size(); c++) {
        out[c].reserve(contents[c].size());
        for (char m : contents[c])
            if (rng.unit() < 1.0 - lambda) out[c].push_back(m);
    }
    return out;
}

Contents sample_loss(const Contents& contents, double lambda, uint64_t seed) {
    Rng rng(seed);
    return sample_loss(contents, lambda, rng);
}

bool is_subword(const Word& x, const Word& y) {
    size_t i = 0;
    for (size_t j = 0; j < y.size() && i < x.size(); j++)
        if (x[i] == y[j]) i++;
    return i == x.size();
}

bool contents_dominated(const Contents& x, const Contents& y) {
    assert(x.size() == y.size());
    for (size_t c = 0; c < x.size(); c++)
        if (!is_subword(x[c], y[c])) return false;
    return true;
}

} // namespace lcspg
