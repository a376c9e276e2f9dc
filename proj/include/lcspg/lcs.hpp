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

#ifndef LCSPG_LCS_HPP
#define LCSPG_LCS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lcspg/random_models.hpp"

namespace lcspg {

/// channel word; each char holds a message index into the alphabet
using Word = std::string;
/// channel contents, one word per declared channel
using Contents = std::vector<Word>;

enum class OpKind : uint8_t { Nop, Send, Recv };

struct LcsRule {
    uint32_t from;
    OpKind op;
    uint32_t chan; // unused for Nop
    uint8_t msg;   // unused for Nop
    uint32_t to;
};

struct ControlInfo {
    std::string name;
    int owner; // 0 or 1
    uint32_t color;
};

/**
 * A stochastic game over a finite control graph with lossy fifo
 * channels. Player phase (bit 1) picks an enabled rule; loss phase
 * (bit 0) drops each queued message independently with rate lambda.
 * Configurations with no enabled rule get a completion edge back to
 * the loss phase so the induced game stays sink-free.
 */
class Sglcs {
public:
    Sglcs(std::vector<std::string> channels, std::vector<std::string> alphabet,
          std::vector<ControlInfo> controls, std::vector<LcsRule> rules, double lambda);

    uint32_t channel_count() const { return static_cast<uint32_t>(channels_.size()); }
    uint32_t alphabet_size() const { return static_cast<uint32_t>(alphabet_.size()); }
    uint32_t control_count() const { return static_cast<uint32_t>(controls_.size()); }
    const std::vector<std::string>& channels() const { return channels_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const ControlInfo& control(uint32_t c) const { return controls_[c]; }
    const std::vector<LcsRule>& rules() const { return rules_; }
    const std::vector<uint32_t>& rules_from(uint32_t control) const {
        return rules_by_control_[control];
    }
    double lambda() const { return lambda_; }
    uint32_t max_color() const;
    /// -1 when the name is unknown
    int control_index(const std::string& name) const;

    bool same_signature(const Sglcs& o) const;

    std::string format_word(const Word& w) const;
    std::string format_contents(const Contents& x) const;

private:
    std::vector<std::string> channels_;
    std::vector<std::string> alphabet_;
    std::vector<ControlInfo> controls_;
    std::vector<LcsRule> rules_;
    std::vector<std::vector<uint32_t>> rules_by_control_;
    double lambda_;
};

using SglcsPtr = std::shared_ptr<const Sglcs>;

struct Configuration {
    uint32_t control = 0;
    uint8_t bit = 1; // 1 = player move, 0 = loss step
    Contents contents;

    bool operator==(const Configuration& o) const = default;
    bool operator<(const Configuration& o) const {
        if (control != o.control) return control < o.control;
        if (bit != o.bit) return bit < o.bit;
        return contents < o.contents;
    }
};

Configuration make_config(const Sglcs& lcs, uint32_t control, uint8_t bit,
                          Contents contents = {});

std::string format_config(const Sglcs& lcs, const Configuration& c);

/// true iff the rule can fire from the player-phase configuration
bool enabled(const Sglcs& lcs, const LcsRule& rule, const Configuration& config);

/// the configuration the rule produces (requires enabled())
Configuration apply_rule(const Sglcs& lcs, const LcsRule& rule, const Configuration& config);

struct Successor {
    Configuration config;
    double prob; // 1.0 on player-phase edges
};

/**
 * All successors of a configuration. A player-phase configuration
 * yields one successor per enabled rule, or the single completion edge
 * when nothing is enabled. A loss-phase configuration yields every
 * subword outcome with its probability; total content length is
 * guarded (throws TooLongError above 20).
 */
std::vector<Successor> successors(const Sglcs& lcs, const Configuration& config);

/**
 * Exact per-message loss distribution: the probability of reaching
 * contents y from x is a * lambda^(b-c) * (1-lambda)^c with b, c the
 * message counts of x and y and a the number of position subsets of x
 * spelling y. Support is exactly the set of per-channel subwords.
 */
std::map<Contents, double> loss_distribution(const Contents& contents, double lambda);

/// one sampled loss step; each message survives independently
Contents sample_loss(const Contents& contents, double lambda, Rng& rng);
Contents sample_loss(const Contents& contents, double lambda, uint64_t seed);

/// x is a per-channel subword of y
bool is_subword(const Word& x, const Word& y);
bool contents_dominated(const Contents& x, const Contents& y);

} // namespace lcspg

#endif // LCSPG_LCS_HPP
