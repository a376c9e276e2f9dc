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

/*
 * End-to-end acceptance suite. Each criterion prints exactly one
 * PASS/FAIL line; the process exits nonzero if any criterion fails.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lcspg/errors.hpp"
#include "lcspg/finite_solver.hpp"
#include "lcspg/json_io.hpp"
#include "lcspg/oracle.hpp"
#include "lcspg/random_models.hpp"
#include "lcspg/sim.hpp"
#include "lcspg/strategy.hpp"
#include "lcspg/symbolic_solver.hpp"
#include "support.hpp"

using namespace lcspg;
using namespace lcspg::testsupport;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

SglcsPtr load_fixture(const std::string& name) {
    ParsedModel m = parse_model_file(std::string(LCSPG_FIXTURE_DIR) + "/" + name);
    if (!m.lcs) throw ParseError(name + " is not a channel system");
    return m.lcs;
}

const std::vector<std::string> kLcsFixtures = {
    "pumping.json", "three_color.json", "nosend_toggle.json", "nosend_deadlock.json",
    "nosend_mixed.json"};
const std::vector<std::string> kNoSendFixtures = {
    "nosend_toggle.json", "nosend_deadlock.json", "nosend_mixed.json"};

// ---------------------------------------------------------------- 1
bool zielonka_differential(std::string& detail) {
    double t0 = now_seconds();
    for (uint64_t i = 0; i < 200; i++) {
        Rng rng(split_seed(101, i));
        RandomGameParams params;
        params.states = 2 + static_cast<uint32_t>(rng.below(49));
        params.max_out_degree = 1 + static_cast<uint32_t>(rng.below(3));
        params.max_color = static_cast<uint32_t>(rng.below(5));
        params.random_fraction = 0.0;
        ExplicitGame game = random_game(params, split_seed(102, i));
        ZielonkaResult z = zielonka(game);
        ParityResult p = parity_as(game, game.max_color());
        if (!(p.c_set == z.winning[p.player])) {
            detail = "mismatch on instance " + std::to_string(i);
            return false;
        }
    }
    double elapsed = now_seconds() - t0;
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "200 games in " << elapsed << "s";
    detail = os.str();
    return elapsed < 10.0;
}

// ---------------------------------------------------------------- 2
bool brute_force_determinacy(std::string& detail) {
    double t0 = now_seconds();
    for (uint64_t i = 0; i < 100; i++) {
        Rng rng(split_seed(201, i));
        RandomGameParams params;
        params.states = 2 + static_cast<uint32_t>(rng.below(6));
        params.max_out_degree = 1 + static_cast<uint32_t>(rng.below(2));
        params.max_color = static_cast<uint32_t>(rng.below(4));
        params.random_fraction = 0.4;
        ExplicitGame game = random_game(params, split_seed(202, i));
        ParityResult p = parity_as(game, game.max_color());
        EnumVerdict v = enumerate_verify(game, p.player, p.c_set);
        if (!v.confirmed) {
            detail = "counterexample on instance " + std::to_string(i) + " at state " +
                     std::to_string(v.witness->state);
            return false;
        }
    }
    double elapsed = now_seconds() - t0;
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << "100 games in " << elapsed << "s";
    detail = os.str();
    return elapsed < 60.0;
}

// ---------------------------------------------------------------- 3
bool loss_normalization(std::string& detail) {
    uint64_t checked = 0;
    for (double lambda : {0.1, 0.5, 0.9}) {
        for (uint32_t channels = 1; channels <= 2; channels++) {
            // all contents with total length <= 6 over a 2-letter alphabet
            std::vector<Contents> tuples{Contents(channels)};
            for (size_t round = 0; round < 6; round++) {
                size_t count = tuples.size();
                for (size_t idx = 0; idx < count; idx++) {
                    size_t len = 0;
                    for (const Word& w : tuples[idx]) len += w.size();
                    if (len != round) continue;
                    for (uint32_t c = 0; c < channels; c++) {
                        for (char a : {0, 1}) {
                            Contents grown = tuples[idx];
                            grown[c].push_back(a);
                            tuples.push_back(grown);
                        }
                    }
                }
            }
            for (const Contents& x : tuples) {
                double sum = 0;
                for (const auto& [y, p] : loss_distribution(x, lambda)) sum += p;
                if (std::abs(sum - 1.0) > 1e-12) {
                    detail = "sum " + std::to_string(sum) + " off by more than 1e-12";
                    return false;
                }
                checked++;
            }
        }
    }
    detail = std::to_string(checked) + " distributions normalized";
    return true;
}

// ---------------------------------------------------------------- 4
namespace regset_oracle {

SglcsPtr system() {
    std::vector<ControlInfo> controls{{"s", 0, 0}, {"t", 1, 1}, {"u", 0, 2}};
    std::vector<LcsRule> rules{
        {0, OpKind::Recv, 0, 0, 1}, {0, OpKind::Recv, 1, 1, 2}, {1, OpKind::Send, 0, 1, 0},
        {1, OpKind::Nop, 0, 0, 2},  {2, OpKind::Recv, 0, 1, 0},
    };
    return std::make_shared<Sglcs>(std::vector<std::string>{"c", "d"},
                                   std::vector<std::string>{"a", "b"}, controls, rules, 0.5);
}

std::vector<Configuration> all_configs(const Sglcs& lcs, size_t max_len) {
    std::vector<Contents> tuples{Contents(lcs.channel_count())};
    for (size_t round = 0; round < max_len; round++) {
        size_t count = tuples.size();
        for (size_t idx = 0; idx < count; idx++) {
            size_t len = 0;
            for (const Word& w : tuples[idx]) len += w.size();
            if (len != round) continue;
            for (uint32_t c = 0; c < lcs.channel_count(); c++)
                for (uint32_t a = 0; a < lcs.alphabet_size(); a++) {
                    Contents grown = tuples[idx];
                    grown[c].push_back(static_cast<char>(a));
                    tuples.push_back(grown);
                }
        }
    }
    std::vector<Configuration> out;
    for (uint32_t control = 0; control < lcs.control_count(); control++)
        for (int bit = 0; bit <= 1; bit++)
            for (const Contents& t : tuples)
                out.push_back(make_config(lcs, control, static_cast<uint8_t>(bit), t));
    return out;
}

ConfigLanguage random_language(SglcsPtr lcs, uint64_t seed) {
    Rng rng(seed);
    std::vector<Configuration> chosen;
    for (const Configuration& c : all_configs(*lcs, 2))
        if (rng.below(5) == 0) chosen.push_back(c);
    ConfigLanguage lang = ConfigLanguage::from_configs(lcs, chosen);
    if (rng.below(2)) lang = lang.upward_closure();
    if (rng.below(4) == 0) lang = lang.complement();
    return lang;
}

std::vector<Word> word_subwords(const Word& w) {
    std::vector<Word> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << w.size()); mask++) {
        Word kept;
        for (size_t i = 0; i < w.size(); i++)
            if (mask & (uint64_t(1) << i)) kept.push_back(w[i]);
        out.push_back(kept);
    }
    return out;
}

bool check(std::string& detail) {
    SglcsPtr lcs = system();
    std::vector<Configuration> probes = all_configs(*lcs, 3);
    uint64_t checks = 0;
    for (uint64_t seed = 0; seed < 50; seed++) {
        ConfigLanguage a = random_language(lcs, split_seed(401, seed));
        ConfigLanguage b = random_language(lcs, split_seed(402, seed));

        ConfigLanguage u = unite(a, b), inter = intersect(a, b), comp = a.complement();
        ConfigLanguage up = a.upward_closure();
        ConfigLanguage ploss = pre_loss(a), pdead = pre_deadlock(a);
        ConfigLanguage ppre = pre_full(a, PreMode::Pre), pdual = pre_full(a, PreMode::DualPre);
        std::vector<ConfigLanguage> prules;
        for (uint32_t ri = 0; ri < lcs->rules().size(); ri++)
            prules.push_back(pre_rule(a, ri));
        std::vector<Configuration> a_members = a.members_up_to(3);

        auto fail = [&](const char* op, const Configuration& c) {
            detail = std::string(op) + " disagrees at " + format_config(*lcs, c) + " (seed " +
                     std::to_string(seed) + ")";
            return false;
        };

        for (const Configuration& c : probes) {
            bool in_a = a.contains(c), in_b = b.contains(c);
            if (u.contains(c) != (in_a || in_b)) return fail("union", c);
            if (inter.contains(c) != (in_a && in_b)) return fail("intersection", c);
            if (comp.contains(c) != !in_a) return fail("complement", c);

            bool dominated = false;
            for (const Configuration& m : a_members)
                if (m.control == c.control && m.bit == c.bit &&
                    contents_dominated(m.contents, c.contents))
                    dominated = true;
            if (up.contains(c) != dominated) return fail("upward_closure", c);

            for (uint32_t ri = 0; ri < lcs->rules().size(); ri++) {
                const LcsRule& rule = lcs->rules()[ri];
                bool expect = c.bit == 1 && c.control == rule.from &&
                              enabled(*lcs, rule, c) && a.contains(apply_rule(*lcs, rule, c));
                if (prules[ri].contains(c) != expect) return fail("pre_rule", c);
            }

            if (c.bit == 0) {
                bool expect = false;
                for (const Word& w0 : word_subwords(c.contents[0]))
                    for (const Word& w1 : word_subwords(c.contents[1]))
                        if (a.contains(make_config(*lcs, c.control, 1, {w0, w1})))
                            expect = true;
                if (ploss.contains(c) != expect) return fail("pre_loss", c);
            } else if (ploss.contains(c)) {
                return fail("pre_loss", c);
            }

            bool deadlocked = true;
            if (c.bit == 1)
                for (uint32_t ri : lcs->rules_from(c.control))
                    if (enabled(*lcs, lcs->rules()[ri], c)) deadlocked = false;
            bool dead_expect = c.bit == 1 && deadlocked &&
                               a.contains(make_config(*lcs, c.control, 0, c.contents));
            if (pdead.contains(c) != dead_expect) return fail("pre_deadlock", c);

            bool some = false, all = true;
            for (const Successor& s : successors(*lcs, c)) {
                if (a.contains(s.config)) some = true;
                else all = false;
            }
            if (ppre.contains(c) != some) return fail("pre_full", c);
            if (pdual.contains(c) != all) return fail("dual pre_full", c);
            checks += 10;
        }

        // algebraic identities as exact language equalities
        if (!(unite(a, b).complement() == intersect(a.complement(), b.complement())) ||
            !(intersect(a, b).complement() == unite(a.complement(), b.complement()))) {
            detail = "De Morgan failed (seed " + std::to_string(seed) + ")";
            return false;
        }
        if (!(up.upward_closure() == up) || !difference(a, up).is_empty()) {
            detail = "closure identity failed (seed " + std::to_string(seed) + ")";
            return false;
        }
        if (!(pre_full(unite(a, b), PreMode::Pre) ==
              unite(pre_full(a, PreMode::Pre), pre_full(b, PreMode::Pre)))) {
            detail = "pre/union distributivity failed (seed " + std::to_string(seed) + ")";
            return false;
        }
        if (!(pdual == pre_full(a.complement(), PreMode::Pre).complement())) {
            detail = "pre/dual duality failed (seed " + std::to_string(seed) + ")";
            return false;
        }
    }
    detail = std::to_string(checks) + " membership checks over 50 language pairs";
    return true;
}

} // namespace regset_oracle

// ---------------------------------------------------------------- 5
bool symbolic_explicit_agreement(std::string& detail) {
    uint64_t compared = 0;
    for (const std::string& name : kNoSendFixtures) {
        SglcsPtr lcs = load_fixture(name);
        SymReport rep = sym_report(lcs);
        for (const Configuration& start : ConfigLanguage::universe(lcs).members_up_to(2)) {
            ReachableGame rg = build_reachable(*lcs, start);
            WinningReport wr = winning_report(rg.game);
            for (const auto& [cfg, id] : rg.ids) {
                for (int p = 0; p < 2; p++) {
                    if (rep.as_region[p].contains(cfg) != wr.as_region[p].test(id) ||
                        rep.wpp_region[p].contains(cfg) != wr.wpp_region[p].test(id)) {
                        detail = name + ": disagreement at " + format_config(*lcs, cfg);
                        return false;
                    }
                }
                compared++;
            }
        }
    }
    detail = std::to_string(compared) + " configurations compared across " +
             std::to_string(kNoSendFixtures.size()) + " fixtures";
    return true;
}

// ---------------------------------------------------------------- 6
bool pumping_system_regions(std::string& detail) {
    SglcsPtr lcs = load_fixture("pumping.json");
    SymReport rep = sym_report(lcs);
    ConfigLanguage universe = ConfigLanguage::universe(lcs);
    if (!rep.wpp_region[1].is_empty()) {
        detail = "player 1 keeps a positive-probability region";
        return false;
    }
    if (!(rep.as_region[0] == universe)) {
        detail = "player 0 almost-sure region is not the whole space";
        return false;
    }
    detail = "player-1 w.p.p. region empty, player-0 a.s. region is the universe";
    return true;
}

// ---------------------------------------------------------------- 7
bool three_color_regions(std::string& detail) {
    SglcsPtr lcs = load_fixture("three_color.json");
    if (lcs->max_color() != 2) {
        detail = "fixture does not use colors {0,1,2}";
        return false;
    }
    SymReport rep = sym_report(lcs);
    if (!(rep.as_region[0] == ConfigLanguage::universe(lcs))) {
        detail = "player 0 almost-sure region is not the whole space";
        return false;
    }
    detail = "player-0 a.s. region is the universe at colors {0,1,2}";
    return true;
}

// ---------------------------------------------------------------- 8
bool attractor_recurrence(std::string& detail) {
    for (const std::string& name : kLcsFixtures) {
        SglcsPtr lcs = load_fixture(name);
        std::vector<Configuration> starts;
        starts.push_back(make_config(*lcs, 0, 1));
        Contents loaded(lcs->channel_count());
        loaded[0] = Word(2, 0); // two messages queued
        starts.push_back(make_config(*lcs, 0, 1, loaded));
        AttractorSummary sum =
            attractor_stats(*lcs, nullptr, nullptr, starts, 500, 10000, split_seed(801, 1));
        if (sum.hit_fraction != 1.0) {
            detail = name + ": hit fraction " + std::to_string(sum.hit_fraction);
            return false;
        }
    }
    detail = "hit fraction 1.0 on all " + std::to_string(kLcsFixtures.size()) +
             " fixtures (500 runs x 10^4 steps)";
    return true;
}

// ---------------------------------------------------------------- 9
bool strategy_validation(std::string& detail) {
    uint64_t validated = 0, estimates = 0;
    double min_freq = 1.0;
    for (const std::string& name : kLcsFixtures) {
        SglcsPtr lcs = load_fixture(name);
        SymReport rep = sym_report(lcs);
        auto low_pair = parity_strategy_syn(lcs, rep.run_low);
        auto high_pair = parity_strategy_syn(lcs, rep.run_high);
        for (const RegularStrategy* s :
             {&low_pair.first, &low_pair.second, &high_pair.first, &high_pair.second}) {
            auto violations = validate_strategy(*lcs, *s);
            if (!violations.empty()) {
                detail = name + ": " + violations.front();
                return false;
            }
            validated++;
        }
        for (int p = 0; p < 2; p++) {
            if (rep.as_region[p].is_empty()) continue;
            const RegularStrategy& winner =
                p == rep.run_low.player ? low_pair.first : high_pair.first;
            Configuration start = *rep.as_region[p].shortest_member();
            for (uint64_t opp = 0; opp < 20; opp++) {
                RegularStrategy opponent =
                    random_regular_strategy(lcs, 1 - p, split_seed(901 + opp, opp));
                const RegularStrategy* s0 = p == 0 ? &winner : &opponent;
                const RegularStrategy* s1 = p == 0 ? &opponent : &winner;
                OutcomeEstimate est = estimate_outcome(*lcs, s0, s1, start, 200, 10000, 1000,
                                                       split_seed(902, opp));
                min_freq = std::min(min_freq, est.freq_parity[p]);
                estimates++;
                if (est.freq_parity[p] < 0.95) {
                    detail = name + ": winner parity frequency " +
                             std::to_string(est.freq_parity[p]) + " from " +
                             format_config(*lcs, start);
                    return false;
                }
            }
        }
    }
    std::ostringstream os;
    os.precision(3);
    os << validated << " strategies valid; " << estimates
       << " estimates, min winner frequency " << std::fixed << min_freq;
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- 10
bool termination_contract(std::string& detail) {
    // frozen regression expectations: stages of the two top-level
    // fixpoints and the total stage-trace length per fixture
    const std::map<std::string, std::array<size_t, 3>> expected = {
        {"pumping.json", {3, 1, 29}},         {"three_color.json", {1, 2, 14}},
        {"nosend_toggle.json", {2, 2, 8}},  {"nosend_deadlock.json", {2, 2, 17}},
        {"nosend_mixed.json", {2, 2, 17}},
    };
    std::string actual;
    bool all_match = true;
    for (const std::string& name : kLcsFixtures) {
        SglcsPtr lcs = load_fixture(name);
        std::vector<std::string> trace;
        SolverOptions opts;
        opts.trace = &trace;
        SymReport rep;
        try {
            rep = sym_report(lcs, opts);
        } catch (const CeilingExceededError& e) {
            detail = name + ": " + e.what();
            return false;
        }
        std::array<size_t, 3> got = {rep.run_low.stages.size(), rep.run_high.stages.size(),
                                     trace.size()};
        actual += name + ":{" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," +
                  std::to_string(got[2]) + "} ";
        auto it = expected.find(name);
        if (it == expected.end() || it->second != got) all_match = false;
    }
    detail = "stage counts " + actual;
    return all_match;
}

struct Criterion {
    int number;
    const char* name;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "zielonka differential", zielonka_differential},
        {2, "brute-force determinacy", brute_force_determinacy},
        {3, "loss normalization", loss_normalization},
        {4, "regset differential oracle", regset_oracle::check},
        {5, "symbolic/explicit agreement", symbolic_explicit_agreement},
        {6, "pumping-system reproduction", pumping_system_regions},
        {7, "three-color reproduction", three_color_regions},
        {8, "attractor recurrence", attractor_recurrence},
        {9, "strategy validation", strategy_validation},
        {10, "termination contract", termination_contract},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d (%s): %s%s%s\n", c.number, c.name, ok ? "PASS" : "FAIL",
                    detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        if (!ok) failures++;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
