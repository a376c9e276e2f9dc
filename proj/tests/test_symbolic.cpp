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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcspg/errors.hpp"
#include "lcspg/finite_solver.hpp"
#include "lcspg/json_io.hpp"
#include "lcspg/symbolic_solver.hpp"
#include "support.hpp"

using namespace lcspg;
using namespace lcspg::testsupport;

namespace {

SglcsPtr load_fixture(const std::string& name) {
    ParsedModel m = parse_model_file(std::string(LCSPG_FIXTURE_DIR) + "/" + name);
    REQUIRE(m.lcs != nullptr);
    return m.lcs;
}

ConfigLanguage control_slots(const SglcsPtr& lcs, const std::string& name) {
    int ci = lcs->control_index(name);
    REQUIRE(ci >= 0);
    return ConfigLanguage::from_slots(
        lcs, {{static_cast<uint32_t>(ci), 0}, {static_cast<uint32_t>(ci), 1}});
}

} // namespace

TEST_CASE("sym_force trivial targets") {
    SglcsPtr lcs = load_fixture("pumping.json");
    ConfigLanguage u = ConfigLanguage::universe(lcs);
    SymForceResult full = sym_force(lcs, 1, u, u);
    CHECK(full.force_set == u);
    CHECK(full.layers.size() == 1);
    CHECK(full.avoid_set.is_empty());

    SymForceResult none = sym_force(lcs, 1, ConfigLanguage::empty(lcs), u);
    CHECK(none.force_set.is_empty());
    CHECK(none.avoid_set == u);
}

TEST_CASE("sym_force rejects a target outside the restriction") {
    SglcsPtr lcs = load_fixture("pumping.json");
    ConfigLanguage u = ConfigLanguage::universe(lcs);
    ConfigLanguage target = control_slots(lcs, "r");
    ConfigLanguage restricted = difference(u, target);
    CHECK_THROWS_AS((void)sym_force(lcs, 1, target, restricted), std::invalid_argument);
}

TEST_CASE("sym_force on the pumping system reaches the risk state") {
    SglcsPtr lcs = load_fixture("pumping.json");
    ConfigLanguage u = ConfigLanguage::universe(lcs);
    SymForceResult res = sym_force(lcs, 1, control_slots(lcs, "r"), u);

    // p can pump and then win the receive race with positive probability
    CHECK(res.force_set.contains(mkconfig(*lcs, "p", 1, "")));
    CHECK(res.force_set.contains(mkconfig(*lcs, "q", 1, "1")));
    // q with an empty channel can never fill it again
    CHECK_FALSE(res.force_set.contains(mkconfig(*lcs, "q", 1, "")));
    CHECK(res.avoid_set.contains(mkconfig(*lcs, "q", 0, "")));

    // monotone layers, stabilization witnessed by construction
    for (size_t i = 1; i < res.layers.size(); i++)
        CHECK(difference(res.layers[i - 1], res.layers[i]).is_empty());
    CHECK((unite(res.force_set, res.avoid_set) == u));
}

TEST_CASE("sym_force layer membership matches the explicit reachable game") {
    SglcsPtr lcs = load_fixture("nosend_deadlock.json");
    ConfigLanguage u = ConfigLanguage::universe(lcs);
    ConfigLanguage target = control_slots(lcs, "v");
    SymForceResult res = sym_force(lcs, 0, target, u);
    for (const std::string& w : {"", "1", "2", "12", "21", "11"}) {
        Configuration start = mkconfig(*lcs, "w", 1, w);
        ReachableGame rg = build_reachable(*lcs, start);
        StateSet tgt(rg.game.size());
        for (const auto& [cfg, id] : rg.ids)
            if (lcs->control(cfg.control).name == "v") tgt.set(id);
        ForceResult fr = force(rg.game, 0, tgt);
        for (const auto& [cfg, id] : rg.ids)
            CHECK(res.force_set.contains(cfg) == fr.force_set.test(id));
    }
}

TEST_CASE("sym_parity base case") {
    SglcsPtr lcs = load_fixture("pumping.json");
    SymParityResult r = sym_parity(lcs, 0);
    CHECK(r.c_set == ConfigLanguage::universe(lcs));
    CHECK(r.player == 0);
}

TEST_CASE("single odd nop loop is won by player 1") {
    std::vector<ControlInfo> controls{{"s", 1, 1}};
    std::vector<LcsRule> rules{{0, OpKind::Nop, 0, 0, 0}};
    auto lcs = std::make_shared<Sglcs>(std::vector<std::string>{"c"},
                                       std::vector<std::string>{"m"}, controls, rules, 0.5);
    SymParityResult r = sym_parity(lcs, 1);
    CHECK(r.player == 1);
    CHECK(r.c_set == ConfigLanguage::universe(lcs));
}

TEST_CASE("pumping system: player 1 cannot win even with positive probability") {
    SglcsPtr lcs = load_fixture("pumping.json");
    // a.s. region of player 1 at the natural rank
    SymParityResult c1 = sym_parity(lcs, 1);
    CHECK(c1.c_set.is_empty());
    // extended rank: player 0 wins almost surely everywhere
    SymParityResult c2 = sym_parity(lcs, 2);
    CHECK(c2.c_set == ConfigLanguage::universe(lcs));

    SymReport rep = sym_report(lcs);
    CHECK(rep.as_region[0] == ConfigLanguage::universe(lcs));
    CHECK(rep.wpp_region[1].is_empty());
}

TEST_CASE("three-color system: player 0 wins almost surely everywhere") {
    SglcsPtr lcs = load_fixture("three_color.json");
    SymReport rep = sym_report(lcs);
    CHECK(rep.as_region[0] == ConfigLanguage::universe(lcs));
    CHECK(rep.wpp_region[1].is_empty());
    CHECK(rep.as_region[1].is_empty());
}

TEST_CASE("X/Y chain is monotone and complementary") {
    SglcsPtr lcs = load_fixture("nosend_deadlock.json");
    SymParityResult r = sym_parity(lcs, lcs->max_color());
    REQUIRE(!r.stages.empty());
    for (size_t i = 0; i < r.stages.size(); i++) {
        CHECK(difference(r.stages[i].x_set, r.stages[i].y_set).is_empty());
        if (i + 1 < r.stages.size())
            CHECK(difference(r.stages[i].y_set, r.stages[i + 1].x_set).is_empty());
    }
    ConfigLanguage u = ConfigLanguage::universe(lcs);
    const ConfigLanguage& x_final = r.stages.back().x_set;
    CHECK(unite(r.c_set, x_final) == u);
    CHECK(intersect(r.c_set, x_final).is_empty());
}

TEST_CASE("deadlock fixture has the expected four regions") {
    SglcsPtr lcs = load_fixture("nosend_deadlock.json");
    SymReport rep = sym_report(lcs);

    // player 0 wins a.s. at v and exactly at the forced receives
    CHECK(rep.as_region[0].contains(mkconfig(*lcs, "v", 1, "")));
    CHECK(rep.as_region[0].contains(mkconfig(*lcs, "w", 1, "1")));
    CHECK(rep.as_region[0].contains(mkconfig(*lcs, "w", 1, "12")));
    CHECK_FALSE(rep.as_region[0].contains(mkconfig(*lcs, "w", 1, "21")));
    CHECK_FALSE(rep.as_region[0].contains(mkconfig(*lcs, "w", 0, "1")));

    // player 1 wins a.s. iff no message 1 is left anywhere
    CHECK(rep.as_region[1].contains(mkconfig(*lcs, "w", 1, "")));
    CHECK(rep.as_region[1].contains(mkconfig(*lcs, "w", 0, "22")));
    CHECK_FALSE(rep.as_region[1].contains(mkconfig(*lcs, "w", 0, "21")));
    CHECK_FALSE(rep.as_region[1].contains(mkconfig(*lcs, "v", 0, "")));

    // mixed configurations are winnable with positive probability by both
    CHECK(rep.wpp_region[0].contains(mkconfig(*lcs, "w", 0, "1")));
    CHECK(rep.wpp_region[1].contains(mkconfig(*lcs, "w", 0, "1")));
}

TEST_CASE("symbolic and explicit solvers agree on no-send fixtures") {
    for (const char* name : {"nosend_toggle.json", "nosend_deadlock.json", "nosend_mixed.json"}) {
        SglcsPtr lcs = load_fixture(name);
        SymReport rep = sym_report(lcs);
        std::vector<Configuration> starts;
        // every configuration of content length <= 1 as a start
        for (const Configuration& c : ConfigLanguage::universe(lcs).members_up_to(1))
            starts.push_back(c);
        for (const Configuration& start : starts) {
            ReachableGame rg = build_reachable(*lcs, start);
            REQUIRE(rg.game.validate().empty());
            WinningReport wr = winning_report(rg.game);
            for (const auto& [cfg, id] : rg.ids) {
                for (int p = 0; p < 2; p++) {
                    CHECK(rep.as_region[p].contains(cfg) == wr.as_region[p].test(id));
                    CHECK(rep.wpp_region[p].contains(cfg) == wr.wpp_region[p].test(id));
                }
            }
        }
    }
}

TEST_CASE("iteration ceiling is a hard error") {
    SglcsPtr lcs = load_fixture("pumping.json");
    SolverOptions opts;
    opts.ceiling = 1;
    CHECK_THROWS_AS((void)sym_parity(lcs, lcs->max_color(), opts), CeilingExceededError);
}

TEST_CASE("stage traces record fixpoint sizes") {
    SglcsPtr lcs = load_fixture("pumping.json");
    std::vector<std::string> trace;
    SolverOptions opts;
    opts.trace = &trace;
    (void)sym_parity(lcs, lcs->max_color(), opts);
    CHECK(!trace.empty());
}
