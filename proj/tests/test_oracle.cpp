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
#include "lcspg/oracle.hpp"
#include "lcspg/random_models.hpp"

using namespace lcspg;

TEST_CASE("zielonka rejects stochastic games") {
    ExplicitGameBuilder b;
    uint32_t r = b.add_state(Owner::Random, 0);
    b.add_edge(r, r, 1.0);
    ExplicitGame g = b.build();
    CHECK_THROWS_AS((void)zielonka(g), HasRandomStatesError);
}

TEST_CASE("zielonka single-state loops") {
    {
        ExplicitGameBuilder b;
        uint32_t s = b.add_state(Owner::P1, 1);
        b.add_edge(s, s);
        ExplicitGame g = b.build();
        ZielonkaResult z = zielonka(g);
        CHECK(z.winning[1] == g.present());
        CHECK(z.winning[0].empty());
    }
    {
        ExplicitGameBuilder b;
        uint32_t s = b.add_state(Owner::P0, 0);
        b.add_edge(s, s);
        ExplicitGame g = b.build();
        ZielonkaResult z = zielonka(g);
        CHECK(z.winning[0] == g.present());
    }
}

TEST_CASE("zielonka strategies agree with the chain classification") {
    for (uint64_t seed = 0; seed < 30; seed++) {
        ExplicitGame g = random_game({12, 3, 3, 0.0}, split_seed(5, seed));
        ZielonkaResult z = zielonka(g);
        CHECK((z.winning[0] | z.winning[1]) == g.present());
        g.present().for_each([&](uint32_t s) {
            int w = z.winning[0].test(s) ? 0 : 1;
            McVerdict v = qualitative_mc_check(g, z.strategy[0], z.strategy[1], s);
            CHECK(v.as_win_player == w);
        });
    }
}

TEST_CASE("qualitative_mc_check on a deterministic even loop") {
    ExplicitGameBuilder b;
    uint32_t a = b.add_state(Owner::P0, 0);
    uint32_t c = b.add_state(Owner::P1, 0);
    b.add_edge(a, c);
    b.add_edge(c, a);
    ExplicitGame g = b.build();
    std::vector<uint32_t> empty;
    McVerdict v = qualitative_mc_check(g, empty, empty, a);
    CHECK(v.as_win_player == 0);
    CHECK(v.wpp[0]);
    CHECK_FALSE(v.wpp[1]);
}

TEST_CASE("qualitative_mc_check with a random branch into two BSCCs") {
    // start -> random branch; left loop max color 1, right loop max color 2
    ExplicitGameBuilder b;
    uint32_t r = b.add_state(Owner::Random, 0);
    uint32_t l = b.add_state(Owner::P0, 1);
    uint32_t h = b.add_state(Owner::P1, 2);
    b.add_edge(r, l, 0.5);
    b.add_edge(r, h, 0.5);
    b.add_edge(l, l);
    b.add_edge(h, h);
    ExplicitGame g = b.build();
    std::vector<uint32_t> empty;
    McVerdict v = qualitative_mc_check(g, empty, empty, r);
    CHECK(v.as_win_player == -1);
    CHECK(v.wpp[0]);
    CHECK(v.wpp[1]);
}

TEST_CASE("qualitative_mc_check on a gambler-like chain") {
    // all-random walk with an absorbing even-colored end; the absorbing
    // state is the single reachable BSCC
    ExplicitGameBuilder b;
    const uint32_t n = 5;
    for (uint32_t i = 0; i < n; i++) b.add_state(Owner::Random, i == n - 1 ? 0 : 1);
    for (uint32_t i = 0; i + 1 < n; i++) {
        b.add_edge(i, i + 1, 0.7);
        b.add_edge(i, i == 0 ? 0 : i - 1, 0.3);
    }
    b.add_edge(n - 1, n - 1, 1.0);
    ExplicitGame g = b.build();
    REQUIRE(g.validate().empty());
    std::vector<uint32_t> empty;
    McVerdict v = qualitative_mc_check(g, empty, empty, 0);
    CHECK(v.as_win_player == 0);
}

TEST_CASE("enumerate_verify on a pure Markov chain") {
    ExplicitGameBuilder b;
    uint32_t r = b.add_state(Owner::Random, 0);
    uint32_t o = b.add_state(Owner::Random, 1);
    b.add_edge(r, o, 0.5);
    b.add_edge(r, r, 0.5);
    b.add_edge(o, o, 1.0);
    ExplicitGame g = b.build();
    // the only BSCC has color 1: player 1 wins everywhere
    EnumVerdict v = enumerate_verify(g, 1, g.present());
    CHECK(v.confirmed);
    EnumVerdict w = enumerate_verify(g, 0, g.empty_set());
    CHECK(w.confirmed);
}

TEST_CASE("enumerate_verify returns a counterexample") {
    // player 0 state that can only move into an odd loop
    ExplicitGameBuilder b;
    uint32_t a = b.add_state(Owner::P0, 0);
    uint32_t l = b.add_state(Owner::P1, 1);
    b.add_edge(a, l);
    b.add_edge(l, l);
    ExplicitGame g = b.build();
    EnumVerdict v = enumerate_verify(g, 0, g.present());
    CHECK_FALSE(v.confirmed);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->state == a);
    CHECK(v.witness->strat_y.has_value());
}

TEST_CASE("enumerate_verify guards against huge profile spaces") {
    ExplicitGame g = random_game({40, 3, 2, 0.0}, 3);
    CHECK_THROWS_AS((void)enumerate_verify(g, 0, g.empty_set()), TooLargeError);
}

TEST_CASE("parallel and serial enumeration agree") {
    for (uint64_t seed = 0; seed < 10; seed++) {
        ExplicitGame g = random_game({5, 2, 2, 0.4}, split_seed(77, seed));
        Rng rng(split_seed(78, seed));
        StateSet claimed(g.size());
        for (uint32_t s = 0; s < g.size(); s++)
            if (rng.below(2)) claimed.set(s);
        EnumVerdict a = enumerate_verify(g, 0, claimed);
        EnumVerdict b = enumerate_verify_serial(g, 0, claimed);
        CHECK(a.confirmed == b.confirmed);
        if (!a.confirmed) {
            REQUIRE(a.witness.has_value());
            REQUIRE(b.witness.has_value());
            CHECK(a.witness->state == b.witness->state);
        }
    }
}
