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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string cli = LCSPG_CLI_PATH;
const std::string fixtures = LCSPG_FIXTURE_DIR;

int run(const std::string& args) {
    int rc = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() / ("lcspg_cli_" + tag);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("solve-lcs succeeds on the bundled systems") {
    CHECK(run("solve-lcs " + fixtures + "/pumping.json") == 0);
    CHECK(run("solve-lcs " + fixtures + "/nosend_toggle.json") == 0);
}

TEST_CASE("solve-finite succeeds on an explicit game") {
    CHECK(run("solve-finite " + fixtures + "/gambler_chain.json") == 0);
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run("solve-lcs /nonexistent.json") == 2);
    CHECK(run("nonsense-command") == 2);
    CHECK(run("member " + fixtures + "/pumping.json --region nothere.json \"p:1:\"") == 2);

    fs::path bad = fs::temp_directory_path() / "lcspg_bad_lambda.json";
    std::ofstream(bad) << R"({"channels":["c"],"alphabet":["1"],"lambda":1.2,)"
                       << R"("controls":[{"id":"p","owner":"P1","color":0}],)"
                       << R"("rules":[{"from":"p","op":"nop","to":"p"}]})";
    CHECK(run("solve-lcs " + bad.string()) == 2);

    fs::path dup = fs::temp_directory_path() / "lcspg_dup_control.json";
    std::ofstream(dup) << R"({"channels":["c"],"alphabet":["1"],"lambda":0.5,)"
                       << R"("controls":[{"id":"p","owner":"P1","color":0},)"
                       << R"({"id":"p","owner":"P0","color":1}],)"
                       << R"("rules":[{"from":"p","op":"nop","to":"p"}]})";
    CHECK(run("solve-lcs " + dup.string()) == 2);
}

TEST_CASE("repeated runs produce byte-identical artifacts") {
    fs::path d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
    REQUIRE(run("solve-lcs " + fixtures + "/three_color.json --out " + d1.string()) == 0);
    REQUIRE(run("solve-lcs " + fixtures + "/three_color.json --out " + d2.string()) == 0);
    REQUIRE(fs::exists(d1 / "manifest.json"));
    CHECK(slurp(d1 / "manifest.json") == slurp(d2 / "manifest.json"));
    for (const auto& entry : fs::directory_iterator(d1))
        CHECK(slurp(entry.path()) == slurp(d2 / entry.path().filename()));
}

TEST_CASE("member answers region queries") {
    fs::path dir = fresh_dir("member");
    REQUIRE(run("solve-lcs " + fixtures + "/pumping.json --out " + dir.string()) == 0);
    CHECK(run("member " + fixtures + "/pumping.json --region " +
              (dir / "region_p0_as.json").string() + " \"q:1:11\"") == 0);
    // malformed literal
    CHECK(run("member " + fixtures + "/pumping.json --region " +
              (dir / "region_p0_as.json").string() + " \"q;1\"") == 2);
}

TEST_CASE("check-oracle runs a random differential batch") {
    CHECK(run("check-oracle --random 15 --states 5 --out-degree 2 --colors 2 --seed 3") == 0);
    CHECK(run("check-oracle --random 10 --states 12 --out-degree 3 --colors 3 --stochastic 0 "
              "--seed 4") == 0);
    CHECK(run("check-oracle " + fixtures + "/gambler_chain.json") == 0);
    CHECK(run("check-oracle") == 2);
}

TEST_CASE("simulate writes stats artifacts") {
    fs::path dir = fresh_dir("sim");
    REQUIRE(run("simulate " + fixtures + "/pumping.json --start p:1:11 --runs 20 --steps 500 "
                "--window 100 --seed 9 --out " +
                dir.string()) == 0);
    CHECK(fs::exists(dir / "stats.csv"));
    CHECK(fs::exists(dir / "summary.json"));
    CHECK(fs::exists(dir / "manifest.json"));
    std::string csv = slurp(dir / "stats.csv");
    CHECK(csv.find("run,steps,") == 0);
}

TEST_CASE("simulate accepts an exported strategy") {
    fs::path dir = fresh_dir("sim_strat");
    REQUIRE(run("solve-lcs " + fixtures + "/nosend_toggle.json --out " + dir.string()) == 0);
    CHECK(run("simulate " + fixtures + "/nosend_toggle.json --start b:1:x --runs 10 "
              "--steps 200 --window 50 --strategy1 " +
              (dir / "strategy_p1.json").string()) == 0);
}
