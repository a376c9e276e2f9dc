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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcspg/errors.hpp"
#include "lcspg/finite_solver.hpp"
#include "lcspg/json_io.hpp"
#include "lcspg/oracle.hpp"
#include "lcspg/random_models.hpp"
#include "lcspg/sim.hpp"
#include "lcspg/strategy.hpp"
#include "lcspg/symbolic_solver.hpp"

using namespace lcspg;

namespace {

constexpr int kOk = 0;
constexpr int kDisagreement = 1; // solver/oracle mismatch or invariant violation
constexpr int kUsage = 2;        // usage, syntax, or validation problems

bool log_enabled() {
    const char* v = std::getenv("LCSPG_LOG");
    return v && *v && std::string(v) != "0";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("syntax error in \"" + path + "\": " + e.what());
    }
}

SglcsPtr override_lambda(const SglcsPtr& lcs, double lambda) {
    if (lambda <= 0.0) return lcs;
    std::vector<ControlInfo> controls;
    for (uint32_t c = 0; c < lcs->control_count(); c++) controls.push_back(lcs->control(c));
    return std::make_shared<Sglcs>(lcs->channels(), lcs->alphabet(), std::move(controls),
                                   lcs->rules(), lambda);
}

Json set_to_json(const StateSet& set) {
    Json a = Json::array();
    set.for_each([&](uint32_t s) { a.push_back(s); });
    return a;
}

Json memoryless_to_json(const std::vector<uint32_t>& strat) {
    Json o = Json::object();
    for (uint32_t s = 0; s < strat.size(); s++)
        if (strat[s] != kNoChoice) o[std::to_string(s)] = strat[s];
    return o;
}

int cmd_solve_finite(const std::string& path, const std::string& out_dir) {
    ParsedModel model = parse_model_file(path);
    if (!model.game) {
        std::cerr << "solve-finite expects an explicit game document\n";
        return kUsage;
    }
    WinningReport rep = winning_report(*model.game);
    Json summary;
    for (int p = 0; p < 2; p++) {
        summary["as_region_p" + std::to_string(p)] = set_to_json(rep.as_region[p]);
        summary["wpp_region_p" + std::to_string(p)] = set_to_json(rep.wpp_region[p]);
    }
    summary["strategy_p" + std::to_string(rep.run_low.player)] =
        memoryless_to_json(rep.run_low.strategy_x);
    summary["strategy_p" + std::to_string(rep.run_high.player)] =
        memoryless_to_json(rep.run_high.strategy_x);
    if (out_dir.empty()) {
        std::cout << summary.dump(2) << "\n";
    } else {
        ArtifactWriter w(out_dir);
        w.write_json("winning_report.json", summary);
        w.finish();
    }
    return kOk;
}

int validate_synthesized(const Sglcs& lcs, std::initializer_list<const RegularStrategy*> list) {
    int status = kOk;
    for (const RegularStrategy* s : list) {
        for (const std::string& v : validate_strategy(lcs, *s)) {
            std::cerr << "invalid synthesized strategy: " << v << "\n";
            status = kDisagreement;
        }
    }
    return status;
}

int cmd_solve_lcs(const std::string& path, int rank, double lambda, uint32_t ceiling,
                  const std::string& out_dir) {
    ParsedModel model = parse_model_file(path);
    if (!model.lcs) {
        std::cerr << "solve-lcs expects a channel-system document\n";
        return kUsage;
    }
    SglcsPtr lcs = override_lambda(model.lcs, lambda);

    std::vector<std::string> trace;
    SolverOptions opts;
    opts.ceiling = ceiling;
    opts.trace = &trace;

    Json summary;
    summary["max_color"] = lcs->max_color();
    summary["lambda"] = lcs->lambda();

    std::vector<std::pair<std::string, ConfigLanguage>> regions;
    std::vector<std::pair<std::string, RegularStrategy>> strategies;

    int status = kOk;
    if (rank >= 0) {
        // single-rank mode: the winning set of one recursion level and
        // its complement, where the opponent wins with positive probability
        SymParityResult res = sym_parity(lcs, static_cast<uint32_t>(rank), opts);
        auto [winner, loser] = parity_strategy_syn(lcs, res);
        status = validate_synthesized(*lcs, {&winner, &loser});
        summary["rank"] = rank;
        summary["winner"] = res.player;
        summary["win_region_empty"] = res.c_set.is_empty();
        ConfigLanguage rest = difference(ConfigLanguage::universe(lcs), res.c_set);
        summary["complement_empty"] = rest.is_empty();
        regions.emplace_back("region_win", res.c_set);
        regions.emplace_back("region_complement", std::move(rest));
        strategies.emplace_back("strategy_p" + std::to_string(res.player), std::move(winner));
        strategies.emplace_back("strategy_p" + std::to_string(1 - res.player),
                                std::move(loser));
    } else {
        SymReport rep = sym_report(lcs, opts);
        auto low_pair = parity_strategy_syn(lcs, rep.run_low);
        auto high_pair = parity_strategy_syn(lcs, rep.run_high);
        const int x = rep.run_low.player;
        status = validate_synthesized(*lcs, {&low_pair.first, &high_pair.first});
        for (int p = 0; p < 2; p++) {
            summary["as_region_p" + std::to_string(p) + "_empty"] = rep.as_region[p].is_empty();
            summary["wpp_region_p" + std::to_string(p) + "_empty"] =
                rep.wpp_region[p].is_empty();
            regions.emplace_back("region_p" + std::to_string(p) + "_as", rep.as_region[p]);
            regions.emplace_back("region_p" + std::to_string(p) + "_wpp", rep.wpp_region[p]);
        }
        strategies.emplace_back("strategy_p" + std::to_string(x), std::move(low_pair.first));
        strategies.emplace_back("strategy_p" + std::to_string(1 - x),
                                std::move(high_pair.first));
    }
    for (const auto& [name, strat] : strategies)
        summary[name + "_rules"] = strat.rules.size();
    summary["stages"] = Json::array();
    for (const std::string& line : trace) summary["stages"].push_back(line);
    if (log_enabled())
        for (const std::string& line : trace) std::cerr << line << "\n";

    if (out_dir.empty()) {
        std::cout << summary.dump(2) << "\n";
    } else {
        ArtifactWriter w(out_dir);
        for (const auto& [name, region] : regions) {
            w.write_json(name + ".json", region_to_json(region));
            w.write(name + ".dot", region_to_dot(region, name));
        }
        for (const auto& [name, strat] : strategies) {
            w.write_json(name + ".json", strategy_to_json(*lcs, strat));
            w.write(name + ".txt", strategy_summary(*lcs, strat));
        }
        std::string trace_text;
        for (const std::string& line : trace) trace_text += line + "\n";
        w.write("trace.log", trace_text);
        w.write_json("summary.json", summary);
        w.finish();
    }
    return status;
}

int check_one_game(const ExplicitGame& game, bool verbose) {
    uint32_t nmax = game.max_color();
    ParityResult res = parity_as(game, nmax);
    if (game.random_states().empty()) {
        ZielonkaResult z = zielonka(game);
        if (!(res.c_set == z.winning[res.player])) {
            std::cerr << "disagreement: parity recursion vs reference recursion\n";
            return kDisagreement;
        }
        if (verbose) std::cout << "zielonka check ok\n";
        return kOk;
    }
    EnumVerdict v = enumerate_verify(game, res.player, res.c_set);
    if (!v.confirmed) {
        std::cerr << "disagreement at state " << v.witness->state << "\n";
        return kDisagreement;
    }
    if (verbose) std::cout << "enumeration check ok\n";
    return kOk;
}

int cmd_check_oracle(const std::string& path, uint32_t random_count, uint32_t states,
                     uint32_t out_degree, uint32_t colors, double stochastic, uint64_t seed) {
    if (!path.empty()) {
        ParsedModel model = parse_model_file(path);
        if (!model.game) {
            std::cerr << "check-oracle expects an explicit game document\n";
            return kUsage;
        }
        return check_one_game(*model.game, true);
    }
    for (uint32_t i = 0; i < random_count; i++) {
        RandomGameParams params{states, out_degree, colors, stochastic};
        ExplicitGame game = random_game(params, split_seed(seed, i));
        int status = check_one_game(game, false);
        if (status != kOk) {
            std::cerr << "failing instance index " << i << " (seed " << split_seed(seed, i)
                      << ")\n";
            return status;
        }
    }
    std::cout << "all " << random_count << " instances agree\n";
    return kOk;
}

int cmd_simulate(const std::string& path, const std::string& start_lit, uint64_t runs,
                 uint64_t steps, uint64_t window, uint64_t seed, double lambda,
                 const std::string& strat0_path, const std::string& strat1_path, bool attractor,
                 const std::string& out_dir) {
    ParsedModel model = parse_model_file(path);
    if (!model.lcs) {
        std::cerr << "simulate expects a channel-system document\n";
        return kUsage;
    }
    SglcsPtr lcs = override_lambda(model.lcs, lambda);

    Configuration start = start_lit.empty() ? make_config(*lcs, 0, 1)
                                            : parse_config_literal(*lcs, start_lit);
    std::optional<RegularStrategy> s0, s1;
    auto load_strategy = [&](const std::string& p) -> std::optional<RegularStrategy> {
        if (p.empty()) return std::nullopt;
        RegularStrategy s = strategy_from_json(*lcs, load_json_file(p));
        auto violations = validate_strategy(*lcs, s);
        if (!violations.empty()) throw ParseError("invalid strategy: " + violations.front());
        return s;
    };
    s0 = load_strategy(strat0_path);
    s1 = load_strategy(strat1_path);
    const RegularStrategy* p0 = s0 ? &*s0 : nullptr;
    const RegularStrategy* p1 = s1 ? &*s1 : nullptr;

    Json summary;
    summary["start"] = format_config(*lcs, start);
    summary["runs"] = runs;
    summary["steps"] = steps;
    summary["window"] = window;
    summary["seed"] = seed;
    if (attractor) {
        AttractorSummary a = attractor_stats(*lcs, p0, p1, {start}, runs, steps, seed);
        summary["hit_fraction"] = a.hit_fraction;
        summary["gap_count"] = a.gap_count;
        summary["median_gap"] = a.median_gap;
        summary["max_gap"] = a.max_gap;
    } else {
        OutcomeEstimate e = estimate_outcome(*lcs, p0, p1, start, runs, steps, window, seed);
        summary["freq_parity_p0"] = e.freq_parity[0];
        summary["freq_parity_p1"] = e.freq_parity[1];
    }
    if (out_dir.empty()) {
        std::cout << summary.dump(2) << "\n";
    } else {
        ArtifactWriter w(out_dir);
        std::vector<TraceStats> rows =
            run_batch(*lcs, p0, p1, {start}, runs, steps, window, seed);
        std::ostringstream csv;
        write_trace_csv(csv, *lcs, rows);
        w.write("stats.csv", csv.str());
        w.write_json("summary.json", summary);
        w.finish();
    }
    return kOk;
}

int cmd_member(const std::string& path, const std::string& region_path,
               const std::string& literal) {
    ParsedModel model = parse_model_file(path);
    if (!model.lcs) {
        std::cerr << "member expects a channel-system document\n";
        return kUsage;
    }
    ConfigLanguage region = region_from_json(model.lcs, load_json_file(region_path));
    Configuration config = parse_config_literal(*model.lcs, literal);
    bool member = region.contains(config);
    std::cout << (member ? "true" : "false") << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver toolkit for parity games on lossy channel systems"};
    app.require_subcommand(1);

    std::string model_path, out_dir, start_lit, region_path, config_lit;
    std::string strat0_path, strat1_path;
    int rank = -1;
    double lambda = 0.0, stochastic = 0.4;
    uint32_t ceiling = 0, random_count = 0, states = 5, out_degree = 2, colors = 2;
    uint64_t seed = 1, runs = 100, steps = 10000, window = 1000;
    bool attractor = false;

    CLI::App* solve_finite = app.add_subcommand("solve-finite", "solve an explicit game");
    solve_finite->add_option("model", model_path)->required();
    solve_finite->add_option("--out", out_dir);

    CLI::App* solve_lcs = app.add_subcommand("solve-lcs", "solve a channel system");
    solve_lcs->add_option("model", model_path)->required();
    solve_lcs->add_option("--rank", rank, "solve a single rank instead of the full report");
    solve_lcs->add_option("--lambda", lambda, "override the loss rate");
    solve_lcs->add_option("--ceiling", ceiling, "fixpoint stage ceiling (0 = default)");
    solve_lcs->add_option("--out", out_dir);

    CLI::App* check = app.add_subcommand("check-oracle", "differential solver checks");
    check->add_option("model", model_path);
    check->add_option("--random", random_count, "check this many random games");
    check->add_option("--states", states);
    check->add_option("--out-degree", out_degree);
    check->add_option("--colors", colors);
    check->add_option("--stochastic", stochastic, "fraction of random states");
    check->add_option("--seed", seed);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo runs");
    simulate->add_option("model", model_path)->required();
    simulate->add_option("--start", start_lit, "configuration literal control:bit:w1#w2");
    simulate->add_option("--runs", runs);
    simulate->add_option("--steps", steps);
    simulate->add_option("--window", window);
    simulate->add_option("--seed", seed);
    simulate->add_option("--lambda", lambda);
    simulate->add_option("--strategy0", strat0_path);
    simulate->add_option("--strategy1", strat1_path);
    simulate->add_flag("--attractor", attractor, "report empty-channel recurrence");
    simulate->add_option("--out", out_dir);

    CLI::App* member = app.add_subcommand("member", "region membership query");
    member->add_option("model", model_path)->required();
    member->add_option("--region", region_path)->required();
    member->add_option("config", config_lit)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve_finite) return cmd_solve_finite(model_path, out_dir);
        if (*solve_lcs) return cmd_solve_lcs(model_path, rank, lambda, ceiling, out_dir);
        if (*check) {
            if (model_path.empty() && random_count == 0) {
                std::cerr << "check-oracle needs a model or --random N\n";
                return kUsage;
            }
            return cmd_check_oracle(model_path, random_count, states, out_degree, colors,
                                    stochastic, seed);
        }
        if (*simulate)
            return cmd_simulate(model_path, start_lit, runs, steps, window, seed, lambda,
                                strat0_path, strat1_path, attractor, out_dir);
        if (*member) return cmd_member(model_path, region_path, config_lit);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CeilingExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDisagreement;
    }
    return kUsage;
}
