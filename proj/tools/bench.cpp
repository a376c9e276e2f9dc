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
 * Compares the OpenMP kernels against their serial reference paths:
 * predecessor sweeps on a large random game, strategy-profile
 * enumeration, and Monte Carlo batches.
 */

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lcspg/finite_solver.hpp"
#include "lcspg/oracle.hpp"
#include "lcspg/random_models.hpp"
#include "lcspg/sim.hpp"

using namespace lcspg;

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; i++) {
        double t0 = now();
        f();
        best = std::min(best, now() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %9.4fs   parallel %9.4fs   speedup %5.2fx\n", name, serial,
                parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    uint32_t n = argc > 1 ? static_cast<uint32_t>(std::atoi(argv[1])) : 2000000;
    uint64_t sim_runs = argc > 2 ? static_cast<uint64_t>(std::atoll(argv[2])) : 2000;

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run the serial path\n");
#endif

    // predecessor sweep on a large random game
    std::printf("generating %u-state game...\n", n);
    ExplicitGame game = random_game({n, 4, 3, 0.3}, 42);
    Rng rng(7);
    StateSet q(game.size());
    for (uint32_t s = 0; s < game.size(); s++)
        if (rng.below(3) == 0) q.set(s);

    PreSets serial_result, parallel_result;
    double t_ser = time_best_of(3, [&] { serial_result = pre_sets_serial(game, q); });
    double t_par = time_best_of(3, [&] { parallel_result = pre_sets(game, q); });
    if (!(serial_result.pre == parallel_result.pre) ||
        !(serial_result.dual_pre == parallel_result.dual_pre)) {
        std::fprintf(stderr, "kernel mismatch in pre_sets\n");
        return 1;
    }
    report("pre_sets", t_ser, t_par);

    // force fixpoint built on the sweep kernel
    StateSet target(game.size());
    for (uint32_t s = 0; s < game.size(); s += 1000) target.set(s);
    double t_force = time_best_of(1, [&] { (void)force(game, 0, target); });
    std::printf("%-28s %9.4fs (uses the parallel sweep)\n", "force fixpoint", t_force);

    // strategy-profile enumeration near the size guard
    ExplicitGame small = random_game({18, 2, 2, 0.2}, 11);
    ParityResult pr = parity_as(small, small.max_color());
    EnumVerdict v_ser, v_par;
    double e_ser =
        time_best_of(3, [&] { v_ser = enumerate_verify_serial(small, pr.player, pr.c_set); });
    double e_par = time_best_of(3, [&] { v_par = enumerate_verify(small, pr.player, pr.c_set); });
    if (v_ser.confirmed != v_par.confirmed) {
        std::fprintf(stderr, "kernel mismatch in enumerate_verify\n");
        return 1;
    }
    report("enumerate_verify", e_ser, e_par);

    // Monte Carlo batch
    std::vector<ControlInfo> controls{{"p", 1, 0}, {"q", 1, 0}, {"r", 1, 1}};
    std::vector<LcsRule> rules{
        {0, OpKind::Send, 0, 0, 0}, {0, OpKind::Nop, 0, 0, 1}, {1, OpKind::Nop, 0, 0, 1},
        {1, OpKind::Recv, 0, 0, 2}, {2, OpKind::Nop, 0, 0, 0},
    };
    Sglcs lcs({"c"}, {"1"}, controls, rules, 0.5);
    Configuration start = make_config(lcs, 0, 1);
    std::vector<TraceStats> rows_ser, rows_par;
    double s_ser = time_best_of(2, [&] {
        rows_ser = run_batch(lcs, nullptr, nullptr, {start}, sim_runs, 2000, 500, 3, false);
    });
    double s_par = time_best_of(2, [&] {
        rows_par = run_batch(lcs, nullptr, nullptr, {start}, sim_runs, 2000, 500, 3, true);
    });
    for (size_t i = 0; i < rows_ser.size(); i++) {
        if (rows_ser[i].attractor_hits != rows_par[i].attractor_hits ||
            rows_ser[i].tail_max_color != rows_par[i].tail_max_color) {
            std::fprintf(stderr, "kernel mismatch in run_batch\n");
            return 1;
        }
    }
    report("monte carlo batch", s_ser, s_par);
    return 0;
}
