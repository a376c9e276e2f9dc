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

#ifndef LCSPG_SIM_HPP
#define LCSPG_SIM_HPP

#include <iosfwd>
#include <map>

#include "lcspg/strategy.hpp"

namespace lcspg {

/**
 * Statistics of one sampled run. attractor_hits counts configurations
 * with every channel empty (either bit); empty_gaps the step distances
 * between consecutive such hits; tail_max_color the largest color seen
 * within the final window.
 */
struct TraceStats {
    uint64_t steps = 0;
    std::map<uint32_t, uint64_t> control_visits;
    uint64_t attractor_hits = 0;
    uint32_t tail_max_color = 0;
    std::vector<uint64_t> empty_gaps;
};

/**
 * Plays `steps` transitions from `start`. Strategies may be null or
 * partial; owned configurations outside a strategy's domain move
 * uniformly among their successors. Loss steps sample each message
 * independently. Deterministic for a fixed seed. A non-null trajectory
 * receives every visited configuration (steps + 1 entries).
 */
TraceStats sample_run(const Sglcs& lcs, const RegularStrategy* strat0,
                      const RegularStrategy* strat1, const Configuration& start, uint64_t steps,
                      uint64_t seed, uint64_t window = 1000,
                      std::vector<Configuration>* trajectory = nullptr);

struct OutcomeEstimate {
    double freq_parity[2]; // fraction of runs whose tail parity favors each player
};

/**
 * Tail-window surrogate for the limit winning condition: fraction of
 * runs whose maximal tail color is even vs odd. Runs are independent
 * with per-run seeds split off the master seed, so the result does not
 * depend on the parallel schedule.
 */
OutcomeEstimate estimate_outcome(const Sglcs& lcs, const RegularStrategy* strat0,
                                 const RegularStrategy* strat1, const Configuration& start,
                                 uint64_t runs, uint64_t steps, uint64_t window, uint64_t seed,
                                 bool parallel = true);

struct AttractorSummary {
    uint64_t runs = 0;
    double hit_fraction = 0.0; // runs that touched the empty-channel set
    uint64_t gap_count = 0;
    double median_gap = 0.0;
    uint64_t max_gap = 0;
};

/// empty-channel recurrence statistics over runs cycling through `starts`
AttractorSummary attractor_stats(const Sglcs& lcs, const RegularStrategy* strat0,
                                 const RegularStrategy* strat1,
                                 const std::vector<Configuration>& starts, uint64_t runs,
                                 uint64_t steps, uint64_t seed, bool parallel = true);

/// batch of runs with per-run seeds; the building block of the two above
std::vector<TraceStats> run_batch(const Sglcs& lcs, const RegularStrategy* strat0,
                                  const RegularStrategy* strat1,
                                  const std::vector<Configuration>& starts, uint64_t runs,
                                  uint64_t steps, uint64_t window, uint64_t seed,
                                  bool parallel = true);

void write_trace_csv(std::ostream& os, const Sglcs& lcs, const std::vector<TraceStats>& rows);

} // namespace lcspg

#endif // LCSPG_SIM_HPP
