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

#include "lcspg/sim.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

namespace lcspg {

namespace {

bool all_empty(const Contents& contents) {
    for (const Word& w : contents)
        if (!w.empty()) return false;
    return true;
}

} // namespace

TraceStats sample_run(const Sglcs& lcs, const RegularStrategy* strat0,
                      const RegularStrategy* strat1, const Configuration& start, uint64_t steps,
                      uint64_t seed, uint64_t window, std::vector<Configuration>* trajectory) {
    Rng rng(seed);
    TraceStats stats;
    stats.steps = steps;

    Configuration cur = start;
    const uint64_t total_configs = steps + 1;
    const uint64_t tail_from = window >= total_configs ? 0 : total_configs - window;
    int64_t last_hit = -1;

    for (uint64_t i = 0; i <= steps; i++) {
        if (trajectory) trajectory->push_back(cur);
        stats.control_visits[cur.control]++;
        if (all_empty(cur.contents)) {
            if (last_hit >= 0) stats.empty_gaps.push_back(i - uint64_t(last_hit));
            stats.attractor_hits++;
            last_hit = int64_t(i);
        }
        if (i >= tail_from)
            stats.tail_max_color = std::max(stats.tail_max_color, lcs.control(cur.control).color);
        if (i == steps) break;

        if (cur.bit == 1) {
            const RegularStrategy* strat =
                lcs.control(cur.control).owner == 0 ? strat0 : strat1;
            std::optional<Configuration> chosen;
            if (strat) chosen = induced_step(lcs, *strat, cur);
            if (chosen) {
                cur = std::move(*chosen);
            } else {
                auto succ = successors(lcs, cur);
                cur = std::move(succ[rng.below(succ.size())].config);
            }
        } else {
            cur.contents = sample_loss(cur.contents, lcs.lambda(), rng);
            cur.bit = 1;
        }
    }
    return stats;
}

std::vector<TraceStats> run_batch(const Sglcs& lcs, const RegularStrategy* strat0,
                                  const RegularStrategy* strat1,
                                  const std::vector<Configuration>& starts, uint64_t runs,
                                  uint64_t steps, uint64_t window, uint64_t seed,
                                  bool parallel) {
    assert(!starts.empty());
    std::vector<TraceStats> out(runs);
    const int64_t n = static_cast<int64_t>(runs);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int64_t i = 0; i < n; i++) {
        out[i] = sample_run(lcs, strat0, strat1, starts[i % starts.size()], steps,
                            split_seed(seed, uint64_t(i)), window);
    }
    return out;
}

OutcomeEstimate estimate_outcome(const Sglcs& lcs, const RegularStrategy* strat0,
                                 const RegularStrategy* strat1, const Configuration& start,
                                 uint64_t runs, uint64_t steps, uint64_t window, uint64_t seed,
                                 bool parallel) {
    std::vector<TraceStats> rows =
        run_batch(lcs, strat0, strat1, {start}, runs, steps, window, seed, parallel);
    uint64_t even = 0;
    for (const TraceStats& r : rows)
        if (r.tail_max_color % 2 == 0) even++;
    OutcomeEstimate est;
    est.freq_parity[0] = double(even) / double(runs);
    est.freq_parity[1] = double(runs - even) / double(runs);
    return est;
}

AttractorSummary attractor_stats(const Sglcs& lcs, const RegularStrategy* strat0,
                                 const RegularStrategy* strat1,
                                 const std::vector<Configuration>& starts, uint64_t runs,
                                 uint64_t steps, uint64_t seed, bool parallel) {
    std::vector<TraceStats> rows =
        run_batch(lcs, strat0, strat1, starts, runs, steps, steps + 1, seed, parallel);
    AttractorSummary sum;
    sum.runs = runs;
    uint64_t hit = 0;
    std::vector<uint64_t> gaps;
    for (const TraceStats& r : rows) {
        if (r.attractor_hits > 0) hit++;
        gaps.insert(gaps.end(), r.empty_gaps.begin(), r.empty_gaps.end());
    }
    sum.hit_fraction = runs ? double(hit) / double(runs) : 0.0;
    sum.gap_count = gaps.size();
    if (!gaps.empty()) {
        std::sort(gaps.begin(), gaps.end());
        sum.median_gap = gaps.size() % 2 ? double(gaps[gaps.size() / 2])
                                         : 0.5 * double(gaps[gaps.size() / 2 - 1] +
                                                        gaps[gaps.size() / 2]);
        sum.max_gap = gaps.back();
    }
    return sum;
}

void write_trace_csv(std::ostream& os, const Sglcs& lcs, const std::vector<TraceStats>& rows) {
    os << "run,steps,attractor_hits,tail_max_color,max_gap";
    for (uint32_t c = 0; c < lcs.control_count(); c++)
        os << ",visits_" << lcs.control(c).name;
    os << "\n";
    for (size_t i = 0; i < rows.size(); i++) {
        const TraceStats& r = rows[i];
        uint64_t max_gap = r.empty_gaps.empty()
                               ? 0
                               : *std::max_element(r.empty_gaps.begin(), r.empty_gaps.end());
        os << i << "," << r.steps << "," << r.attractor_hits << "," << r.tail_max_color << ","
           << max_gap;
        for (uint32_t c = 0; c < lcs.control_count(); c++) {
            auto it = r.control_visits.find(c);
            os << "," << (it == r.control_visits.end() ? 0 : it->second);
        }
        os << "\n";
    }
}

} // namespace lcspg
