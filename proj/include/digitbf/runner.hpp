// Copyright 2026 The digitbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "digitbf/stream.hpp"
#include "digitbf/types.hpp"

namespace digitbf::runner {

// A prior under analysis, carrying the label used in emitted records
// ("a1", "a50", "mix", ...).
struct ConfiguredPrior {
    std::string label;
    std::variant<DirichletPrior, MixturePrior> prior;

    bool is_symmetric_dirichlet() const {
        const auto* d = std::get_if<DirichletPrior>(&prior);
        return d != nullptr && d->is_symmetric();
    }
};

struct AnalysisConfig {
    std::vector<ConfiguredPrior> priors;
    std::uint32_t block_size = 1000;
    double alpha = 0.05;
    // 0 means: run to the end of the stream.
    std::uint64_t max_digits = 0;
};

// One row of a sequential analysis.  log_bf is parallel to config.priors.
// log_bf_max is the maximum-evidence bound, taken over the configured
// symmetric Dirichlet priors; log_bf_threshold is the level-alpha rejection
// bound under the reference prior (the first symmetric one).  Both are NaN
// when undefined (no symmetric prior; threshold additionally needs 10 | N).
struct TrajectoryPoint {
    std::uint64_t n = 0;
    std::vector<double> log_bf;
    double log_bf_max = 0.0;
    double log_bf_threshold = 0.0;
    bool partial_block = false;
};

struct Trajectory {
    AnalysisConfig config;
    std::vector<TrajectoryPoint> points;
    DigitCounts final_counts;
};

// Consumes the stream in blocks, updating tallies in place and evaluating
// every configured prior plus the two bounds at each block boundary: O(1)
// special-function calls per prior per point.  A trailing partial block
// produces a final flagged point.  Throws std::invalid_argument on an empty
// stream; parse errors from file-backed streams propagate.
Trajectory run_trajectory(DigitStream& stream, const AnalysisConfig& config);

// Evaluates the configured priors on one externally supplied count vector
// (for published tallies too large to stream).  Returned point carries the
// same bound conventions as run_trajectory.
TrajectoryPoint evaluate_counts(const DigitCounts& counts, const AnalysisConfig& config);

// Maximal runs of consecutive points where the reference prior's evidence
// drops below the threshold bound, i.e. where a level-alpha test rejects the
// null that the Bayes factor may still favor.  Returns [first_n, last_n]
// digit-count intervals, merged across adjacent blocks.
std::vector<std::pair<std::uint64_t, std::uint64_t>> detect_lindley_windows(
    const Trajectory& trajectory);

struct SimulationConfig {
    std::uint32_t replications = 1000;
    std::uint64_t digits_per_replication = 1'000'000;
    std::array<double, 10> bias{0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
    std::uint64_t seed = 0;
    std::vector<ConfiguredPrior> priors;
    std::uint32_t block_size = 1000;
    // Worker threads; replication seeds are derived from the master seed, so
    // results do not depend on the job count.
    std::uint32_t jobs = 0;  // 0 = hardware concurrency
    // Record full trajectories for the first few replications.
    std::uint32_t trajectory_samples = 0;
};

struct SimulationSummary {
    std::string prior_label;
    double mean_log_bf10 = 0.0;     // averaging convention: mean on the log scale
    double log_mean_bf10 = 0.0;     // log of the linear-scale mean, for transparency
    double min_log_bf10 = 0.0;
    double q05_log_bf10 = 0.0;
    double median_log_bf10 = 0.0;
    double q95_log_bf10 = 0.0;
    double max_log_bf10 = 0.0;
};

struct SimulationResult {
    SimulationConfig config;
    // final_log_bf10[r][p]: final evidence against the null for replication r
    // under prior p.
    std::vector<std::vector<double>> final_log_bf10;
    std::vector<SimulationSummary> summaries;
    std::vector<Trajectory> sampled_trajectories;
};

// Runs the replications independently with per-replication seeds derived
// deterministically from the master seed; identical configs give identical
// results at any job count.
SimulationResult run_simulation(const SimulationConfig& config);

}  // namespace digitbf::runner
