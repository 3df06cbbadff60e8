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

#include "digitbf/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "digitbf/bayes.hpp"
#include "digitbf/constants.hpp"
#include "digitbf/freq.hpp"
#include "digitbf/rng.hpp"
#include "digitbf/tally.hpp"

namespace digitbf::runner {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double evaluate_prior(const ConfiguredPrior& prior, const DigitCounts& counts) {
    if (const auto* d = std::get_if<DirichletPrior>(&prior.prior))
        return bayes::log_bf01_dirichlet(counts, *d).log_bf01;
    return bayes::log_bf01_mixture(counts, std::get<MixturePrior>(prior.prior)).log_bf01;
}

// Index of the reference prior for the threshold bound and window detection:
// the first symmetric Dirichlet in the configuration.
std::optional<std::size_t> reference_prior_index(const std::vector<ConfiguredPrior>& priors) {
    for (std::size_t i = 0; i < priors.size(); ++i)
        if (priors[i].is_symmetric_dirichlet()) return i;
    return std::nullopt;
}

TrajectoryPoint make_point(const DigitCounts& counts, const AnalysisConfig& config,
                           bool partial) {
    TrajectoryPoint point;
    point.n = counts.total;
    point.partial_block = partial;
    point.log_bf.reserve(config.priors.size());
    for (const auto& prior : config.priors) point.log_bf.push_back(evaluate_prior(prior, counts));

    point.log_bf_max = kNaN;
    for (const auto& prior : config.priors) {
        if (!prior.is_symmetric_dirichlet()) continue;
        const double bound =
            bayes::max_log_bf01(counts.total, std::get<DirichletPrior>(prior.prior)).log_bf01;
        if (std::isnan(point.log_bf_max) || bound > point.log_bf_max) point.log_bf_max = bound;
    }

    point.log_bf_threshold = kNaN;
    const auto ref = reference_prior_index(config.priors);
    if (ref.has_value() && counts.total >= 10 && counts.total % 10 == 0) {
        const auto& prior = std::get<DirichletPrior>(config.priors[*ref].prior);
        try {
            point.log_bf_threshold =
                freq::threshold_log_bf(counts.total, prior, config.alpha).log_bf01;
        } catch (const std::domain_error&) {
            // N too small to reach the critical value; the band starts later
        }
    }
    return point;
}

void validate(const AnalysisConfig& config) {
    if (config.priors.empty()) throw std::invalid_argument("analysis needs at least one prior");
    if (config.block_size < 1) throw std::invalid_argument("block_size must be >= 1");
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw std::invalid_argument("alpha must be in (0, 1)");
}

}  // namespace

Trajectory run_trajectory(DigitStream& stream, const AnalysisConfig& config) {
    validate(config);

    Trajectory trajectory;
    trajectory.config = config;

    std::vector<std::uint8_t> block(config.block_size);
    while (true) {
        std::size_t want = block.size();
        if (config.max_digits > 0) {
            const std::uint64_t left = config.max_digits - trajectory.final_counts.total;
            if (left == 0) break;
            want = static_cast<std::size_t>(std::min<std::uint64_t>(want, left));
        }
        // Partial reads short of end-of-stream are re-filled so that points
        // land on exact block boundaries.
        std::size_t got = 0;
        while (got < want) {
            const std::size_t n = stream.read(std::span(block).subspan(got, want - got));
            if (n == 0) break;
            got += n;
        }
        if (got == 0) break;
        tally::accumulate(std::span(block).first(got), trajectory.final_counts);
        trajectory.points.push_back(
            make_point(trajectory.final_counts, config, got < block.size()));
        if (got < want) break;
    }

    if (trajectory.points.empty()) throw std::invalid_argument("digit stream is empty");
    return trajectory;
}

TrajectoryPoint evaluate_counts(const DigitCounts& counts, const AnalysisConfig& config) {
    validate(config);
    return make_point(counts, config, false);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> detect_lindley_windows(
    const Trajectory& trajectory) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> windows;
    const auto ref = reference_prior_index(trajectory.config.priors);
    if (!ref.has_value()) return windows;

    bool open = false;
    for (const auto& point : trajectory.points) {
        const double threshold = point.log_bf_threshold;
        const bool outside =
            !std::isnan(threshold) && point.log_bf[*ref] < threshold;
        if (outside) {
            if (open)
                windows.back().second = point.n;
            else
                windows.emplace_back(point.n, point.n);
            open = true;
        } else {
            open = false;
        }
    }
    return windows;
}

SimulationResult run_simulation(const SimulationConfig& config) {
    if (config.replications < 1) throw std::invalid_argument("replications must be >= 1");
    if (config.priors.empty()) throw std::invalid_argument("simulation needs at least one prior");

    SimulationResult result;
    result.config = config;
    result.final_log_bf10.assign(config.replications, {});
    const std::uint32_t n_samples = std::min(config.trajectory_samples, config.replications);
    result.sampled_trajectories.resize(n_samples);

    AnalysisConfig analysis;
    analysis.priors = config.priors;
    analysis.block_size = config.block_size;

    const auto run_one = [&](std::uint32_t rep) {
        const std::uint64_t seed = rng::derive_stream_seed(config.seed, rep);
        auto stream =
            constants::sample_biased_digits(config.bias, config.digits_per_replication, seed);
        if (rep < n_samples) {
            Trajectory trajectory = run_trajectory(*stream, analysis);
            auto& finals = result.final_log_bf10[rep];
            for (double v : trajectory.points.back().log_bf) finals.push_back(-v);
            result.sampled_trajectories[rep] = std::move(trajectory);
        } else {
            // Finals only: tally the whole stream, then evaluate once.
            DigitCounts counts;
            std::vector<std::uint8_t> block(1 << 14);
            while (true) {
                const std::size_t got = stream->read(std::span(block));
                if (got == 0) break;
                tally::accumulate(std::span(block).first(got), counts);
            }
            auto& finals = result.final_log_bf10[rep];
            for (const auto& prior : config.priors)
                finals.push_back(-evaluate_prior(prior, counts));
        }
    };

    std::uint32_t jobs = config.jobs > 0 ? config.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min(jobs, config.replications);
    if (jobs <= 1) {
        for (std::uint32_t rep = 0; rep < config.replications; ++rep) run_one(rep);
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (std::uint32_t w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                while (true) {
                    const std::uint32_t rep = next.fetch_add(1);
                    if (rep >= config.replications) return;
                    run_one(rep);
                }
            });
        for (auto& worker : workers) worker.join();
    }

    // Per-prior summaries over replications.
    for (std::size_t p = 0; p < config.priors.size(); ++p) {
        std::vector<double> values;
        values.reserve(config.replications);
        for (const auto& finals : result.final_log_bf10) values.push_back(finals[p]);
        std::sort(values.begin(), values.end());

        const auto quantile = [&](double q) {
            const double pos = q * static_cast<double>(values.size() - 1);
            const auto lo = static_cast<std::size_t>(pos);
            const std::size_t hi = std::min(lo + 1, values.size() - 1);
            const double frac = pos - static_cast<double>(lo);
            return values[lo] * (1.0 - frac) + values[hi] * frac;
        };

        SimulationSummary summary;
        summary.prior_label = config.priors[p].label;
        double sum = 0.0;
        for (double v : values) sum += v;
        summary.mean_log_bf10 = sum / static_cast<double>(values.size());
        // log of the linear-scale mean, computed without leaving log space
        double lse = -std::numeric_limits<double>::infinity();
        for (double v : values) lse = bayes::log_sum_exp(lse, v);
        summary.log_mean_bf10 = lse - std::log(static_cast<double>(values.size()));
        summary.min_log_bf10 = values.front();
        summary.max_log_bf10 = values.back();
        summary.q05_log_bf10 = quantile(0.05);
        summary.median_log_bf10 = quantile(0.5);
        summary.q95_log_bf10 = quantile(0.95);
        result.summaries.push_back(summary);
    }

    return result;
}

}  // namespace digitbf::runner
