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

#include "digitbf/freq.hpp"

#include <cmath>
#include <stdexcept>

#include "digitbf/bayes.hpp"
#include "digitbf/specfun.hpp"

namespace digitbf::freq {

double chisq_stat(const DigitCounts& counts) {
    if (counts.total == 0) throw std::domain_error("chisq_stat: requires N > 0");
    const double expected = static_cast<double>(counts.total) / 10.0;
    double stat = 0.0;
    for (int j = 0; j < kNumDigits; ++j) {
        const double diff = static_cast<double>(counts.counts[j]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

ThresholdCounts threshold_counts(std::uint64_t n_total, double alpha, unsigned df) {
    if (n_total < 10 || n_total % 10 != 0)
        throw std::domain_error("threshold_counts: N must be >= 10 and divisible by 10");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("threshold_counts: alpha must be in (0, 1)");

    const double quantile = specfun::chisq_quantile(1.0 - alpha, df);
    const std::uint64_t cell = n_total / 10;
    const auto bump = static_cast<std::uint64_t>(
        std::llround(std::sqrt(quantile * static_cast<double>(n_total) / 20.0)));
    if (bump > cell)
        throw std::domain_error("threshold_counts: N too small for the requested level");

    ThresholdCounts out;
    out.target_stat = quantile;
    for (int j = 0; j < 8; ++j) out.counts.counts[j] = cell;
    out.counts.counts[8] = cell + bump;
    out.counts.counts[9] = cell - bump;
    out.counts.total = n_total;
    return out;
}

LogBayesFactor threshold_log_bf(std::uint64_t n_total, const DirichletPrior& prior, double alpha) {
    return bayes::log_bf01_dirichlet(threshold_counts(n_total, alpha).counts, prior);
}

}  // namespace digitbf::freq
