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

#include "digitbf/bayes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "digitbf/specfun.hpp"

namespace digitbf::bayes {

namespace {

constexpr long double kLn10 = 2.302585092994045684017991454684364208L;

using specfun::detail::log_gen_beta_ld;

std::array<double, kNumDigits> shifted(const DirichletPrior& prior, const DigitCounts& counts) {
    std::array<double, kNumDigits> out;
    for (int j = 0; j < kNumDigits; ++j)
        out[j] = prior.a[j] + static_cast<double>(counts.counts[j]);
    return out;
}

// log B(a + n) - log B(a) in extended precision; the building block of every
// evidence formula below.
long double log_beta_ratio(const DirichletPrior& prior, const DigitCounts& counts) {
    return log_gen_beta_ld(shifted(prior, counts)) - log_gen_beta_ld(prior.a);
}

}  // namespace

LogBayesFactor log_bf01_dirichlet(const DigitCounts& counts, const DirichletPrior& prior) {
    const long double ratio = log_beta_ratio(prior, counts);
    const long double n_ln10 = static_cast<long double>(counts.total) * kLn10;
    return LogBayesFactor{static_cast<double>(-ratio - n_ln10)};
}

LogBayesFactor log_bf01_mixture(const DigitCounts& counts, const MixturePrior& prior) {
    if (!(prior.weight >= 0.0 && prior.weight <= 1.0))
        throw std::domain_error("log_bf01_mixture: weight must be in [0, 1]");

    const long double n_ln10 = static_cast<long double>(counts.total) * kLn10;
    if (prior.weight == 1.0)
        return LogBayesFactor{static_cast<double>(-log_beta_ratio(prior.first, counts) - n_ln10)};
    if (prior.weight == 0.0)
        return LogBayesFactor{static_cast<double>(-log_beta_ratio(prior.second, counts) - n_ln10)};

    const long double t1 = std::log(static_cast<long double>(prior.weight)) +
                           log_beta_ratio(prior.first, counts);
    const long double t2 = std::log(1.0L - static_cast<long double>(prior.weight)) +
                           log_beta_ratio(prior.second, counts);
    const long double hi = std::max(t1, t2);
    const long double lse = hi + std::log(std::exp(t1 - hi) + std::exp(t2 - hi));
    return LogBayesFactor{static_cast<double>(-n_ln10 - lse)};
}

LogBayesFactor log_bf01_conditional(const DirichletPrior& prior, const DigitCounts& seen,
                                    const DigitCounts& fresh) {
    DirichletPrior posterior;
    posterior.a = shifted(prior, seen);
    return log_bf01_dirichlet(fresh, posterior);
}

LogBayesFactor max_log_bf01(std::uint64_t n_total, const DirichletPrior& prior) {
    DigitCounts uniform;
    const std::uint64_t base = n_total / 10;
    const std::uint64_t remainder = n_total % 10;
    for (int j = 0; j < kNumDigits; ++j)
        uniform.counts[j] = base + (static_cast<std::uint64_t>(j) < remainder ? 1 : 0);
    uniform.total = n_total;
    return log_bf01_dirichlet(uniform, prior);
}

double log_bf_gap(std::uint64_t n_total) {
    if (n_total % 10 != 0) throw std::domain_error("log_bf_gap: N must be divisible by 10");
    const auto a1 = DirichletPrior::symmetric(1.0);
    const auto a50 = DirichletPrior::symmetric(50.0);
    return max_log_bf01(n_total, a1).log_bf01 - max_log_bf01(n_total, a50).log_bf01;
}

double log_sum_exp(double x, double y) {
    if (x == -std::numeric_limits<double>::infinity()) return y;
    if (y == -std::numeric_limits<double>::infinity()) return x;
    const double hi = std::max(x, y);
    return hi + std::log(std::exp(x - hi) + std::exp(y - hi));
}

}  // namespace digitbf::bayes
