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

#include "digitbf/types.hpp"

namespace digitbf::freq {

// Goodness-of-fit statistic against uniform expected counts N/10:
// sum_j (n_j - N/10)^2 / (N/10), nine degrees of freedom.
// Throws std::domain_error when N == 0.
double chisq_stat(const DigitCounts& counts);

// A count vector sitting exactly on the rejection boundary of the level-alpha
// chi-squared test.  Eight cells carry the expected count N/10; the ninth is
// inflated and the tenth deflated so the two remaining summands meet the
// critical value:
//
//   n8 = N/10 + round(sqrt(Q * N / 20)),   n9 = 2N/10 - n8,
//
// with Q the (1 - alpha) chi-squared quantile at `df` degrees of freedom.
// Rounding to integer counts perturbs the statistic by at most ~0.2 for
// N >= 1e4.  The inflated root is taken; the deflated mirror image has the
// same statistic and the same symmetric-prior evidence.
struct ThresholdCounts {
    DigitCounts counts;
    double target_stat = 0.0;  // the quantile the construction aims at
};

// Requires N >= 10 and N divisible by 10 (callers on the 1,000-digit block
// grid always satisfy this), and 0 < alpha < 1.
ThresholdCounts threshold_counts(std::uint64_t n_total, double alpha = 0.05, unsigned df = 9);

// Evidence of the threshold data set: the lower edge of the band inside
// which a level-alpha test does not reject.  Its growth with N is the
// Jeffreys-Lindley phenomenon made visible.
LogBayesFactor threshold_log_bf(std::uint64_t n_total, const DirichletPrior& prior,
                                double alpha = 0.05);

}  // namespace digitbf::freq
