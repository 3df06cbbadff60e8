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

namespace digitbf::bayes {

// Dirichlet-multinomial equivalence test against the equal-occurrence null:
//
//   log BF01 = log B(a) - log B(a + n) - N ln 10
//
// where B is the generalized beta function and n the digit tallies.  The
// multinomial coefficient cancels between numerator and denominator and is
// never formed.  Finite for all valid inputs; zero when no data are seen.
LogBayesFactor log_bf01_dirichlet(const DigitCounts& counts, const DirichletPrior& prior);

// Same test under a two-component Dirichlet mixture prior:
//
//   log BF01 = -N ln 10 - logsumexp(ln w     + log B(a1+n) - log B(a1),
//                                   ln (1-w) + log B(a2+n) - log B(a2))
//
// Degenerate weights 0 and 1 skip the vanished component.
LogBayesFactor log_bf01_mixture(const DigitCounts& counts, const MixturePrior& prior);

// Evidence of a fresh batch conditional on data already seen: the Dirichlet
// test applied with the prior shifted to the posterior a + n_seen.  Chaining
// these reproduces the single-shot value: BF(y1, y2) = BF(y1) * BF(y2 | y1).
LogBayesFactor log_bf01_conditional(const DirichletPrior& prior, const DigitCounts& seen,
                                    const DigitCounts& fresh);

// The maximum attainable evidence for the null at sample size N: the test
// evaluated on the hypothetical counts nearest perfect uniformity (each
// category floor(N/10), remainder spread one each over the first N mod 10
// categories).  This is the red bounding line of the trajectory plots.
LogBayesFactor max_log_bf01(std::uint64_t n_total, const DirichletPrior& prior);

// Difference between the maximum-evidence bounds under symmetric a = 1 and
// a = 50 priors on uniform hypothetical data; approaches a constant
// (~18.39) as N grows.  Requires N divisible by 10.
double log_bf_gap(std::uint64_t n_total);

// log(exp(x) + exp(y)) without overflow; tolerates -inf inputs.
double log_sum_exp(double x, double y);

}  // namespace digitbf::bayes
