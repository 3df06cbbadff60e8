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

#include <span>

namespace digitbf::specfun {

// ln Gamma(x) for x > 0 via an upward-shifted Stirling series.
//
// Accuracy: relative error a few machine epsilon over the whole domain;
// absolute error below 1e-12 wherever |ln Gamma(x)| <= ~1e3.  Evidence
// arithmetic that subtracts values of order 1e12 (total counts up to 1e12)
// goes through the extended-precision kernels below so that cancellation
// does not eat the budget.
//
// Throws std::domain_error for x <= 0 (poles are never needed here).
double log_gamma(double x);

// log of the Dirichlet normalizing constant: sum_j ln Gamma(a_j) - ln Gamma(sum_j a_j).
// Accepts any number of categories >= 2; every a_j must be > 0.
double log_gen_beta(std::span<const double> a);

// Regularized lower incomplete gamma P(k/2, x/2): the chi-squared CDF with k
// degrees of freedom.  Series expansion below the mean, Lentz continued
// fraction above.  Absolute error <= 1e-10 (exercised for k up to 1000).
// Throws std::domain_error for x < 0 or k < 1.
double chisq_cdf(double x, unsigned degrees_of_freedom);

// Inverse of chisq_cdf by bracketed bisection; the returned x satisfies
// |chisq_cdf(x, k) - p| <= 1e-10.  Throws std::domain_error unless 0 < p < 1.
double chisq_quantile(double p, unsigned degrees_of_freedom);

namespace detail {

// Extended-precision kernels used by the Bayes-factor pipeline.  Differences
// of these values cancel through ~13 orders of magnitude at the largest
// supported count totals, so intermediate sums are kept in long double.
long double log_gamma_ld(long double x);
long double log_gen_beta_ld(std::span<const double> a);

}  // namespace detail

}  // namespace digitbf::specfun
