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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "digitbf/specfun.hpp"
#include "support/exact.hpp"

using digitbf::specfun::chisq_cdf;
using digitbf::specfun::chisq_quantile;
using digitbf::specfun::log_gamma;
using digitbf::specfun::log_gen_beta;

TEST_SUITE("specfun") {

TEST_CASE("log_gamma anchor values") {
    CHECK(std::fabs(log_gamma(1.0)) <= 1e-12);
    CHECK(std::fabs(log_gamma(2.0)) <= 1e-12);
    // Gamma(10) = 9! = 362880
    CHECK(log_gamma(10.0) == doctest::Approx(12.801827480081469).epsilon(1e-13));
    // Gamma(1/2) = sqrt(pi), by the reflection identity
    CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-13));
}

TEST_CASE("log_gamma matches exact factorials") {
    for (std::uint64_t n : {5ull, 20ull, 170ull, 1000ull, 5000ull}) {
        const long double expected = digitbf::testing::exact_log_factorial(n);
        const double got = log_gamma(static_cast<double>(n + 1));
        CHECK(std::fabs(got - static_cast<double>(expected)) <=
              1e-13 * std::max(1.0L, std::fabs(expected)));
    }
}

TEST_CASE("log_gamma domain errors") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-3.5), std::domain_error);
}

TEST_CASE("log_gamma recurrence on [0.5, 100]") {
    // lgamma(x+1) - lgamma(x) = ln x
    for (double x = 0.5; x <= 100.0; x += 0.37) {
        const double delta = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
        CHECK(std::fabs(delta) <= 1e-12);
    }
}

TEST_CASE("log_gamma recurrence at large arguments") {
    // the double return is ulp-limited near 2e10, so the evidence pipeline's
    // extended-precision kernel carries the tight bound
    for (double x : {1e6, 1e8, 1e9}) {
        const long double xl = static_cast<long double>(x);
        const long double delta = digitbf::specfun::detail::log_gamma_ld(xl + 1.0L) -
                                  digitbf::specfun::detail::log_gamma_ld(xl) - std::log(xl);
        CHECK(std::fabs(static_cast<double>(delta)) <= 1e-8);
        const double api_delta = log_gamma(x + 1.0) - log_gamma(x) - std::log(x);
        CHECK(std::fabs(api_delta) <= 8e-16 * log_gamma(x + 1.0));
    }
}

TEST_CASE("log_gen_beta anchor values") {
    std::array<double, 10> ones;
    ones.fill(1.0);
    CHECK(log_gen_beta(ones) == doctest::Approx(-12.801827480081469).epsilon(1e-13));

    std::array<double, 10> bumped = ones;
    bumped[0] = 2.0;
    CHECK(log_gen_beta(bumped) == doctest::Approx(-15.104412573075516).epsilon(1e-13));
}

TEST_CASE("log_gen_beta at a = 50 matches exact factorials") {
    std::array<double, 10> fifty;
    fifty.fill(50.0);
    // B(50,...,50) = (49!)^10 / 499!
    const long double expected = 10.0L * digitbf::testing::exact_log_factorial(49) -
                                 digitbf::testing::exact_log_factorial(499);
    const double got = log_gen_beta(fifty);
    CHECK(std::fabs(got - static_cast<double>(expected)) <= 1e-10 * std::fabs(expected));
}

TEST_CASE("log_gen_beta is permutation invariant") {
    std::mt19937 gen(42);
    std::uniform_real_distribution<double> dist(0.1, 60.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::array<double, 10> a;
        for (auto& v : a) v = dist(gen);
        const double reference = log_gen_beta(a);
        std::shuffle(a.begin(), a.end(), gen);
        CHECK(log_gen_beta(a) == doctest::Approx(reference).epsilon(1e-13));
    }
}

TEST_CASE("log_gen_beta domain errors") {
    std::array<double, 10> a;
    a.fill(1.0);
    a[3] = 0.0;
    CHECK_THROWS_AS(log_gen_beta(a), std::domain_error);
    a[3] = -2.0;
    CHECK_THROWS_AS(log_gen_beta(a), std::domain_error);
}

TEST_CASE("log_gen_beta supports fewer categories") {
    // B(1,1,1) = Gamma(1)^3 / Gamma(3) = 1/2
    const std::array<double, 3> a{1.0, 1.0, 1.0};
    CHECK(log_gen_beta(a) == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("chisq_cdf anchor values") {
    CHECK(chisq_cdf(0.0, 9) == 0.0);
    CHECK(std::fabs(chisq_cdf(16.9190, 9) - 0.95) <= 1e-4);
    CHECK(std::fabs(chisq_cdf(8.3428, 9) - 0.50) <= 1e-4);
}

TEST_CASE("chisq_cdf agrees with quadrature") {
    for (double x : {0.5, 2.0, 8.3428, 16.9190, 30.0}) {
        const double oracle = digitbf::testing::chisq_cdf_quadrature(x, 9);
        CHECK(std::fabs(chisq_cdf(x, 9) - oracle) <= 1e-8);
    }
    CHECK(std::fabs(chisq_cdf(3.8415, 1) - digitbf::testing::chisq_cdf_quadrature(3.8415, 1)) <=
          1e-6);
}

TEST_CASE("chisq_cdf domain errors") {
    CHECK_THROWS_AS(chisq_cdf(-1.0, 9), std::domain_error);
    CHECK_THROWS_AS(chisq_cdf(1.0, 0), std::domain_error);
}

TEST_CASE("chisq_quantile anchor values") {
    CHECK(std::fabs(chisq_quantile(0.95, 9) - 16.9190) <= 1e-3);
    // square of the standard-normal 97.5% quantile
    CHECK(std::fabs(chisq_quantile(0.95, 1) - 3.8415) <= 1e-3);
}

TEST_CASE("chisq_quantile domain errors") {
    CHECK_THROWS_AS(chisq_quantile(0.0, 9), std::domain_error);
    CHECK_THROWS_AS(chisq_quantile(1.0, 9), std::domain_error);
    CHECK_THROWS_AS(chisq_quantile(-0.1, 9), std::domain_error);
}

TEST_CASE("chisq quantile/cdf round trip") {
    for (unsigned df = 1; df <= 20; ++df) {
        for (int i = 1; i <= 99; ++i) {
            const double p = i / 100.0;
            const double x = chisq_quantile(p, df);
            CHECK(std::fabs(chisq_cdf(x, df) - p) <= 1e-9);
        }
    }
}

}  // TEST_SUITE
