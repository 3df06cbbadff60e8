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

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace digitbf {

inline constexpr int kNumDigits = 10;

// Occurrence tallies for the ten decimal digits; the sufficient statistic of
// every test in this library.
struct DigitCounts {
    std::array<std::uint64_t, kNumDigits> counts{};
    std::uint64_t total = 0;

    void add_digit(unsigned digit) {
        counts[digit] += 1;
        total += 1;
    }

    DigitCounts& operator+=(const DigitCounts& other) {
        for (int j = 0; j < kNumDigits; ++j) counts[j] += other.counts[j];
        total += other.total;
        return *this;
    }

    friend DigitCounts operator+(DigitCounts a, const DigitCounts& b) {
        a += b;
        return a;
    }

    static DigitCounts from_counts(const std::array<std::uint64_t, kNumDigits>& c) {
        DigitCounts out;
        out.counts = c;
        out.total = 0;
        for (auto v : c) out.total += v;
        return out;
    }
};

// Concentration parameters of a ten-category Dirichlet prior; all entries
// must be strictly positive.
struct DirichletPrior {
    std::array<double, kNumDigits> a{};

    static DirichletPrior symmetric(double value) {
        if (!(value > 0.0)) throw std::domain_error("DirichletPrior: concentration must be > 0");
        DirichletPrior p;
        p.a.fill(value);
        return p;
    }

    static DirichletPrior general(const std::array<double, kNumDigits>& values) {
        for (double v : values)
            if (!(v > 0.0)) throw std::domain_error("DirichletPrior: concentration must be > 0");
        DirichletPrior p;
        p.a = values;
        return p;
    }

    double sum() const {
        double s = 0.0;
        for (double v : a) s += v;
        return s;
    }

    bool is_symmetric() const {
        for (double v : a)
            if (v != a[0]) return false;
        return true;
    }
};

// Two-component Dirichlet mixture prior with mixing weight w in [0, 1] on the
// first component.
struct MixturePrior {
    DirichletPrior first;
    DirichletPrior second;
    double weight = 0.5;

    static MixturePrior make(DirichletPrior a1, DirichletPrior a2, double w) {
        if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("MixturePrior: weight must be in [0, 1]");
        return MixturePrior{a1, a2, w};
    }
};

// The equal-occurrence null: every digit has probability exactly 1/10.
struct NullModel {
    static constexpr double digit_probability = 0.1;
};

// Natural-log evidence, stored with the null in the numerator.  All internal
// arithmetic stays on this scale; linear BF values only appear at output
// boundaries.
struct LogBayesFactor {
    double log_bf01 = 0.0;

    double log_bf10() const { return -log_bf01; }
};

}  // namespace digitbf
